#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef COCY_CLI_PATH
#error "COCY_CLI_PATH must point at the built cocy binary"
#endif
#ifndef COCY_TEST_TMPDIR
#error "COCY_TEST_TMPDIR must name a scratch directory"
#endif

namespace {

const std::string kCli = COCY_CLI_PATH;
const std::string kTmp = std::string(COCY_TEST_TMPDIR) + "/cli_scratch_";

int run(const std::string& args) {
  const std::string command = kCli + " " + args + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("sample is deterministic and validate accepts it") {
  const std::string a = kTmp + "a.cocy";
  const std::string b = kTmp + "b.cocy";
  CHECK(run("sample --model strip -p 0.5 -W 64 -H 64 --seed 7 -o " + a) == 0);
  CHECK(run("sample --model strip -p 0.5 -W 64 -H 64 --seed 7 -o " + b) == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(run("validate " + a) == 0);
}

TEST_CASE("every sampler model round-trips through sample and validate") {
  for (const char* model : {"strip -p 0.5", "dpath -p 0.5 -M 4 -W 96 -H 32",
                            "yaguchi --burn-in 32", "stripes", "checker"}) {
    const std::string f = kTmp + "model.cocy";
    const std::string flags(model);
    const std::string size = flags.find("-W") == std::string::npos ? " -W 48 -H 48" : "";
    CHECK(run("sample --model " + flags + size + " --seed 11 -o " + f) == 0);
    CHECK(run("validate " + f) == 0);
  }
}

TEST_CASE("validate exits 2 on an invalid config") {
  const std::string f = kTmp + "indep.cocy";
  CHECK(run("sample --model indep --ph1 0.5 --pv1 0.5 -W 32 -H 32 --seed 3 -o " + f) == 0);
  CHECK(run("validate " + f) == 2);

  const std::string json_path = kTmp + "validate.json";
  CHECK(run("validate " + f + " --json " + json_path) == 2);
  const auto doc = nlohmann::json::parse(slurp(json_path));
  CHECK(doc["valid"] == false);
  CHECK(doc["violations"].size() > 0);
}

TEST_CASE("parse and precondition exit codes") {
  const std::string bad = kTmp + "bad.cocy";
  std::ofstream(bad) << "COCY 1\nW 2 H 2\n00\n";  // truncated
  CHECK(run("validate " + bad) == 1);
  CHECK(run("sample --model strip -p 1.5 -W 8 -H 8 --seed 1 -o " + kTmp + "x.cocy") == 3);
  CHECK(run("sample --model dpath -p 0.5 -W 10 -H 64 --seed 1 -o " + kTmp + "y.cocy") == 3);
  CHECK(run("nonsense") == 1);
}

TEST_CASE("chain dump carries the reversal verdict and stochastic rows") {
  const std::string out = kTmp + "chain.json";
  CHECK(run("chain -p 0.3 -o " + out) == 0);
  const auto doc = nlohmann::json::parse(slurp(out));
  CHECK(doc["reversal_ok"] == true);
  CHECK(doc["p"] == 0.3);
  const auto& P = doc["transition_matrix"];
  REQUIRE(P.size() == 6);
  for (const auto& row : P) {
    double sum = 0;
    for (const auto& cell : row) sum += cell.get<double>();
    CHECK(std::abs(sum - 1.0) <= 1e-12);
  }
  CHECK(double(doc["stationary_residual"]) <= 1e-12);
}

TEST_CASE("analyze writes a report with the documented keys plus CSV curves") {
  const std::string cfg = kTmp + "an.cocy";
  const std::string rep = kTmp + "an.json";
  CHECK(run("sample --model yaguchi -W 96 -H 96 --burn-in 64 --seed 5 -o " + cfg) == 0);
  CHECK(run("analyze " + cfg + " -o " + rep + " --csv-prefix " + kTmp + "an_") == 0);
  const auto doc = nlohmann::json::parse(slurp(rep));
  for (const char* key :
       {"marginals", "clusters", "density", "cones", "directional", "spanning", "dead_ends",
        "meta"})
    CHECK(doc.contains(key));
  CHECK(doc["clusters"]["valid"] == true);
  CHECK(doc["spanning"]["ew_count"].get<int>() >= 1);
  const std::string density_csv = slurp(kTmp + "an_density.csv");
  CHECK(density_csv.find("side,ratio") == 0);
}

TEST_CASE("experiment sweep is scheduling-independent") {
  const std::string out1 = kTmp + "exp1.csv";
  const std::string out2 = kTmp + "exp2.csv";
  const std::string args = "experiment --model strip -p 0.92 --sizes 16,32 --seeds 20 -o ";
  CHECK(run(args + out1 + " --threads 2") == 0);
  CHECK(run(args + out2 + " --threads 1") == 0);
  CHECK(slurp(out1) == slurp(out2));
  const std::string content = slurp(out1);
  CHECK(content.find("model,p,size,seed,ns_spanning,ew_spanning,distinct_f_spanning,version") ==
        0);
  // 2 sizes x 20 seeds + header
  int lines = 0;
  for (char c : content)
    if (c == '\n') ++lines;
  CHECK(lines == 41);
}

TEST_CASE("render produces deterministic images in both formats") {
  const std::string cfg = kTmp + "render.cocy";
  CHECK(run("sample --model checker -W 8 -H 8 -o " + cfg) == 0);
  const std::string p1 = kTmp + "img1.ppm";
  const std::string p2 = kTmp + "img2.ppm";
  CHECK(run("render " + cfg + " --format ppm --scale 4 -o " + p1) == 0);
  CHECK(run("render " + cfg + " --format ppm --scale 4 -o " + p2) == 0);
  const std::string ppm = slurp(p1);
  CHECK(ppm == slurp(p2));
  CHECK(ppm.substr(0, 2) == "P6");
  CHECK(ppm.find("33 33") != std::string::npos);  // (4*8+1)^2

  const std::string svg_path = kTmp + "img.svg";
  CHECK(run("render " + cfg + " --format svg --left-boundaries --clusters -o " + svg_path) == 0);
  CHECK(slurp(svg_path).find("<svg") != std::string::npos);
}
