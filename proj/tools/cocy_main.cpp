// cocy: sample, validate, analyze, and render cocycle edge configurations.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cocy/analysis.hpp"
#include "cocy/codec.hpp"
#include "cocy/chain.hpp"
#include "cocy/render.hpp"
#include "cocy/report.hpp"
#include "cocy/samplers.hpp"
#include "cocy/version.hpp"

namespace {

using namespace cocy;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitIoError = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitPrecondition = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("failed writing " + path);
}

struct SampleArgs {
  std::string model;
  double p = 0.5;
  int width = 256;
  int height = 256;
  std::uint64_t seed = 0;
  int flat_half_width = 8;
  double rho_blue = 0.3;
  double rho_red = 0.3;
  double hop_prob = 0.5;
  int burn_in = 256;
  double ph1 = 0.5;
  double pv1 = 0.5;
  int shift_x = 0;
  int shift_y = 0;
  std::string out;
  std::string colors_out;
};

int run_sample(const SampleArgs& args) {
  EdgeConfig cfg(1, 1);
  std::string colors_text;
  if (args.model == "strip") {
    cfg = sample_strip_quadrant({args.p, args.width, args.height, args.seed});
  } else if (args.model == "dpath") {
    cfg = sample_via_directed_path(args.p, {args.flat_half_width, args.width, args.height},
                                   args.seed)
              .config;
  } else if (args.model == "yaguchi") {
    YaguchiSample sample = sample_yaguchi({args.rho_blue, args.rho_red, args.hop_prob, args.width,
                                           args.height, args.burn_in, args.seed});
    colors_text = sample.colors.to_text();
    cfg = std::move(sample.config);
  } else if (args.model == "indep") {
    cfg = sample_independent({args.ph1, args.pv1, args.width, args.height, args.seed});
  } else if (args.model == "stripes") {
    cfg = fixture_stripes(args.width, args.height);
  } else if (args.model == "checker") {
    cfg = fixture_checkerboard(args.width, args.height, args.shift_x, args.shift_y);
  } else {
    throw DomainError("unknown model: " + args.model);
  }
  write_file(args.out, encode_config(cfg));
  if (!args.colors_out.empty() && !colors_text.empty()) write_file(args.colors_out, colors_text);
  return kExitOk;
}

int run_validate(const std::string& in_path, const std::string& json_path) {
  const EdgeConfig cfg = decode_config(read_file(in_path));
  const ValidationReport report = validate_cocycle(cfg);
  if (!json_path.empty()) {
    json doc;
    doc["valid"] = report.valid;
    doc["violations"] = json::array();
    for (const Vertex& z : report.violations) doc["violations"].push_back({z.x, z.y});
    doc["meta"] = {{"version", kVersion}, {"input", in_path}};
    write_file(json_path, doc.dump(2) + "\n");
  }
  if (!report.valid) {
    std::cerr << report.violations.size() << " plaquette violations; first at ("
              << report.violations[0].x << "," << report.violations[0].y << ")\n";
    return kExitInvalid;
  }
  return kExitOk;
}

int run_analyze(const std::string& in_path, const std::string& out_path,
                const std::string& csv_prefix, double cone_eps) {
  const EdgeConfig cfg = decode_config(read_file(in_path));
  ReportOptions options;
  options.cone_eps = cone_eps;
  options.meta["input"] = in_path;
  const AnalysisReport report = analyze_config(cfg, options);
  write_file(out_path, report_to_json(report));
  if (!csv_prefix.empty())
    for (const auto& [name, content] : report_to_csv(report))
      write_file(csv_prefix + name + ".csv", content);
  return kExitOk;
}

int run_chain(double p, const std::string& out_path) {
  const TransitionMatrix6 P = derive_transition_matrix(p);
  const Dist6 pi = stationary_distribution(P);
  json doc;
  doc["p"] = p;
  doc["states"] = SquareState::kCodes;
  json rows = json::array();
  for (int i = 0; i < SquareState::kCount; ++i) {
    json row = json::array();
    for (int j = 0; j < SquareState::kCount; ++j) row.push_back(P.at(i, j));
    rows.push_back(row);
  }
  doc["transition_matrix"] = rows;
  doc["stationary"] = pi.p;
  doc["stationary_residual"] = stationary_residual(P, pi);
  doc["reversal_ok"] = reversal_check(P, pi);
  const BackwardCompletionTable table = backward_completion_distribution(P, pi);
  json backward;
  for (int top = 0; top < 2; ++top)
    for (int right = 0; right < 2; ++right) {
      const std::string key = "top" + std::to_string(top) + "_right" + std::to_string(right);
      backward[key] = table.probability[top][right];
    }
  doc["backward_completion"] = backward;
  doc["meta"] = {{"version", kVersion}};
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
  return kExitOk;
}

struct ExperimentArgs {
  std::string model = "strip";
  double p = 0.5;
  std::vector<int> sizes = {32, 64, 128, 256};
  int seeds = 200;
  int threads = 0;
  std::string out;
  double rho_blue = 0.3;
  double rho_red = 0.3;
  double hop_prob = 0.5;
  int burn_in = 256;
};

struct ExperimentRow {
  int size = 0;
  std::uint64_t seed = 0;
  SpanningStats stats;
};

ExperimentRow experiment_job(const ExperimentArgs& args, int size, std::uint64_t seed) {
  EdgeConfig cfg(1, 1);
  if (args.model == "strip") {
    cfg = sample_strip_quadrant({args.p, size, size, seed});
  } else if (args.model == "yaguchi") {
    cfg = sample_yaguchi({args.rho_blue, args.rho_red, args.hop_prob, size, size, args.burn_in,
                          seed})
              .config;
  } else {
    throw DomainError("experiment supports models strip and yaguchi");
  }
  const HeightField hf = integrate_height(cfg, Vertex{0, 0});
  const ClusterSet cs = zero_clusters(cfg, &hf);
  return ExperimentRow{size, seed, spanning_stats(cs)};
}

// Jobs fan out over a small pool; rows are written in (size, seed) order so
// the output does not depend on scheduling.
int run_experiment(const ExperimentArgs& args) {
  std::vector<std::pair<int, std::uint64_t>> jobs;
  for (int size : args.sizes)
    for (int seed = 0; seed < args.seeds; ++seed)
      jobs.emplace_back(size, static_cast<std::uint64_t>(seed));

  std::vector<ExperimentRow> rows(jobs.size());
  const unsigned n_threads =
      args.threads > 0 ? static_cast<unsigned>(args.threads)
                       : std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::mutex error_mutex;
  std::string first_error;
  for (unsigned t = 0; t < n_threads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= jobs.size()) return;
        try {
          rows[i] = experiment_job(args, jobs[i].first, jobs[i].second);
        } catch (const std::exception& e) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (first_error.empty()) first_error = e.what();
          return;
        }
      }
    });
  for (std::thread& t : pool) t.join();
  if (!first_error.empty()) throw std::runtime_error(first_error);

  std::ostringstream out;
  out << "model,p,size,seed,ns_spanning,ew_spanning,distinct_f_spanning,version\n";
  for (const ExperimentRow& row : rows)
    out << args.model << "," << args.p << "," << row.size << "," << row.seed << ","
        << row.stats.ns_count << "," << row.stats.ew_count << ","
        << row.stats.distinct_f_spanning << "," << kVersion << "\n";
  write_file(args.out, out.str());
  return kExitOk;
}

struct RenderArgs {
  std::string in;
  std::string out;
  std::string format = "ppm";
  int scale = 4;
  bool clusters = false;
  bool cone = false;
  bool boundaries = false;
  double cone_eps = 0.2;
};

int run_render(const RenderArgs& args) {
  const EdgeConfig cfg = decode_config(read_file(args.in));
  RenderStyle style;
  style.scale = args.scale;
  style.overlay_clusters = args.clusters;
  style.overlay_cone = args.cone;
  style.overlay_left_boundaries = args.boundaries;
  style.cone_eps = args.cone_eps;
  style.metadata = "cocy " + std::string(kVersion) + " input=" + args.in;

  RenderOverlays overlays;
  ClusterSet cs(1, 1);
  std::vector<StaircasePath> boundaries;
  if (args.clusters || args.boundaries) {
    cs = zero_clusters(cfg);
    overlays.clusters = &cs;
    if (args.boundaries) {
      for (std::int32_t id = 0; id < cs.cluster_count(); ++id) {
        const ClusterInfo& info = cs.clusters[id];
        const bool spans = (info.touches_n && info.touches_s) ||
                           (info.touches_e && info.touches_w);
        if (!spans) continue;
        try {
          const LeftBoundary lb = left_boundary(cs, id, cfg);
          for (const StaircasePath& seg : lb.segments) boundaries.push_back(seg);
        } catch (const NoVerticalEdges&) {
        }
      }
      overlays.left_boundaries = &boundaries;
    }
  }

  const std::string bytes =
      args.format == "svg" ? render_svg(cfg, style, overlays) : render_ppm(cfg, style, overlays);
  write_file(args.out, bytes);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cocycle lattice sampling and analysis"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  SampleArgs sample;
  CLI::App* cmd_sample = app.add_subcommand("sample", "sample a configuration and write COCY");
  cmd_sample->add_option("--model", sample.model, "strip|dpath|yaguchi|indep|stripes|checker")
      ->required();
  cmd_sample->add_option("-p,--p", sample.p, "label-1 probability for strip/dpath");
  cmd_sample->add_option("-W,--width", sample.width)->check(CLI::PositiveNumber);
  cmd_sample->add_option("-H,--height", sample.height)->check(CLI::PositiveNumber);
  cmd_sample->add_option("--seed", sample.seed);
  cmd_sample->add_option("--flat-half-width,-M", sample.flat_half_width);
  cmd_sample->add_option("--rho-blue", sample.rho_blue);
  cmd_sample->add_option("--rho-red", sample.rho_red);
  cmd_sample->add_option("--lambda", sample.hop_prob);
  cmd_sample->add_option("--burn-in", sample.burn_in);
  cmd_sample->add_option("--ph1", sample.ph1);
  cmd_sample->add_option("--pv1", sample.pv1);
  cmd_sample->add_option("--shift-x", sample.shift_x);
  cmd_sample->add_option("--shift-y", sample.shift_y);
  cmd_sample->add_option("-o,--out", sample.out)->required();
  cmd_sample->add_option("--colors-out", sample.colors_out,
                         "write the yaguchi color grid (debugging)");

  std::string validate_in, validate_json;
  CLI::App* cmd_validate = app.add_subcommand("validate", "check the cocycle identity");
  cmd_validate->add_option("input", validate_in)->required();
  cmd_validate->add_option("--json", validate_json, "write a JSON validation report");

  std::string analyze_in, analyze_out, analyze_csv;
  double analyze_eps = 0.2;
  CLI::App* cmd_analyze = app.add_subcommand("analyze", "full diagnostics report");
  cmd_analyze->add_option("input", analyze_in)->required();
  cmd_analyze->add_option("-o,--out", analyze_out)->required();
  cmd_analyze->add_option("--csv-prefix", analyze_csv, "also write <prefix><curve>.csv files");
  cmd_analyze->add_option("--cone-eps", analyze_eps);

  double chain_p = 0.5;
  std::string chain_out;
  CLI::App* cmd_chain = app.add_subcommand("chain", "dump the six-state chain algebra as JSON");
  cmd_chain->add_option("-p,--p", chain_p)->required();
  cmd_chain->add_option("-o,--out", chain_out, "output path (stdout when omitted)");

  ExperimentArgs experiment;
  CLI::App* cmd_experiment =
      app.add_subcommand("experiment", "spanning-probability sweep over sizes and seeds");
  cmd_experiment->add_option("--model", experiment.model, "strip|yaguchi");
  cmd_experiment->add_option("-p,--p", experiment.p);
  cmd_experiment->add_option("--sizes", experiment.sizes)->delimiter(',');
  cmd_experiment->add_option("--seeds", experiment.seeds)->check(CLI::PositiveNumber);
  cmd_experiment->add_option("--threads", experiment.threads);
  cmd_experiment->add_option("--rho-blue", experiment.rho_blue);
  cmd_experiment->add_option("--rho-red", experiment.rho_red);
  cmd_experiment->add_option("--lambda", experiment.hop_prob);
  cmd_experiment->add_option("--burn-in", experiment.burn_in);
  cmd_experiment->add_option("-o,--out", experiment.out)->required();

  RenderArgs render;
  CLI::App* cmd_render = app.add_subcommand("render", "write a PPM or SVG image");
  cmd_render->add_option("input", render.in)->required();
  cmd_render->add_option("-o,--out", render.out)->required();
  cmd_render->add_option("--format", render.format)->check(CLI::IsMember({"ppm", "svg"}));
  cmd_render->add_option("--scale", render.scale)->check(CLI::PositiveNumber);
  cmd_render->add_flag("--clusters", render.clusters);
  cmd_render->add_flag("--cone", render.cone);
  cmd_render->add_flag("--left-boundaries", render.boundaries);
  cmd_render->add_option("--cone-eps", render.cone_eps);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitIoError;
  }

  try {
    if (cmd_sample->parsed()) return run_sample(sample);
    if (cmd_validate->parsed()) return run_validate(validate_in, validate_json);
    if (cmd_analyze->parsed()) return run_analyze(analyze_in, analyze_out, analyze_csv, analyze_eps);
    if (cmd_chain->parsed()) return run_chain(chain_p, chain_out);
    if (cmd_experiment->parsed()) return run_experiment(experiment);
    if (cmd_render->parsed()) return run_render(render);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const DegenerateMarginals& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const PathOutOfWindow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  }
  return kExitIoError;
}
