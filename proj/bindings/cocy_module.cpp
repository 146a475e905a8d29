#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cocy/analysis.hpp"
#include "cocy/chain.hpp"
#include "cocy/codec.hpp"
#include "cocy/render.hpp"
#include "cocy/report.hpp"
#include "cocy/samplers.hpp"
#include "cocy/version.hpp"

namespace py = pybind11;
using namespace cocy;

namespace {

py::array_t<std::uint8_t> h_labels_array(const EdgeConfig& cfg) {
  py::array_t<std::uint8_t> out({cfg.height() + 1, cfg.width()});
  auto view = out.mutable_unchecked<2>();
  for (int y = 0; y <= cfg.height(); ++y)
    for (int x = 0; x < cfg.width(); ++x) view(y, x) = cfg.h(x, y);
  return out;
}

py::array_t<std::uint8_t> v_labels_array(const EdgeConfig& cfg) {
  py::array_t<std::uint8_t> out({cfg.height(), cfg.width() + 1});
  auto view = out.mutable_unchecked<2>();
  for (int y = 0; y < cfg.height(); ++y)
    for (int x = 0; x <= cfg.width(); ++x) view(y, x) = cfg.v(x, y);
  return out;
}

EdgeConfig config_from_arrays(py::array_t<std::uint8_t> h, py::array_t<std::uint8_t> v) {
  const auto hv = h.unchecked<2>();
  const auto vv = v.unchecked<2>();
  const int W = static_cast<int>(hv.shape(1));
  const int H = static_cast<int>(hv.shape(0)) - 1;
  if (vv.shape(0) != H || vv.shape(1) != W + 1)
    throw DomainError("label array shapes must be (H+1,W) and (H,W+1)");
  EdgeConfig cfg(W, H);
  for (int y = 0; y <= H; ++y)
    for (int x = 0; x < W; ++x) cfg.set_h(x, y, hv(y, x) != 0);
  for (int y = 0; y < H; ++y)
    for (int x = 0; x <= W; ++x) cfg.set_v(x, y, vv(y, x) != 0);
  return cfg;
}

py::array_t<std::int32_t> height_array(const HeightField& hf) {
  py::array_t<std::int32_t> out({hf.height() + 1, hf.width() + 1});
  auto view = out.mutable_unchecked<2>();
  for (int y = 0; y <= hf.height(); ++y)
    for (int x = 0; x <= hf.width(); ++x) view(y, x) = hf.at(x, y);
  return out;
}

py::array_t<std::int32_t> cluster_ids_array(const ClusterSet& cs) {
  py::array_t<std::int32_t> out({cs.height() + 1, cs.width() + 1});
  auto view = out.mutable_unchecked<2>();
  for (int y = 0; y <= cs.height(); ++y)
    for (int x = 0; x <= cs.width(); ++x) view(y, x) = cs.id_at(x, y);
  return out;
}

}  // namespace

PYBIND11_MODULE(_cocy, m) {
  m.doc() = "Cocycle edge-labeling samplers and percolation analysis";
  m.attr("__version__") = kVersion;

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CocycleViolation>(m, "CocycleViolationError", PyExc_ValueError);
  py::register_exception<PathOutOfWindow>(m, "PathOutOfWindowError", PyExc_ValueError);
  py::register_exception<DegenerateMarginals>(m, "DegenerateMarginalsError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "CocyParseError", PyExc_ValueError);

  py::class_<Vertex>(m, "Vertex")
      .def(py::init<int, int>(), py::arg("x"), py::arg("y"))
      .def_readwrite("x", &Vertex::x)
      .def_readwrite("y", &Vertex::y)
      .def("__repr__", [](const Vertex& z) {
        return "Vertex(" + std::to_string(z.x) + ", " + std::to_string(z.y) + ")";
      });

  py::class_<EdgeConfig>(m, "EdgeConfig")
      .def(py::init<int, int>(), py::arg("width"), py::arg("height"))
      .def_static("from_arrays", &config_from_arrays, py::arg("h_labels"), py::arg("v_labels"))
      .def_property_readonly("width", &EdgeConfig::width)
      .def_property_readonly("height", &EdgeConfig::height)
      .def("h", &EdgeConfig::h, py::arg("x"), py::arg("y"))
      .def("v", &EdgeConfig::v, py::arg("x"), py::arg("y"))
      .def("set_h", &EdgeConfig::set_h)
      .def("set_v", &EdgeConfig::set_v)
      .def("h_labels", &h_labels_array)
      .def("v_labels", &v_labels_array)
      .def("__eq__", [](const EdgeConfig& a, const EdgeConfig& b) { return a == b; });

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("valid", &ValidationReport::valid)
      .def_property_readonly("violations", [](const ValidationReport& r) {
        std::vector<std::pair<int, int>> out;
        for (const Vertex& z : r.violations) out.emplace_back(z.x, z.y);
        return out;
      });

  py::class_<HeightField>(m, "HeightField")
      .def_property_readonly("width", &HeightField::width)
      .def_property_readonly("height", &HeightField::height)
      .def_property_readonly("anchor", &HeightField::anchor)
      .def("at", &HeightField::at, py::arg("x"), py::arg("y"))
      .def("f", &HeightField::f, py::arg("z"))
      .def("values", &height_array);

  py::class_<Marginals>(m, "Marginals")
      .def_readonly("h_hat", &Marginals::h_hat)
      .def_readonly("v_hat", &Marginals::v_hat)
      .def_readonly("h_ones", &Marginals::h_ones)
      .def_readonly("h_total", &Marginals::h_total)
      .def_readonly("v_ones", &Marginals::v_ones)
      .def_readonly("v_total", &Marginals::v_total);

  m.def("plaquette_residual",
        [](int left, int top, int right, int bottom) {
          return plaquette_residual(SquareLabels{
              static_cast<std::uint8_t>(left), static_cast<std::uint8_t>(top),
              static_cast<std::uint8_t>(right), static_cast<std::uint8_t>(bottom)});
        },
        py::arg("left"), py::arg("top"), py::arg("right"), py::arg("bottom"));
  m.def("validate_cocycle", &validate_cocycle);
  m.def(
      "integrate_height",
      [](const EdgeConfig& cfg, std::pair<int, int> anchor) {
        return integrate_height(cfg, Vertex{anchor.first, anchor.second});
      },
      py::arg("cfg"), py::arg("anchor") = std::pair<int, int>{0, 0});
  m.def(
      "f_along_path",
      [](const EdgeConfig& cfg, const std::vector<std::pair<int, int>>& vertices) {
        LatticePath path;
        for (auto [x, y] : vertices) path.vertices.push_back(Vertex{x, y});
        return f_along_path(cfg, path);
      },
      py::arg("cfg"), py::arg("vertices"));
  m.def("marginals", &marginals);
  m.def(
      "cone_contains",
      [](double alpha, double eps, int x, int y) {
        return cone_contains(ConeSpec(alpha, eps), Vertex{x, y});
      },
      py::arg("alpha"), py::arg("epsilon"), py::arg("x"), py::arg("y"));

  // chain
  py::class_<TransitionMatrix6>(m, "TransitionMatrix6")
      .def("matrix",
           [](const TransitionMatrix6& P) {
             py::array_t<double> out({6, 6});
             auto view = out.mutable_unchecked<2>();
             for (int i = 0; i < 6; ++i)
               for (int j = 0; j < 6; ++j) view(i, j) = P.at(i, j);
             return out;
           })
      .def("at", &TransitionMatrix6::at);
  py::class_<Dist6>(m, "Dist6")
      .def("probabilities", [](const Dist6& d) { return d.p; })
      .def("at", &Dist6::at);
  m.attr("SQUARE_STATES") = SquareState::kCodes;
  m.def("complete_square",
        [](int left, int bottom, bool heads) { return complete_square(left, bottom, heads).code(); },
        py::arg("left"), py::arg("bottom"), py::arg("heads"));
  m.def("derive_transition_matrix", &derive_transition_matrix, py::arg("p"));
  m.def("stationary_distribution", &stationary_distribution);
  m.def("reversal_check", &reversal_check);
  m.def("backward_completion_distribution", [](const TransitionMatrix6& P, const Dist6& pi) {
    const BackwardCompletionTable table = backward_completion_distribution(P, pi);
    py::dict out;
    for (int top = 0; top < 2; ++top)
      for (int right = 0; right < 2; ++right)
        out[py::make_tuple(top, right)] = table.probability[top][right];
    return out;
  });

  // samplers
  m.def(
      "sample_strip_quadrant",
      [](double p, int width, int height, std::uint64_t seed) {
        return sample_strip_quadrant({p, width, height, seed});
      },
      py::arg("p"), py::arg("width"), py::arg("height"), py::arg("seed") = 0);
  m.def(
      "sample_via_directed_path",
      [](double p, int flat_half_width, int width, int height, std::uint64_t seed) {
        DirectedPathSample sample =
            sample_via_directed_path(p, {flat_half_width, width, height}, seed);
        std::vector<std::pair<int, int>> path;
        for (const Vertex& z : sample.path.vertices) path.emplace_back(z.x, z.y);
        return py::make_tuple(std::move(sample.config), std::move(path));
      },
      py::arg("p"), py::arg("flat_half_width"), py::arg("width"), py::arg("height"),
      py::arg("seed") = 0);
  py::class_<ColorField>(m, "ColorField")
      .def_readonly("width", &ColorField::width)
      .def_readonly("height", &ColorField::height)
      .def("color_at",
           [](const ColorField& cf, int x, int y) {
             switch (cf.color_at(x, y)) {
               case SiteColor::Blue: return "blue";
               case SiteColor::Red: return "red";
               case SiteColor::Green: return "green";
               default: return "empty";
             }
           })
      .def("green_h", [](const ColorField& cf, int x, int y) { return cf.green_h.get(y, x); })
      .def("green_v", [](const ColorField& cf, int x, int y) { return cf.green_v.get(y, x); })
      .def("to_text", &ColorField::to_text);
  m.def(
      "sample_yaguchi",
      [](double rho_blue, double rho_red, double hop_prob, int width, int height, int burn_in,
         std::uint64_t seed) {
        YaguchiSample sample =
            sample_yaguchi({rho_blue, rho_red, hop_prob, width, height, burn_in, seed});
        return py::make_tuple(std::move(sample.colors), std::move(sample.config));
      },
      py::arg("rho_blue") = 0.3, py::arg("rho_red") = 0.3, py::arg("hop_prob") = 0.5,
      py::arg("width") = 256, py::arg("height") = 256, py::arg("burn_in") = 256,
      py::arg("seed") = 0);
  m.def(
      "sample_independent",
      [](double ph1, double pv1, int width, int height, std::uint64_t seed) {
        return sample_independent({ph1, pv1, width, height, seed});
      },
      py::arg("ph1"), py::arg("pv1"), py::arg("width"), py::arg("height"), py::arg("seed") = 0);
  m.def("fixture_stripes", &fixture_stripes, py::arg("width"), py::arg("height"));
  m.def("fixture_checkerboard", &fixture_checkerboard, py::arg("width"), py::arg("height"),
        py::arg("shift_x") = 0, py::arg("shift_y") = 0);

  // analysis
  py::class_<ClusterInfo>(m, "ClusterInfo")
      .def_readonly("size", &ClusterInfo::size)
      .def_readonly("min_x", &ClusterInfo::min_x)
      .def_readonly("min_y", &ClusterInfo::min_y)
      .def_readonly("max_x", &ClusterInfo::max_x)
      .def_readonly("max_y", &ClusterInfo::max_y)
      .def_readonly("touches_w", &ClusterInfo::touches_w)
      .def_readonly("touches_e", &ClusterInfo::touches_e)
      .def_readonly("touches_s", &ClusterInfo::touches_s)
      .def_readonly("touches_n", &ClusterInfo::touches_n)
      .def_readonly("has_f", &ClusterInfo::has_f)
      .def_readonly("f", &ClusterInfo::f);
  py::class_<ClusterSet>(m, "ClusterSet")
      .def_property_readonly("cluster_count", &ClusterSet::cluster_count)
      .def_readonly("clusters", &ClusterSet::clusters)
      .def("id_at", &ClusterSet::id_at)
      .def("ids", &cluster_ids_array);
  m.def(
      "zero_clusters",
      [](const EdgeConfig& cfg, const HeightField* hf) { return zero_clusters(cfg, hf); },
      py::arg("cfg"), py::arg("height_field") = nullptr);
  py::class_<SpanningStats>(m, "SpanningStats")
      .def_readonly("ns_count", &SpanningStats::ns_count)
      .def_readonly("ew_count", &SpanningStats::ew_count)
      .def_readonly("distinct_f_ns", &SpanningStats::distinct_f_ns)
      .def_readonly("distinct_f_ew", &SpanningStats::distinct_f_ew)
      .def_readonly("distinct_f_spanning", &SpanningStats::distinct_f_spanning);
  m.def("spanning_stats", &spanning_stats);
  m.def(
      "dead_end_scan",
      [](const EdgeConfig& cfg, int min_path_length) {
        const DeadEndScan scan = dead_end_scan(cfg, min_path_length);
        std::vector<std::pair<int, int>> locations;
        for (const Vertex& z : scan.locations) locations.emplace_back(z.x, z.y);
        return py::make_tuple(scan.count, locations);
      },
      py::arg("cfg"), py::arg("min_path_length"));

  // io
  m.def("encode_config", [](const EdgeConfig& cfg) { return py::bytes(encode_config(cfg)); });
  m.def("decode_config", [](const std::string& bytes) { return decode_config(bytes); });
  m.def(
      "render_ppm",
      [](const EdgeConfig& cfg, int scale) {
        RenderStyle style;
        style.scale = scale;
        return py::bytes(render_ppm(cfg, style));
      },
      py::arg("cfg"), py::arg("scale") = 4);
  m.def(
      "analyze_json",
      [](const EdgeConfig& cfg, double cone_eps) {
        ReportOptions options;
        options.cone_eps = cone_eps;
        return report_to_json(analyze_config(cfg, options));
      },
      py::arg("cfg"), py::arg("cone_eps") = 0.2);
}
