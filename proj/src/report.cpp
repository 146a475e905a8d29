#include "cocy/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "cocy/version.hpp"

namespace cocy {

using nlohmann::json;

AnalysisReport analyze_config(const EdgeConfig& cfg, const ReportOptions& options) {
  AnalysisReport report;
  report.options = options;
  report.width = cfg.width();
  report.height = cfg.height();
  report.marg = marginals(cfg);

  const ValidationReport validation = validate_cocycle(cfg);
  report.valid = validation.valid;
  report.violation_count = static_cast<std::int64_t>(validation.violations.size());

  std::vector<int> radii;
  for (int r = 8; r <= std::max(cfg.width(), cfg.height()); r *= 2) radii.push_back(r);

  if (report.valid) {
    const Vertex center{cfg.width() / 2, cfg.height() / 2};
    const HeightField hf = integrate_height(cfg, center);
    const ClusterSet cs = zero_clusters(cfg, &hf);
    report.cluster_count = cs.cluster_count();
    for (std::int32_t id = 0; id < cs.cluster_count(); ++id)
      if (cs.clusters[id].size > report.largest_cluster_size) {
        report.largest_cluster_size = cs.clusters[id].size;
        report.largest_cluster_id = id;
      }
    report.largest_density =
        cluster_density(cs, report.largest_cluster_id, centered_square_family(cfg.width(), cfg.height()));
    report.spanning = spanning_stats(cs);

    const bool degenerate = !(report.marg.h_hat > 0 && report.marg.h_hat < 1 &&
                              report.marg.v_hat > 0 && report.marg.v_hat < 1);
    if (!degenerate) {
      report.has_height_analysis = true;
      std::vector<int> cone_radii;
      for (int r : radii)
        if (r <= std::min(center.x, cfg.width() - center.x) &&
            r <= std::min(center.y, cfg.height() - center.y))
          cone_radii.push_back(r);
      report.cone = cone_outside_fraction(hf, report.marg, options.cone_eps, cone_radii);

      const double h = report.marg.h_hat;
      const double v = report.marg.v_hat;
      // keep the radii whose ray point stays inside the window
      auto probe = [&](DirectionalResult& slot, double alpha) {
        std::vector<int> kept;
        for (int r : radii) {
          try {
            directional_ratio(hf, alpha, false, {r}, h, v);
            kept.push_back(r);
          } catch (const PathOutOfWindow&) {
          } catch (const DomainError&) {
          }
        }
        if (!kept.empty()) slot = directional_ratio(hf, alpha, false, kept, h, v);
      };
      probe(report.east, 0.0);
      probe(report.north, std::numeric_limits<double>::infinity());
      probe(report.alpha0, -h / v);
    }
  } else {
    const ClusterSet cs = zero_clusters(cfg, nullptr);
    report.cluster_count = cs.cluster_count();
    for (std::int32_t id = 0; id < cs.cluster_count(); ++id)
      if (cs.clusters[id].size > report.largest_cluster_size) {
        report.largest_cluster_size = cs.clusters[id].size;
        report.largest_cluster_id = id;
      }
    report.largest_density = cluster_density(cs, report.largest_cluster_id,
                                             centered_square_family(cfg.width(), cfg.height()));
  }

  for (int L : options.dead_end_lengths) report.dead_ends.push_back(dead_end_scan(cfg, L));
  return report;
}

namespace {

json meta_json(const AnalysisReport& report) {
  json meta;
  meta["version"] = kVersion;
  for (const auto& [key, value] : report.options.meta) meta[key] = value;
  return meta;
}

json directional_json(const DirectionalResult& result) {
  json block;
  block["limit"] = result.limit;
  block["points"] = json::array();
  for (const DirectionalPoint& pt : result.points)
    block["points"].push_back({{"radius", pt.radius},
                               {"z", {pt.z.x, pt.z.y}},
                               {"ratio", pt.ratio}});
  return block;
}

}  // namespace

std::string report_to_json(const AnalysisReport& report) {
  json doc;
  doc["marginals"] = {{"h_hat", report.marg.h_hat},
                      {"v_hat", report.marg.v_hat},
                      {"h_ones", report.marg.h_ones},
                      {"h_total", report.marg.h_total},
                      {"v_ones", report.marg.v_ones},
                      {"v_total", report.marg.v_total}};
  doc["clusters"] = {{"count", report.cluster_count},
                     {"largest_size", report.largest_cluster_size},
                     {"largest_id", report.largest_cluster_id},
                     {"valid", report.valid},
                     {"violations", report.violation_count}};
  json density = json::array();
  for (std::size_t i = 0; i < report.largest_density.rects.size(); ++i) {
    const Rect& r = report.largest_density.rects[i];
    density.push_back({{"rect", {r.x0, r.y0, r.x1, r.y1}},
                       {"side", r.x1 - r.x0 + 1},
                       {"ratio", report.largest_density.ratios[i]}});
  }
  doc["density"] = density;

  json cones = json::array();
  for (const ConeFraction& cf : report.cone)
    cones.push_back({{"radius", cf.radius},
                     {"zero_count", cf.zero_count},
                     {"outside_count", cf.outside_count},
                     {"fraction", cf.fraction}});
  doc["cones"] = cones;

  json directional;
  if (report.has_height_analysis) {
    directional["east"] = directional_json(report.east);
    directional["north"] = directional_json(report.north);
    directional["alpha0"] = directional_json(report.alpha0);
  }
  doc["directional"] = directional;

  doc["spanning"] = {{"ns_count", report.spanning.ns_count},
                     {"ew_count", report.spanning.ew_count},
                     {"distinct_f_ns", report.spanning.distinct_f_ns},
                     {"distinct_f_ew", report.spanning.distinct_f_ew},
                     {"distinct_f_spanning", report.spanning.distinct_f_spanning}};

  json dead_ends = json::array();
  for (const DeadEndScan& scan : report.dead_ends)
    dead_ends.push_back({{"min_path_length", scan.min_path_length}, {"count", scan.count}});
  doc["dead_ends"] = dead_ends;

  doc["meta"] = meta_json(report);
  return doc.dump(2) + "\n";
}

namespace {

std::string meta_columns_header(const AnalysisReport& report) {
  std::string header;
  for (const auto& [key, value] : report.options.meta) header += "," + key;
  return header + ",version";
}

std::string meta_columns_row(const AnalysisReport& report) {
  std::string row;
  for (const auto& [key, value] : report.options.meta) row += "," + value;
  return row + "," + kVersion;
}

}  // namespace

std::map<std::string, std::string> report_to_csv(const AnalysisReport& report) {
  std::map<std::string, std::string> files;
  const std::string meta_header = meta_columns_header(report);
  const std::string meta_row = meta_columns_row(report);

  {
    std::ostringstream out;
    out << "side,ratio" << meta_header << "\n";
    for (std::size_t i = 0; i < report.largest_density.rects.size(); ++i) {
      const Rect& r = report.largest_density.rects[i];
      out << (r.x1 - r.x0 + 1) << "," << report.largest_density.ratios[i] << meta_row << "\n";
    }
    files["density"] = out.str();
  }
  {
    std::ostringstream out;
    out << "radius,zero_count,outside_count,fraction" << meta_header << "\n";
    for (const ConeFraction& cf : report.cone)
      out << cf.radius << "," << cf.zero_count << "," << cf.outside_count << "," << cf.fraction
          << meta_row << "\n";
    files["cones"] = out.str();
  }
  {
    std::ostringstream out;
    out << "ray,radius,ratio,limit" << meta_header << "\n";
    auto rows = [&](const char* name, const DirectionalResult& result) {
      for (const DirectionalPoint& pt : result.points)
        out << name << "," << pt.radius << "," << pt.ratio << "," << result.limit << meta_row
            << "\n";
    };
    if (report.has_height_analysis) {
      rows("east", report.east);
      rows("north", report.north);
      rows("alpha0", report.alpha0);
    }
    files["directional"] = out.str();
  }
  {
    std::ostringstream out;
    out << "min_path_length,count" << meta_header << "\n";
    for (const DeadEndScan& scan : report.dead_ends)
      out << scan.min_path_length << "," << scan.count << meta_row << "\n";
    files["dead_ends"] = out.str();
  }
  return files;
}

}  // namespace cocy
