#pragma once

#include <map>
#include <string>
#include <vector>

#include "cocy/analysis.hpp"
#include "cocy/lattice.hpp"

namespace cocy {

struct ReportOptions {
  double cone_eps = 0.2;
  std::vector<int> dead_end_lengths = {8, 16, 32, 64};
  // meta fields recorded verbatim into the report
  std::map<std::string, std::string> meta;
};

// Aggregated diagnostics for one configuration. Cone and directional blocks
// need a height field and are skipped (with valid=false recorded) when the
// configuration fails validation.
struct AnalysisReport {
  int width = 0;
  int height = 0;
  bool valid = false;
  std::int64_t violation_count = 0;
  Marginals marg;

  std::int32_t cluster_count = 0;
  std::int64_t largest_cluster_size = 0;
  std::int32_t largest_cluster_id = -1;
  DensityEstimate largest_density;

  bool has_height_analysis = false;
  std::vector<ConeFraction> cone;
  DirectionalResult east, north, alpha0;
  SpanningStats spanning;

  std::vector<DeadEndScan> dead_ends;

  ReportOptions options;
};

AnalysisReport analyze_config(const EdgeConfig& cfg, const ReportOptions& options);

// JSON document with top-level keys: marginals, clusters, density, cones,
// directional, spanning, dead_ends, meta.
std::string report_to_json(const AnalysisReport& report);

// Curve tables as CSV, one file content per curve name:
// density, cones, directional, dead_ends. Meta columns are repeated per row.
std::map<std::string, std::string> report_to_csv(const AnalysisReport& report);

}  // namespace cocy
