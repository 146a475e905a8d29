#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cocy/lattice.hpp"

namespace cocy {

struct ClusterInfo {
  std::int64_t size = 0;
  int min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  bool touches_w = false, touches_e = false, touches_s = false, touches_n = false;
  bool has_f = false;
  std::int32_t f = 0;
};

// Partition of window vertices by 0-labeled-edge connectivity.
class ClusterSet {
 public:
  ClusterSet(int width, int height)
      : W_(width), H_(height), id_(static_cast<std::size_t>(width + 1) * (height + 1), -1) {}

  int width() const { return W_; }
  int height() const { return H_; }

  std::int32_t id_at(int x, int y) const {
    return id_[static_cast<std::size_t>(y) * (W_ + 1) + x];
  }
  void set_id(int x, int y, std::int32_t id) {
    id_[static_cast<std::size_t>(y) * (W_ + 1) + x] = id;
  }

  std::int32_t cluster_count() const { return static_cast<std::int32_t>(clusters.size()); }

  std::vector<ClusterInfo> clusters;

 private:
  int W_;
  int H_;
  std::vector<std::int32_t> id_;
};

// Union-find labeling over 0-edges. When a height field is supplied each
// cluster is annotated with its f value, which is verified constant.
ClusterSet zero_clusters(const EdgeConfig& cfg, const HeightField* hf = nullptr);

struct Rect {
  int x0 = 0, y0 = 0, x1 = 0, y1 = 0;  // inclusive vertex bounds

  std::int64_t vertex_count() const {
    return static_cast<std::int64_t>(x1 - x0 + 1) * (y1 - y0 + 1);
  }
  bool contains(const Rect& other) const {
    return x0 <= other.x0 && y0 <= other.y0 && x1 >= other.x1 && y1 >= other.y1;
  }
};

// Centered squares with sides 2^k, clipped to the window; the last one is the
// whole window.
std::vector<Rect> centered_square_family(int width, int height);

struct DensityEstimate {
  std::vector<Rect> rects;
  std::vector<double> ratios;  // |cluster  rect| / |rect|
};

DensityEstimate cluster_density(const ClusterSet& cs, std::int32_t cluster_id,
                                const std::vector<Rect>& rects);

struct ConeFraction {
  int radius = 0;
  std::int64_t zero_count = 0;     // f(z)=0 with ||z||_1 <= R
  std::int64_t outside_count = 0;  // of those, z outside the cone
  double fraction = 0.0;
};

// Fraction of f=0 vertices within L1 radius R that fall outside C0(eps),
// with alpha0 = -h/v taken from the supplied marginals and z measured from
// the height field's anchor.
std::vector<ConeFraction> cone_outside_fraction(const HeightField& hf, const Marginals& m,
                                                double eps, const std::vector<int>& radii);

struct DirectionalPoint {
  int radius = 0;
  Vertex z;
  double ratio = 0.0;  // f(z) / ||z||_1
};

struct DirectionalResult {
  std::vector<DirectionalPoint> points;
  double limit = 0.0;
};

// Ratios f(z_R)/||z_R||_1 along the lattice points nearest the ray of slope
// alpha from the anchor. Finite alpha runs east (west when westward is set);
// alpha = +inf / -inf runs north / south. The limit field carries the
// theoretical value for the supplied marginals.
DirectionalResult directional_ratio(const HeightField& hf, double alpha, bool westward,
                                    const std::vector<int>& radii, double h, double v);

struct StaircasePath {
  std::vector<Vertex> vertices;  // traversed NW to SE
};

struct LeftBoundary {
  std::vector<StaircasePath> segments;  // one per run of consecutive levels
  bool verdict = false;  // single monotone segment with every traversed edge 0
  int level_min = 0;     // lowest level carrying a vertical 0-edge
  int level_max = 0;
};

// Per level the leftmost vertical 0-edge of the cluster, joined through the
// horizontal run between consecutive levels.
LeftBoundary left_boundary(const ClusterSet& cs, std::int32_t cluster_id, const EdgeConfig& cfg);

struct DeadEndScan {
  int min_path_length = 0;
  std::int64_t count = 0;
  std::vector<Vertex> locations;
};

// Vertices whose west and north incident edges are both 1 and that start a
// down-right directed 0-path of at least L edges (dynamic programming over
// east/south 0-edges).
DeadEndScan dead_end_scan(const EdgeConfig& cfg, int min_path_length);

struct SpanningStats {
  std::int32_t ns_count = 0;  // clusters touching both north and south
  std::int32_t ew_count = 0;
  std::int32_t distinct_f_ns = 0;
  std::int32_t distinct_f_ew = 0;
  std::int32_t distinct_f_spanning = 0;  // across clusters spanning either way
};

// Requires f annotations on the cluster set.
SpanningStats spanning_stats(const ClusterSet& cs);

}  // namespace cocy
