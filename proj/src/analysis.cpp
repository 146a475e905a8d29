#include "cocy/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

namespace cocy {

namespace {

// Array-based union-find with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::int32_t>(i);
  }

  std::int32_t find(std::int32_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::int32_t> parent_;
  std::vector<std::int64_t> size_;
};

}  // namespace

ClusterSet zero_clusters(const EdgeConfig& cfg, const HeightField* hf) {
  const int W = cfg.width();
  const int H = cfg.height();
  const std::int64_t n_vertices = static_cast<std::int64_t>(W + 1) * (H + 1);
  auto vid = [W](int x, int y) {
    return static_cast<std::int32_t>(static_cast<std::int64_t>(y) * (W + 1) + x);
  };

  UnionFind uf(static_cast<std::size_t>(n_vertices));
  for (int y = 0; y <= H; ++y)
    for (int x = 0; x < W; ++x)
      if (!cfg.h(x, y)) uf.unite(vid(x, y), vid(x + 1, y));
  for (int y = 0; y < H; ++y)
    for (int x = 0; x <= W; ++x)
      if (!cfg.v(x, y)) uf.unite(vid(x, y), vid(x, y + 1));

  ClusterSet cs(W, H);
  std::vector<std::int32_t> dense(static_cast<std::size_t>(n_vertices), -1);
  for (int y = 0; y <= H; ++y) {
    for (int x = 0; x <= W; ++x) {
      const std::int32_t root = uf.find(vid(x, y));
      std::int32_t id = dense[root];
      if (id < 0) {
        id = cs.cluster_count();
        dense[root] = id;
        ClusterInfo info;
        info.min_x = info.max_x = x;
        info.min_y = info.max_y = y;
        if (hf != nullptr) {
          info.has_f = true;
          info.f = hf->at(x, y);
        }
        cs.clusters.push_back(info);
      }
      ClusterInfo& info = cs.clusters[id];
      info.size += 1;
      info.min_x = std::min(info.min_x, x);
      info.max_x = std::max(info.max_x, x);
      info.min_y = std::min(info.min_y, y);
      info.max_y = std::max(info.max_y, y);
      if (hf != nullptr && hf->at(x, y) != info.f)
        throw FConstancyViolation("vertices of one 0-cluster carry different f values");
      cs.set_id(x, y, id);
    }
  }
  for (ClusterInfo& info : cs.clusters) {
    info.touches_w = info.min_x == 0;
    info.touches_e = info.max_x == W;
    info.touches_s = info.min_y == 0;
    info.touches_n = info.max_y == H;
  }
  return cs;
}

std::vector<Rect> centered_square_family(int width, int height) {
  const int cx = width / 2;
  const int cy = height / 2;
  std::vector<Rect> rects;
  for (int half = 1;; half *= 2) {
    Rect r{std::max(0, cx - half), std::max(0, cy - half), std::min(width, cx + half),
           std::min(height, cy + half)};
    if (!rects.empty() && rects.back().contains(r)) break;
    rects.push_back(r);
    if (r.x0 == 0 && r.y0 == 0 && r.x1 == width && r.y1 == height) break;
  }
  Rect whole{0, 0, width, height};
  if (rects.empty() || !(rects.back().x0 == 0 && rects.back().y0 == 0 &&
                         rects.back().x1 == width && rects.back().y1 == height))
    rects.push_back(whole);
  return rects;
}

DensityEstimate cluster_density(const ClusterSet& cs, std::int32_t cluster_id,
                                const std::vector<Rect>& rects) {
  for (std::size_t i = 1; i < rects.size(); ++i)
    if (!rects[i].contains(rects[i - 1])) throw DomainError("density rectangles must be nested");
  DensityEstimate est;
  est.rects = rects;
  for (const Rect& r : rects) {
    std::int64_t members = 0;
    for (int y = r.y0; y <= r.y1; ++y)
      for (int x = r.x0; x <= r.x1; ++x)
        if (cs.id_at(x, y) == cluster_id) ++members;
    est.ratios.push_back(static_cast<double>(members) / static_cast<double>(r.vertex_count()));
  }
  return est;
}

std::vector<ConeFraction> cone_outside_fraction(const HeightField& hf, const Marginals& m,
                                                double eps, const std::vector<int>& radii) {
  const ConeSpec cone = ConeSpec::around_alpha0(m.h_hat, m.v_hat, eps);
  const Vertex a = hf.anchor();
  std::vector<ConeFraction> out;
  for (int radius : radii) {
    ConeFraction cf;
    cf.radius = radius;
    const int x_lo = std::max(0, a.x - radius);
    const int x_hi = std::min(hf.width(), a.x + radius);
    for (int x = x_lo; x <= x_hi; ++x) {
      const int budget = radius - std::abs(x - a.x);
      const int y_lo = std::max(0, a.y - budget);
      const int y_hi = std::min(hf.height(), a.y + budget);
      for (int y = y_lo; y <= y_hi; ++y) {
        if (hf.at(x, y) != 0) continue;
        ++cf.zero_count;
        if (!cone_contains(cone, Vertex{x - a.x, y - a.y})) ++cf.outside_count;
      }
    }
    cf.fraction = cf.zero_count == 0
                      ? 0.0
                      : static_cast<double>(cf.outside_count) / static_cast<double>(cf.zero_count);
    out.push_back(cf);
  }
  return out;
}

DirectionalResult directional_ratio(const HeightField& hf, double alpha, bool westward,
                                    const std::vector<int>& radii, double h, double v) {
  DirectionalResult result;
  const Vertex a = hf.anchor();
  if (std::isinf(alpha)) {
    const int c3 = alpha > 0 ? 1 : -1;
    result.limit = c3 * v;
    for (int radius : radii) {
      const Vertex z{0, c3 * radius};
      const int yy = a.y + z.y;
      if (yy < 0 || yy > hf.height()) throw PathOutOfWindow("directional ray leaves the window");
      result.points.push_back(
          DirectionalPoint{radius, z, static_cast<double>(hf.at(a.x, yy)) / std::abs(z.y)});
    }
    return result;
  }

  const int c1 = westward ? -1 : 1;
  const double y_per_x = std::abs(alpha);
  const int c2 = alpha == 0.0 ? 1 : (alpha > 0 ? c1 : -c1);
  result.limit = c1 / (1.0 + y_per_x) * h + c2 * y_per_x / (1.0 + y_per_x) * v;
  for (int radius : radii) {
    // Largest x along the ray with ||z||_1 <= radius, nearest-point rounding.
    int best_x = 0;
    for (int x = static_cast<int>(radius / (1.0 + y_per_x)) + 2; x >= 1; --x) {
      if (x + std::llround(y_per_x * x) <= radius) {
        best_x = x;
        break;
      }
    }
    if (best_x == 0) throw DomainError("radius too small for the directional ray");
    const Vertex z{c1 * best_x,
                   static_cast<int>(std::llround(alpha * best_x)) * (westward ? -1 : 1)};
    const int xx = a.x + z.x;
    const int yy = a.y + z.y;
    if (xx < 0 || xx > hf.width() || yy < 0 || yy > hf.height())
      throw PathOutOfWindow("directional ray leaves the window");
    const double norm = std::abs(z.x) + std::abs(z.y);
    result.points.push_back(DirectionalPoint{radius, z, hf.at(xx, yy) / norm});
  }
  return result;
}

LeftBoundary left_boundary(const ClusterSet& cs, std::int32_t cluster_id, const EdgeConfig& cfg) {
  const int W = cfg.width();
  const int H = cfg.height();
  // leftmost vertical 0-edge of the cluster per level
  std::vector<int> leftmost(static_cast<std::size_t>(H), -1);
  bool any = false;
  for (int y = 0; y < H; ++y)
    for (int x = 0; x <= W; ++x)
      if (!cfg.v(x, y) && cs.id_at(x, y) == cluster_id && cs.id_at(x, y + 1) == cluster_id) {
        leftmost[y] = x;
        any = true;
        break;
      }
  if (!any) throw NoVerticalEdges("cluster has no vertical 0-edge");

  LeftBoundary out;
  int lo = 0;
  while (leftmost[lo] < 0) ++lo;
  int hi = H - 1;
  while (leftmost[hi] < 0) --hi;
  out.level_min = lo;
  out.level_max = hi;

  bool monotone_and_zero = true;
  bool gap = false;
  StaircasePath current;
  // Traverse NW to SE: from the top level down, vertical edge then the
  // horizontal run east to the next level's edge.
  for (int y = hi; y >= lo; --y) {
    if (leftmost[y] < 0) {
      gap = true;
      if (!current.vertices.empty()) {
        out.segments.push_back(std::move(current));
        current = StaircasePath{};
      }
      continue;
    }
    const int x = leftmost[y];
    if (current.vertices.empty()) {
      current.vertices.push_back(Vertex{x, y + 1});
    } else {
      const Vertex last = current.vertices.back();  // sits at level y+1
      if (x < last.x) monotone_and_zero = false;
      const int step = x >= last.x ? 1 : -1;
      for (int cx = last.x; cx != x; cx += step) {
        const int hx = step > 0 ? cx : cx - 1;
        if (cfg.h(hx, y + 1)) monotone_and_zero = false;
        current.vertices.push_back(Vertex{cx + step, y + 1});
      }
    }
    current.vertices.push_back(Vertex{x, y});
  }
  if (!current.vertices.empty()) out.segments.push_back(std::move(current));
  out.verdict = monotone_and_zero && !gap;
  return out;
}

DeadEndScan dead_end_scan(const EdgeConfig& cfg, int min_path_length) {
  if (min_path_length < 1) throw DomainError("path length threshold must be at least 1");
  const int W = cfg.width();
  const int H = cfg.height();
  // longest[x][y] = length of the longest east/south 0-path from (x,y),
  // capped at min_path_length
  std::vector<std::int32_t> longest(static_cast<std::size_t>(W + 1) * (H + 1), 0);
  auto at = [&](int x, int y) -> std::int32_t& {
    return longest[static_cast<std::size_t>(y) * (W + 1) + x];
  };
  const std::int32_t cap = min_path_length;
  for (int y = 0; y <= H; ++y)
    for (int x = W; x >= 0; --x) {
      std::int32_t best = 0;
      if (x < W && !cfg.h(x, y)) best = std::max(best, 1 + at(x + 1, y));
      if (y > 0 && !cfg.v(x, y - 1)) best = std::max(best, 1 + at(x, y - 1));
      at(x, y) = std::min(best, cap);
    }

  DeadEndScan scan;
  scan.min_path_length = min_path_length;
  for (int y = 0; y < H; ++y)
    for (int x = 1; x <= W; ++x) {
      if (!cfg.h(x - 1, y)) continue;  // west edge must be 1
      if (!cfg.v(x, y)) continue;      // north edge must be 1
      if (at(x, y) >= cap) {
        ++scan.count;
        scan.locations.push_back(Vertex{x, y});
      }
    }
  return scan;
}

SpanningStats spanning_stats(const ClusterSet& cs) {
  SpanningStats stats;
  std::set<std::int32_t> f_ns, f_ew, f_any;
  for (const ClusterInfo& info : cs.clusters) {
    const bool ns = info.touches_n && info.touches_s;
    const bool ew = info.touches_e && info.touches_w;
    if (!ns && !ew) continue;
    if (!info.has_f) throw DomainError("spanning_stats needs f annotations");
    if (ns) {
      ++stats.ns_count;
      f_ns.insert(info.f);
    }
    if (ew) {
      ++stats.ew_count;
      f_ew.insert(info.f);
    }
    f_any.insert(info.f);
  }
  stats.distinct_f_ns = static_cast<std::int32_t>(f_ns.size());
  stats.distinct_f_ew = static_cast<std::int32_t>(f_ew.size());
  stats.distinct_f_spanning = static_cast<std::int32_t>(f_any.size());
  return stats;
}

}  // namespace cocy
