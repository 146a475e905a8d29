#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <vector>

#include "cocy/errors.hpp"

namespace cocy {

struct Vertex {
  int x = 0;
  int y = 0;

  friend bool operator==(const Vertex& a, const Vertex& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Vertex& a, const Vertex& b) { return !(a == b); }
};

enum class Orientation { Horizontal, Vertical };

// A horizontal edge spans base -> base+(1,0); a vertical one base -> base+(0,1).
struct EdgeRef {
  Orientation orientation = Orientation::Horizontal;
  Vertex base;
};

// Flat row-major bit matrix.
class BitGrid {
 public:
  BitGrid() = default;
  BitGrid(std::int64_t rows, std::int64_t cols)
      : rows_(rows), cols_(cols), words_((static_cast<std::size_t>(rows * cols) + 63) / 64, 0) {}

  bool get(std::int64_t r, std::int64_t c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    const std::uint64_t i = static_cast<std::uint64_t>(r * cols_ + c);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::int64_t r, std::int64_t c, bool value) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    const std::uint64_t i = static_cast<std::uint64_t>(r * cols_ + c);
    const std::uint64_t mask = 1ULL << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }
  std::int64_t popcount() const;

  friend bool operator==(const BitGrid& a, const BitGrid& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.words_ == b.words_;
  }

 private:
  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  std::vector<std::uint64_t> words_;
};

// 0/1 labels on all edges of the vertex box [0,W]x[0,H]. Horizontal labels
// live on a W x (H+1) grid, vertical ones on (W+1) x H. Treat instances as
// immutable once a sampler or decoder has produced them; every operation in
// this library takes const references and is safe to run concurrently on a
// shared config.
class EdgeConfig {
 public:
  EdgeConfig(int width, int height)
      : W_(width), H_(height), h_(height + 1, width), v_(height, width + 1) {
    if (width < 1 || height < 1) throw DomainError("window dimensions must be positive");
  }

  int width() const { return W_; }
  int height() const { return H_; }

  // x in [0,W), y in [0,H]
  bool h(int x, int y) const { return h_.get(y, x); }
  void set_h(int x, int y, bool label) { h_.set(y, x, label); }

  // x in [0,W], y in [0,H)
  bool v(int x, int y) const { return v_.get(y, x); }
  void set_v(int x, int y, bool label) { v_.set(y, x, label); }

  bool label(const EdgeRef& e) const {
    return e.orientation == Orientation::Horizontal ? h(e.base.x, e.base.y) : v(e.base.x, e.base.y);
  }

  bool contains_vertex(const Vertex& z) const {
    return z.x >= 0 && z.x <= W_ && z.y >= 0 && z.y <= H_;
  }

  std::int64_t horizontal_count() const { return static_cast<std::int64_t>(W_) * (H_ + 1); }
  std::int64_t vertical_count() const { return static_cast<std::int64_t>(W_ + 1) * H_; }

  const BitGrid& h_grid() const { return h_; }
  const BitGrid& v_grid() const { return v_; }

  friend bool operator==(const EdgeConfig& a, const EdgeConfig& b) {
    return a.W_ == b.W_ && a.H_ == b.H_ && a.h_ == b.h_ && a.v_ == b.v_;
  }

 private:
  int W_;
  int H_;
  BitGrid h_;
  BitGrid v_;
};

// Edge labels of one unit plaquette.
struct SquareLabels {
  std::uint8_t left = 0;
  std::uint8_t top = 0;
  std::uint8_t right = 0;
  std::uint8_t bottom = 0;
};

// Plaquette (x,y) has corners (x,y),(x+1,y),(x+1,y+1),(x,y+1).
inline SquareLabels square_at(const EdgeConfig& cfg, int x, int y) {
  SquareLabels s;
  s.bottom = cfg.h(x, y);
  s.top = cfg.h(x, y + 1);
  s.left = cfg.v(x, y);
  s.right = cfg.v(x + 1, y);
  return s;
}

// bottom + right - left - top; zero exactly when the two southwest-to-northeast
// routes around the square see the same label sum.
inline int plaquette_residual(const SquareLabels& sq) {
  return int(sq.bottom) + int(sq.right) - int(sq.left) - int(sq.top);
}

struct ValidationReport {
  bool valid = true;
  std::vector<Vertex> violations;  // plaquette coordinates, row-major order
};

ValidationReport validate_cocycle(const EdgeConfig& cfg);

// Integer potential with F(anchor) = 0 whose unit increments reproduce the
// edge labels. Exists iff the configuration validates.
class HeightField {
 public:
  HeightField(int width, int height, Vertex anchor)
      : W_(width),
        H_(height),
        anchor_(anchor),
        F_(static_cast<std::size_t>(width + 1) * (height + 1), 0) {}

  int width() const { return W_; }
  int height() const { return H_; }
  Vertex anchor() const { return anchor_; }

  std::int32_t at(int x, int y) const {
    assert(x >= 0 && x <= W_ && y >= 0 && y <= H_);
    return F_[static_cast<std::size_t>(y) * (W_ + 1) + x];
  }

  void set(int x, int y, std::int32_t value) {
    F_[static_cast<std::size_t>(y) * (W_ + 1) + x] = value;
  }

  // f(z) for z relative to the anchor; equals F(anchor + z).
  std::int32_t f(const Vertex& z) const { return at(anchor_.x + z.x, anchor_.y + z.y); }

 private:
  int W_;
  int H_;
  Vertex anchor_;
  std::vector<std::int32_t> F_;
};

HeightField integrate_height(const EdgeConfig& cfg, Vertex anchor);
inline HeightField integrate_height(const EdgeConfig& cfg) {
  return integrate_height(cfg, Vertex{0, 0});
}

struct LatticePath {
  std::vector<Vertex> vertices;
};

// Signed label sum: +label on east/north steps, -label on west/south steps.
// On a valid config this is F(end) - F(start) for any route.
std::int64_t f_along_path(const EdgeConfig& cfg, const LatticePath& path);

struct Marginals {
  double h_hat = 0.0;
  double v_hat = 0.0;
  std::int64_t h_ones = 0;
  std::int64_t h_total = 0;
  std::int64_t v_ones = 0;
  std::int64_t v_total = 0;
};

Marginals marginals(const EdgeConfig& cfg);

// Cone of directions around slope alpha. For finite alpha, z=(x,y) belongs
// when alpha - eps <= y/x <= alpha + eps. For alpha = +-infinity, epsilon
// holds the constant M and membership reads |y/x| > M. The origin belongs to
// every cone by convention.
struct ConeSpec {
  double alpha = 0.0;
  double epsilon = 1.0;

  ConeSpec() = default;
  ConeSpec(double alpha_, double epsilon_) : alpha(alpha_), epsilon(epsilon_) {
    if (!(epsilon_ > 0)) throw DomainError("cone epsilon must be positive");
  }

  // The drift-free direction alpha0 = -h/v.
  static ConeSpec around_alpha0(double h, double v, double eps) {
    if (!(h > 0.0 && h < 1.0 && v > 0.0 && v < 1.0))
      throw DegenerateMarginals("marginals must lie strictly between 0 and 1");
    return ConeSpec(-h / v, eps);
  }
};

bool cone_contains(const ConeSpec& cone, const Vertex& z);

}  // namespace cocy
