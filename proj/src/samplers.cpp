#include "cocy/samplers.hpp"

#include <cmath>

#include "cocy/rng.hpp"

namespace cocy {

namespace {

void require_probability(double p, const char* name) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError(std::string(name) + " must lie strictly in (0,1)");
}

}  // namespace

// Substreams: 0 = x-axis horizontal labels, 1 = y-axis vertical labels,
// 2+y = completion coins for row y.
EdgeConfig sample_strip_quadrant(const StripParams& params) {
  require_probability(params.p, "p");
  EdgeConfig cfg(params.width, params.height);

  Xoshiro256pp axis_h = substream(params.seed, 0);
  for (int x = 0; x < cfg.width(); ++x) cfg.set_h(x, 0, axis_h.bernoulli(params.p));
  Xoshiro256pp axis_v = substream(params.seed, 1);
  for (int y = 0; y < cfg.height(); ++y) cfg.set_v(0, y, axis_v.bernoulli(1.0 - params.p));

  for (int y = 0; y < cfg.height(); ++y) {
    Xoshiro256pp coins = substream(params.seed, 2 + static_cast<std::uint64_t>(y));
    for (int x = 0; x < cfg.width(); ++x) {
      const int left = cfg.v(x, y);
      const int bottom = cfg.h(x, y);
      const bool heads = left == bottom ? coins.coin() : false;
      const SquareState state = complete_square(left, bottom, heads);
      cfg.set_h(x, y + 1, state.top() != 0);
      cfg.set_v(x + 1, y, state.right() != 0);
    }
  }
  return cfg;
}

namespace {

struct StaircasePlan {
  LatticePath path;
  // descent_column[k] = x of the path's vertical edge between y=k and y=k+1
  std::vector<int> descent_column;
};

// Deterministic corner-to-corner staircase: east run at the top, Bresenham
// descent at slope p/(2(1-p)) to mid-height, flat segment of 2M columns,
// descent to y=0, east run to the bottom-right corner. Starting and ending on
// window corners leaves no window edge undetermined by the two fills.
StaircasePlan plan_staircase(double p, const DirectedPathSpec& spec) {
  const double slope = p / (2.0 * (1.0 - p));
  const int W = spec.width;
  const int H = spec.height;
  const int mid = H / 2;

  StaircasePlan plan;
  plan.descent_column.assign(H, -1);
  int x = 0;
  int y = H;
  plan.path.vertices.push_back(Vertex{x, y});
  auto go_east = [&] {
    ++x;
    plan.path.vertices.push_back(Vertex{x, y});
  };
  auto go_south = [&] {
    --y;
    plan.descent_column[y] = x;
    plan.path.vertices.push_back(Vertex{x, y});
  };

  for (int phase = 0; phase < 2; ++phase) {
    const int target = phase == 0 ? mid : 0;
    double err = 0.0;
    while (y > target) {
      if (x >= W) throw PathOutOfWindow("window too narrow for the staircase descent");
      go_east();
      err += slope;
      while (err >= 1.0 && y > target) {
        go_south();
        err -= 1.0;
      }
    }
    if (phase == 0)
      for (int i = 0; i < 2 * spec.flat_half_width; ++i) {
        if (x >= W) throw PathOutOfWindow("window too narrow for the flat segment");
        go_east();
      }
  }
  while (x < W) go_east();
  return plan;
}

}  // namespace

// Substreams: 0 = path edge labels, 1 = forward fill above the path,
// 2 = backward fill below the path.
DirectedPathSample sample_via_directed_path(double p, const DirectedPathSpec& spec,
                                            std::uint64_t seed) {
  require_probability(p, "p");
  if (spec.flat_half_width < 0) throw DomainError("flat_half_width must be non-negative");

  StaircasePlan plan = plan_staircase(p, spec);
  EdgeConfig cfg(spec.width, spec.height);
  const int W = cfg.width();
  const int H = cfg.height();

  Xoshiro256pp path_rng = substream(seed, 0);
  for (std::size_t i = 0; i + 1 < plan.path.vertices.size(); ++i) {
    const Vertex a = plan.path.vertices[i];
    const Vertex b = plan.path.vertices[i + 1];
    if (b.x == a.x + 1)
      cfg.set_h(a.x, a.y, path_rng.bernoulli(p));
    else
      cfg.set_v(a.x, b.y, path_rng.bernoulli(1.0 - p));
  }

  Xoshiro256pp above_rng = substream(seed, 1);
  for (int y = 0; y < H; ++y) {
    for (int x = plan.descent_column[y]; x < W; ++x) {
      const int left = cfg.v(x, y);
      const int bottom = cfg.h(x, y);
      const bool heads = left == bottom ? above_rng.coin() : false;
      const SquareState state = complete_square(left, bottom, heads);
      cfg.set_h(x, y + 1, state.top() != 0);
      cfg.set_v(x + 1, y, state.right() != 0);
    }
  }

  const BackwardCompletionTable table = backward_completion_distribution(
      derive_transition_matrix(p), stationary_distribution(derive_transition_matrix(p)));
  Xoshiro256pp below_rng = substream(seed, 2);
  for (int y = H - 1; y >= 0; --y) {
    for (int x = plan.descent_column[y] - 1; x >= 0; --x) {
      const int top = cfg.h(x, y + 1);
      const int right = cfg.v(x + 1, y);
      int left;
      int bottom;
      if (top != right) {
        // forced completion, no randomness consumed
        left = 0;
        bottom = 0;
        for (int lb = 0; lb < 4; ++lb)
          if (table.probability[top][right][lb] > 0.5) {
            left = lb >> 1;
            bottom = lb & 1;
          }
      } else {
        const double u = below_rng.uniform();
        double acc = 0.0;
        left = 1;
        bottom = 1;
        for (int lb = 0; lb < 4; ++lb) {
          acc += table.probability[top][right][lb];
          if (u < acc) {
            left = lb >> 1;
            bottom = lb & 1;
            break;
          }
        }
      }
      cfg.set_v(x, y, left != 0);
      cfg.set_h(x, y, bottom != 0);
    }
  }

  return DirectedPathSample{std::move(cfg), std::move(plan.path)};
}

std::string ColorField::to_text() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(width + 1) * (height + 2));
  for (int x = 0; x <= width; ++x) {
    for (int y = 0; y <= height; ++y) {
      switch (color_at(x, y)) {
        case SiteColor::Blue: out += 'b'; break;
        case SiteColor::Red: out += 'r'; break;
        case SiteColor::Green: out += 'g'; break;
        default: out += '.'; break;
      }
    }
    out += '\n';
  }
  return out;
}

// Substreams: 0 = initial column colors, 1+t = hop decisions for step t.
YaguchiSample sample_yaguchi(const YaguchiParams& params) {
  if (params.rho_blue < 0 || params.rho_red < 0 || params.rho_blue + params.rho_red > 1.0)
    throw DomainError("color densities must be non-negative with sum at most 1");
  require_probability(params.hop_prob, "hop_prob");
  if (params.burn_in < 0) throw DomainError("burn_in must be non-negative");

  const int W = params.width;
  const int H = params.height;
  const int pad = 2 * W;       // particles descend at most one row per column step
  const int rows = H + 4 * W;  // vertex rows 0..rows
  // One step past the window so every edge incident to a window vertex has
  // its green trace inside the evolved domain.
  const int steps = params.burn_in + W + 1;
  const int col_stride = rows + 1;

  std::vector<SiteColor> grid(static_cast<std::size_t>(steps + 1) * col_stride, SiteColor::Empty);
  auto at = [&](int x, int y) -> SiteColor& {
    return grid[static_cast<std::size_t>(x) * col_stride + y];
  };

  Xoshiro256pp init_rng = substream(params.seed, 0);
  for (int y = 0; y <= rows; ++y) {
    const double u = init_rng.uniform();
    if (u < params.rho_blue)
      at(0, y) = SiteColor::Blue;
    else if (u < params.rho_blue + params.rho_red)
      at(0, y) = SiteColor::Red;
  }
  // Topmost red strictly between consecutive blues turns green; runs at the
  // column ends without an enclosing blue pair are left alone.
  int prev_blue = -1;
  for (int y = 0; y <= rows; ++y) {
    if (at(0, y) != SiteColor::Blue) continue;
    if (prev_blue >= 0)
      for (int k = y - 1; k > prev_blue; --k)
        if (at(0, k) == SiteColor::Red) {
          at(0, k) = SiteColor::Green;
          break;
        }
    prev_blue = y;
  }

  BitGrid green_h(rows + 1, steps);  // row y, column x = edge (x,y)-(x+1,y)
  BitGrid green_v(rows, steps + 1);  // row y, column x = edge (x,y)-(x,y+1)

  for (int t = 0; t < steps; ++t) {
    Xoshiro256pp hop_rng = substream(params.seed, 1 + static_cast<std::uint64_t>(t));
    for (int y = 0; y <= rows; ++y) {
      const SiteColor c = at(t, y);
      if (c == SiteColor::Empty) continue;
      const bool wants = hop_rng.bernoulli(params.hop_prob);
      const bool below_free = y > 0 && at(t, y - 1) == SiteColor::Empty;
      if (wants && below_free) {
        at(t + 1, y - 1) = c;
        if (c == SiteColor::Green) {
          green_v.set(y - 1, t, true);
          green_h.set(y - 1, t, true);
        }
      } else {
        at(t + 1, y) = c;
        if (c == SiteColor::Green) green_h.set(y, t, true);
      }
    }
  }

  // An edge touching any green-path vertex (i.e. an endpoint of a green edge)
  // carries label 1 unless it is green itself; everything else is 0.
  auto incident = [&](int x, int y) {
    if (x < steps && green_h.get(y, x)) return true;
    if (x > 0 && green_h.get(y, x - 1)) return true;
    if (y < rows && green_v.get(y, x)) return true;
    if (y > 0 && green_v.get(y - 1, x)) return true;
    return false;
  };

  const int x0 = params.burn_in;
  const int y0 = pad;
  EdgeConfig cfg(W, H);
  for (int y = 0; y <= H; ++y)
    for (int x = 0; x < W; ++x) {
      const int dx = x0 + x;
      const int dy = y0 + y;
      if (green_h.get(dy, dx)) continue;  // stays 0
      cfg.set_h(x, y, incident(dx, dy) || incident(dx + 1, dy));
    }
  for (int y = 0; y < H; ++y)
    for (int x = 0; x <= W; ++x) {
      const int dx = x0 + x;
      const int dy = y0 + y;
      if (green_v.get(dy, dx)) continue;
      cfg.set_v(x, y, incident(dx, dy) || incident(dx, dy + 1));
    }

  ColorField field;
  field.width = W;
  field.height = H;
  field.colors.resize(static_cast<std::size_t>(W + 1) * (H + 1), SiteColor::Empty);
  for (int y = 0; y <= H; ++y)
    for (int x = 0; x <= W; ++x)
      field.colors[static_cast<std::size_t>(y) * (W + 1) + x] = at(x0 + x, y0 + y);
  field.green_h = BitGrid(H + 1, W);
  field.green_v = BitGrid(H, W + 1);
  for (int y = 0; y <= H; ++y)
    for (int x = 0; x < W; ++x) field.green_h.set(y, x, green_h.get(y0 + y, x0 + x));
  for (int y = 0; y < H; ++y)
    for (int x = 0; x <= W; ++x) field.green_v.set(y, x, green_v.get(y0 + y, x0 + x));

  return YaguchiSample{std::move(field), std::move(cfg)};
}

// Substreams: 0 = horizontal labels, 1 = vertical labels; row-major order.
EdgeConfig sample_independent(const IndependentParams& params) {
  if (params.ph1 < 0 || params.ph1 > 1 || params.pv1 < 0 || params.pv1 > 1)
    throw DomainError("edge probabilities must lie in [0,1]");
  EdgeConfig cfg(params.width, params.height);
  Xoshiro256pp h_rng = substream(params.seed, 0);
  for (int y = 0; y <= cfg.height(); ++y)
    for (int x = 0; x < cfg.width(); ++x) cfg.set_h(x, y, h_rng.bernoulli(params.ph1));
  Xoshiro256pp v_rng = substream(params.seed, 1);
  for (int y = 0; y < cfg.height(); ++y)
    for (int x = 0; x <= cfg.width(); ++x) cfg.set_v(x, y, v_rng.bernoulli(params.pv1));
  return cfg;
}

EdgeConfig fixture_stripes(int width, int height) {
  EdgeConfig cfg(width, height);
  for (int y = 0; y <= height; ++y)
    for (int x = 0; x < width; ++x) cfg.set_h(x, y, true);
  return cfg;
}

EdgeConfig fixture_checkerboard(int width, int height, int shift_x, int shift_y) {
  if ((shift_x & ~1) || (shift_y & ~1)) throw DomainError("checkerboard shift must be 0 or 1");
  EdgeConfig cfg(width, height);
  for (int y = 0; y <= height; ++y)
    for (int x = 0; x < width; ++x) cfg.set_h(x, y, (x & 1) == shift_x);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x <= width; ++x) cfg.set_v(x, y, (y & 1) == shift_y);
  return cfg;
}

}  // namespace cocy
