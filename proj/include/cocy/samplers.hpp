#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cocy/chain.hpp"
#include "cocy/lattice.hpp"

namespace cocy {

struct StripParams {
  double p = 0.5;  // strictly inside (0,1)
  int width = 0;
  int height = 0;
  std::uint64_t seed = 0;
};

// Quadrant construction: bottom-row horizontal labels i.i.d. Bernoulli(p),
// left-column vertical labels i.i.d. Bernoulli(1-p), interior filled row by
// row with the fair-coin square completion. Always validates.
EdgeConfig sample_strip_quadrant(const StripParams& params);

// Deterministic staircase for the directed-path construction: enters the
// window at the top-left corner, descends at average slope -p/(2(1-p)) by
// Bresenham stepping, runs flat for 2M columns at mid-height, then descends
// to the bottom edge and continues east to the corner.
struct DirectedPathSpec {
  int flat_half_width = 0;  // M
  int width = 0;
  int height = 0;
};

struct DirectedPathSample {
  EdgeConfig config;
  LatticePath path;  // traversed NW to SE
};

// Labels the staircase independently with the one-dimensional marginals, then
// fills above it with the forward completion (rows bottom-up, left to right)
// and below it with the backward completion (rows top-down, right to left).
// The three regions consume separate substreams.
DirectedPathSample sample_via_directed_path(double p, const DirectedPathSpec& spec,
                                            std::uint64_t seed);

struct YaguchiParams {
  double rho_blue = 0.3;
  double rho_red = 0.3;
  double hop_prob = 0.5;
  int width = 0;
  int height = 0;
  int burn_in = 256;  // columns evolved and discarded before the window
  std::uint64_t seed = 0;
};

enum class SiteColor : std::uint8_t { Empty = 0, Blue = 1, Red = 2, Green = 3 };

// Vertex colors and traced green edges over the retained window.
struct ColorField {
  int width = 0;
  int height = 0;
  std::vector<SiteColor> colors;  // (W+1) x (H+1), row-major by y
  BitGrid green_h;                // W x (H+1)
  BitGrid green_v;                // (W+1) x H

  SiteColor color_at(int x, int y) const {
    return colors[static_cast<std::size_t>(y) * (width + 1) + x];
  }

  // One line per column x, characters b/r/g/. for y = 0..H.
  std::string to_text() const;
};

struct YaguchiSample {
  ColorField colors;
  EdgeConfig config;
};

// Exclusion-process construction: i.i.d. colored initial column with the
// topmost red between consecutive blues recolored green, parallel hop-down
// dynamics traced over burn_in + width steps, and the green-edge labeling
// transform (green edges 0, edges touching a green endpoint 1, rest 0)
// applied over the retained window.
YaguchiSample sample_yaguchi(const YaguchiParams& params);

struct IndependentParams {
  double ph1 = 0.5;  // probability a horizontal edge carries label 1
  double pv1 = 0.5;
  int width = 0;
  int height = 0;
  std::uint64_t seed = 0;
};

// Independent-labeling reference model; not cocycle-valid in general.
EdgeConfig sample_independent(const IndependentParams& params);

// All horizontal edges 1, all vertical edges 0.
EdgeConfig fixture_stripes(int width, int height);

// Every second plaquette carries label 1 on all four edges, extended over the
// whole plane and restricted to the window: h(x,y) = [x = sx mod 2],
// v(x,y) = [y = sy mod 2].
EdgeConfig fixture_checkerboard(int width, int height, int shift_x, int shift_y);

}  // namespace cocy
