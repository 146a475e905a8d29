#pragma once

#include <array>
#include <optional>
#include <string>

#include "cocy/analysis.hpp"
#include "cocy/lattice.hpp"
#include "cocy/samplers.hpp"

namespace cocy {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
};

struct RenderStyle {
  int scale = 4;  // pixels per lattice unit, at least 1
  Rgb color_zero{60, 90, 220};
  Rgb color_one{220, 50, 40};
  Rgb background{255, 255, 255};
  bool overlay_clusters = false;
  bool overlay_green = false;
  bool overlay_cone = false;
  bool overlay_left_boundaries = false;
  double cone_eps = 0.2;
  std::string metadata;  // free-form, embedded in the image header/comments
};

struct RenderOverlays {
  const ClusterSet* clusters = nullptr;
  const ColorField* colors = nullptr;
  const std::vector<StaircasePath>* left_boundaries = nullptr;
};

// Binary PPM (P6). Image is (scale*W+1) x (scale*H+1) pixels; vertex (x,y)
// maps to pixel column scale*x and row scale*(H-y).
std::string render_ppm(const EdgeConfig& cfg, const RenderStyle& style,
                       const RenderOverlays& overlays = {});

// SVG 1.1 with one line element per edge, integer coordinates only.
std::string render_svg(const EdgeConfig& cfg, const RenderStyle& style,
                       const RenderOverlays& overlays = {});

}  // namespace cocy
