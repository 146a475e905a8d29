#include "cocy/render.hpp"

#include "cocy/rng.hpp"

namespace cocy {

namespace {

constexpr Rgb kGreen{0, 150, 60};
constexpr Rgb kBoundary{235, 140, 20};
constexpr Rgb kConeTint{255, 238, 170};

Rgb cluster_color(std::int32_t id) {
  SplitMix64 sm(0xC0C7C1E5ULL + static_cast<std::uint64_t>(id));
  const std::uint64_t bits = sm.next();
  // keep channels away from the extremes so ids stay distinguishable from
  // the fixed palette
  return Rgb{static_cast<std::uint8_t>(40 + (bits & 0xFF) % 176),
             static_cast<std::uint8_t>(40 + ((bits >> 8) & 0xFF) % 176),
             static_cast<std::uint8_t>(40 + ((bits >> 16) & 0xFF) % 176)};
}

class Raster {
 public:
  Raster(int width, int height, Rgb fill)
      : width_(width), height_(height),
        pixels_(static_cast<std::size_t>(width) * height * 3) {
    for (std::size_t i = 0; i < pixels_.size(); i += 3) {
      pixels_[i] = fill.r;
      pixels_[i + 1] = fill.g;
      pixels_[i + 2] = fill.b;
    }
  }

  void put(int col, int row, Rgb c) {
    const std::size_t i = (static_cast<std::size_t>(row) * width_ + col) * 3;
    pixels_[i] = c.r;
    pixels_[i + 1] = c.g;
    pixels_[i + 2] = c.b;
  }

  void hline(int col0, int col1, int row, Rgb c) {
    for (int col = col0; col <= col1; ++col) put(col, row, c);
  }

  void vline(int col, int row0, int row1, Rgb c) {
    for (int row = row0; row <= row1; ++row) put(col, row, c);
  }

  std::string to_ppm(const std::string& metadata) const {
    std::string out = "P6\n";
    if (!metadata.empty()) out += "# " + metadata + "\n";
    out += std::to_string(width_) + " " + std::to_string(height_) + "\n255\n";
    out.append(reinterpret_cast<const char*>(pixels_.data()), pixels_.size());
    return out;
  }

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

struct Layout {
  int scale;
  int H;
  int col(int x) const { return scale * x; }
  int row(int y) const { return scale * (H - y); }
};

void check_style(const RenderStyle& style) {
  if (style.scale < 1) throw DomainError("render scale must be at least 1");
}

std::optional<ConeSpec> cone_for(const EdgeConfig& cfg, const RenderStyle& style) {
  if (!style.overlay_cone) return std::nullopt;
  const Marginals m = marginals(cfg);
  return ConeSpec::around_alpha0(m.h_hat, m.v_hat, style.cone_eps);
}

}  // namespace

std::string render_ppm(const EdgeConfig& cfg, const RenderStyle& style,
                       const RenderOverlays& overlays) {
  check_style(style);
  const int W = cfg.width();
  const int H = cfg.height();
  const Layout L{style.scale, H};
  Raster img(style.scale * W + 1, style.scale * H + 1, style.background);

  if (const auto cone = cone_for(cfg, style)) {
    const Vertex anchor{W / 2, H / 2};
    for (int y = 0; y <= H; ++y)
      for (int x = 0; x <= W; ++x)
        if (cone_contains(*cone, Vertex{x - anchor.x, y - anchor.y}))
          img.put(L.col(x), L.row(y), kConeTint);
  }

  auto edge_color = [&](bool label, int x, int y, bool horizontal) {
    if (!label && style.overlay_clusters && overlays.clusters != nullptr) {
      (void)horizontal;
      return cluster_color(overlays.clusters->id_at(x, y));
    }
    return label ? style.color_one : style.color_zero;
  };
  for (int y = 0; y <= H; ++y)
    for (int x = 0; x < W; ++x)
      img.hline(L.col(x), L.col(x + 1), L.row(y), edge_color(cfg.h(x, y), x, y, true));
  for (int y = 0; y < H; ++y)
    for (int x = 0; x <= W; ++x)
      img.vline(L.col(x), L.row(y + 1), L.row(y), edge_color(cfg.v(x, y), x, y, false));

  if (style.overlay_green && overlays.colors != nullptr) {
    const ColorField& cf = *overlays.colors;
    for (int y = 0; y <= H; ++y)
      for (int x = 0; x < W; ++x)
        if (cf.green_h.get(y, x)) img.hline(L.col(x), L.col(x + 1), L.row(y), kGreen);
    for (int y = 0; y < H; ++y)
      for (int x = 0; x <= W; ++x)
        if (cf.green_v.get(y, x)) img.vline(L.col(x), L.row(y + 1), L.row(y), kGreen);
  }

  if (style.overlay_left_boundaries && overlays.left_boundaries != nullptr)
    for (const StaircasePath& path : *overlays.left_boundaries)
      for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        const Vertex a = path.vertices[i];
        const Vertex b = path.vertices[i + 1];
        if (a.y == b.y)
          img.hline(std::min(L.col(a.x), L.col(b.x)), std::max(L.col(a.x), L.col(b.x)), L.row(a.y),
                    kBoundary);
        else
          img.vline(L.col(a.x), std::min(L.row(a.y), L.row(b.y)), std::max(L.row(a.y), L.row(b.y)),
                    kBoundary);
      }

  return img.to_ppm(style.metadata);
}

namespace {

std::string hex_color(Rgb c) {
  static const char* digits = "0123456789abcdef";
  std::string s = "#......";
  const std::uint8_t ch[3] = {c.r, c.g, c.b};
  for (int i = 0; i < 3; ++i) {
    s[1 + 2 * i] = digits[ch[i] >> 4];
    s[2 + 2 * i] = digits[ch[i] & 15];
  }
  return s;
}

void svg_line(std::string& out, int x1, int y1, int x2, int y2, Rgb color) {
  out += "<line x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) + "\" x2=\"" +
         std::to_string(x2) + "\" y2=\"" + std::to_string(y2) + "\" stroke=\"" + hex_color(color) +
         "\" stroke-width=\"1\"/>\n";
}

}  // namespace

std::string render_svg(const EdgeConfig& cfg, const RenderStyle& style,
                       const RenderOverlays& overlays) {
  check_style(style);
  const int W = cfg.width();
  const int H = cfg.height();
  const Layout L{style.scale, H};
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(style.scale * W + 1) + "\" height=\"" + std::to_string(style.scale * H + 1) +
         "\">\n";
  if (!style.metadata.empty()) out += "<!-- " + style.metadata + " -->\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"" + hex_color(style.background) + "\"/>\n";

  auto edge_color = [&](bool label, int x, int y) {
    if (!label && style.overlay_clusters && overlays.clusters != nullptr)
      return cluster_color(overlays.clusters->id_at(x, y));
    return label ? style.color_one : style.color_zero;
  };
  for (int y = 0; y <= H; ++y)
    for (int x = 0; x < W; ++x)
      svg_line(out, L.col(x), L.row(y), L.col(x + 1), L.row(y), edge_color(cfg.h(x, y), x, y));
  for (int y = 0; y < H; ++y)
    for (int x = 0; x <= W; ++x)
      svg_line(out, L.col(x), L.row(y), L.col(x), L.row(y + 1), edge_color(cfg.v(x, y), x, y));

  if (style.overlay_green && overlays.colors != nullptr) {
    const ColorField& cf = *overlays.colors;
    for (int y = 0; y <= H; ++y)
      for (int x = 0; x < W; ++x)
        if (cf.green_h.get(y, x)) svg_line(out, L.col(x), L.row(y), L.col(x + 1), L.row(y), kGreen);
    for (int y = 0; y < H; ++y)
      for (int x = 0; x <= W; ++x)
        if (cf.green_v.get(y, x)) svg_line(out, L.col(x), L.row(y), L.col(x), L.row(y + 1), kGreen);
  }

  if (style.overlay_left_boundaries && overlays.left_boundaries != nullptr)
    for (const StaircasePath& path : *overlays.left_boundaries)
      for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        const Vertex a = path.vertices[i];
        const Vertex b = path.vertices[i + 1];
        svg_line(out, L.col(a.x), L.row(a.y), L.col(b.x), L.row(b.y), kBoundary);
      }

  out += "</svg>\n";
  return out;
}

}  // namespace cocy
