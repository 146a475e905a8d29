#include "cocy/lattice.hpp"

#include <bit>

namespace cocy {

std::int64_t BitGrid::popcount() const {
  std::int64_t total = 0;
  const std::int64_t nbits = rows_ * cols_;
  const std::size_t full_words = static_cast<std::size_t>(nbits / 64);
  for (std::size_t i = 0; i < full_words; ++i) total += std::popcount(words_[i]);
  const int tail = static_cast<int>(nbits % 64);
  if (tail > 0) total += std::popcount(words_[full_words] & ((1ULL << tail) - 1));
  return total;
}

ValidationReport validate_cocycle(const EdgeConfig& cfg) {
  ValidationReport report;
  for (int y = 0; y < cfg.height(); ++y) {
    for (int x = 0; x < cfg.width(); ++x) {
      if (plaquette_residual(square_at(cfg, x, y)) != 0) {
        report.valid = false;
        report.violations.push_back(Vertex{x, y});
      }
    }
  }
  return report;
}

HeightField integrate_height(const EdgeConfig& cfg, Vertex anchor) {
  if (anchor.x < 0 || anchor.x > cfg.width() || anchor.y < 0 || anchor.y > cfg.height())
    throw DomainError("anchor outside window");
  for (int y = 0; y < cfg.height(); ++y)
    for (int x = 0; x < cfg.width(); ++x)
      if (plaquette_residual(square_at(cfg, x, y)) != 0) throw CocycleViolation(x, y);

  HeightField hf(cfg.width(), cfg.height(), anchor);
  // Row 0 along the horizontal labels, then each column upward. Validity
  // makes the result independent of this order.
  std::int32_t acc = 0;
  hf.set(0, 0, 0);
  for (int x = 0; x < cfg.width(); ++x) {
    acc += cfg.h(x, 0);
    hf.set(x + 1, 0, acc);
  }
  for (int y = 0; y < cfg.height(); ++y)
    for (int x = 0; x <= cfg.width(); ++x) hf.set(x, y + 1, hf.at(x, y) + cfg.v(x, y));

  const std::int32_t shift = hf.at(anchor.x, anchor.y);
  if (shift != 0)
    for (int y = 0; y <= cfg.height(); ++y)
      for (int x = 0; x <= cfg.width(); ++x) hf.set(x, y, hf.at(x, y) - shift);
  return hf;
}

std::int64_t f_along_path(const EdgeConfig& cfg, const LatticePath& path) {
  std::int64_t sum = 0;
  if (path.vertices.empty()) return 0;
  if (!cfg.contains_vertex(path.vertices.front()))
    throw PathOutOfWindow("path vertex outside window");
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    const Vertex a = path.vertices[i];
    const Vertex b = path.vertices[i + 1];
    if (!cfg.contains_vertex(b)) throw PathOutOfWindow("path vertex outside window");
    const int dx = b.x - a.x;
    const int dy = b.y - a.y;
    if (dx == 1 && dy == 0)
      sum += cfg.h(a.x, a.y);
    else if (dx == -1 && dy == 0)
      sum -= cfg.h(b.x, b.y);
    else if (dx == 0 && dy == 1)
      sum += cfg.v(a.x, a.y);
    else if (dx == 0 && dy == -1)
      sum -= cfg.v(a.x, b.y);
    else
      throw DomainError("path vertices must be lattice neighbours");
  }
  return sum;
}

Marginals marginals(const EdgeConfig& cfg) {
  Marginals m;
  m.h_total = cfg.horizontal_count();
  m.v_total = cfg.vertical_count();
  m.h_ones = cfg.h_grid().popcount();
  m.v_ones = cfg.v_grid().popcount();
  m.h_hat = static_cast<double>(m.h_ones) / static_cast<double>(m.h_total);
  m.v_hat = static_cast<double>(m.v_ones) / static_cast<double>(m.v_total);
  return m;
}

bool cone_contains(const ConeSpec& cone, const Vertex& z) {
  if (z.x == 0 && z.y == 0) return true;
  if (std::isinf(cone.alpha)) {
    if (z.x == 0) return true;  // slope +-infinity
    return std::abs(static_cast<double>(z.y) / static_cast<double>(z.x)) > cone.epsilon;
  }
  if (z.x == 0) return false;
  const double slope = static_cast<double>(z.y) / static_cast<double>(z.x);
  return cone.alpha - cone.epsilon <= slope && slope <= cone.alpha + cone.epsilon;
}

}  // namespace cocy
