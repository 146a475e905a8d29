#include "cocy/codec.hpp"

#include <charconv>

namespace cocy {

std::string encode_config(const EdgeConfig& cfg) {
  std::string out;
  const std::size_t label_bytes =
      static_cast<std::size_t>(cfg.horizontal_count() + cfg.vertical_count());
  out.reserve(label_bytes + 2 * static_cast<std::size_t>(cfg.height()) + 48);
  out += "COCY 1\n";
  out += "W " + std::to_string(cfg.width()) + " H " + std::to_string(cfg.height()) + "\n";
  for (int y = 0; y <= cfg.height(); ++y) {
    for (int x = 0; x < cfg.width(); ++x) out += cfg.h(x, y) ? '1' : '0';
    out += '\n';
  }
  for (int y = 0; y < cfg.height(); ++y) {
    for (int x = 0; x <= cfg.width(); ++x) out += cfg.v(x, y) ? '1' : '0';
    out += '\n';
  }
  return out;
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view bytes) : bytes_(bytes) {}

  // Returns the next line without its newline; fails if the input ends
  // before a newline shows up.
  std::string_view next(const char* section) {
    ++line_;
    if (pos_ >= bytes_.size())
      throw ParseError(line_, 1, std::string("unexpected end of file: missing ") + section);
    const std::size_t nl = bytes_.find('\n', pos_);
    if (nl == std::string_view::npos)
      throw ParseError(line_, static_cast<int>(bytes_.size() - pos_ + 1),
                       std::string("missing trailing newline in ") + section);
    std::string_view line = bytes_.substr(pos_, nl - pos_);
    pos_ = nl + 1;
    return line;
  }

  bool exhausted() const { return pos_ >= bytes_.size(); }
  int line() const { return line_; }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
  int line_ = 0;
};

int parse_int(std::string_view text, int line, int column, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1)
    throw ParseError(line, column, std::string("expected positive integer for ") + what);
  return value;
}

}  // namespace

EdgeConfig decode_config(std::string_view bytes) {
  LineReader reader(bytes);

  if (reader.next("magic line") != "COCY 1") throw ParseError(1, 1, "expected 'COCY 1'");

  const std::string_view dims = reader.next("dimension line");
  if (dims.substr(0, 2) != "W ") throw ParseError(2, 1, "expected 'W <int> H <int>'");
  const std::size_t h_pos = dims.find(" H ");
  if (h_pos == std::string_view::npos) throw ParseError(2, 1, "expected 'W <int> H <int>'");
  const int W = parse_int(dims.substr(2, h_pos - 2), 2, 3, "W");
  const int H = parse_int(dims.substr(h_pos + 3), 2, static_cast<int>(h_pos + 4), "H");

  EdgeConfig cfg(W, H);
  for (int y = 0; y <= H; ++y) {
    const std::string_view row = reader.next("horizontal label rows");
    if (static_cast<int>(row.size()) != W)
      throw ParseError(reader.line(), static_cast<int>(row.size()) + 1,
                       "horizontal row must have exactly W characters");
    for (int x = 0; x < W; ++x) {
      if (row[x] != '0' && row[x] != '1')
        throw ParseError(reader.line(), x + 1, "labels must be '0' or '1'");
      cfg.set_h(x, y, row[x] == '1');
    }
  }
  for (int y = 0; y < H; ++y) {
    const std::string_view row = reader.next("vertical label rows");
    if (static_cast<int>(row.size()) != W + 1)
      throw ParseError(reader.line(), static_cast<int>(row.size()) + 1,
                       "vertical row must have exactly W+1 characters");
    for (int x = 0; x <= W; ++x) {
      if (row[x] != '0' && row[x] != '1')
        throw ParseError(reader.line(), x + 1, "labels must be '0' or '1'");
      cfg.set_v(x, y, row[x] == '1');
    }
  }
  if (!reader.exhausted())
    throw ParseError(reader.line() + 1, 1, "trailing bytes after the vertical label rows");
  return cfg;
}

}  // namespace cocy
