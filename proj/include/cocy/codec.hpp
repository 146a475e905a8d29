#pragma once

#include <string>
#include <string_view>

#include "cocy/lattice.hpp"

namespace cocy {

// COCY v1 text codec.
//
//   COCY 1
//   W <int> H <int>
//   H+1 lines of W characters in {0,1}   (horizontal labels, row y=0 first)
//   H   lines of W+1 characters          (vertical labels, row y=0 first)
//
// Every line is newline-terminated, including the last; any other byte is a
// parse error. Encoding is canonical: one byte sequence per config.
std::string encode_config(const EdgeConfig& cfg);
EdgeConfig decode_config(std::string_view bytes);

}  // namespace cocy
