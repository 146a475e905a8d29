#pragma once

namespace cocy {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cocy
