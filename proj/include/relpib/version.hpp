#pragma once

namespace relpib {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace relpib
