#pragma once

namespace khintchine {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace khintchine
