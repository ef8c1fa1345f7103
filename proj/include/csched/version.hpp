#pragma once

namespace csched {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace csched
