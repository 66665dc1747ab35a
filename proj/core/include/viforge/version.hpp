#pragma once

namespace viforge {

inline constexpr const char* version = "0.1.0";

} // namespace viforge
