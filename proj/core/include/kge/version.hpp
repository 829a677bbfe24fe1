#pragma once

namespace kge {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace kge
