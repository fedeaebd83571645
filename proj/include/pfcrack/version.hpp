#pragma once

namespace pfcrack {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace pfcrack
