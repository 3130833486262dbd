#pragma once

namespace cliffbreak {

inline constexpr const char* kToolName = "cliffbreak";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace cliffbreak
