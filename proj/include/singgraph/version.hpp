#pragma once

namespace sg {

inline constexpr const char* kToolName = "singgraph";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace sg
