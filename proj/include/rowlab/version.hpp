#pragma once

namespace rowlab {

inline constexpr const char* kToolName = "rowlab";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace rowlab
