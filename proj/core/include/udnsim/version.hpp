#pragma once

namespace udnsim {

inline constexpr const char* kToolName = "udnsim";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace udnsim
