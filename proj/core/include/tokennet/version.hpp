#pragma once

namespace tokennet {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "tokennet";

}  // namespace tokennet
