#pragma once

namespace polyflow {

inline constexpr const char* kVersion = "polyflow 0.1.0";
inline constexpr int kOutputSchema = 1;

}  // namespace polyflow
