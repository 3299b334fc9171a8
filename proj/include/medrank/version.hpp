#pragma once

namespace medrank {

inline constexpr const char* kVersion = "0.1.0";

// Bumped when the report text format changes incompatibly.
inline constexpr int kReportSchema = 1;

}  // namespace medrank
