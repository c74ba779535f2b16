#pragma once

namespace slantops {

inline constexpr const char* kEngineVersion = "0.1.0";
inline constexpr int kSymbolFormatVersion = 1;
inline constexpr int kWordFormatVersion = 1;
inline constexpr int kReportFormatVersion = 1;

}  // namespace slantops
