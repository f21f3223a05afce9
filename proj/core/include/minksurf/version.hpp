#pragma once

namespace minksurf {

inline constexpr const char* kToolName = "minksurf";
inline constexpr const char* kVersion = "0.1.0";

// Internal unit convention used by every module: hbar = 2m = 1, so a
// length scale R reports energies in units hbar^2/(2 m R^2).
inline constexpr const char* kUnitsNote = "hbar=2m=1";

}  // namespace minksurf
