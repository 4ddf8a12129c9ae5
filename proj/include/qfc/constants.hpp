#pragma once

#include <numbers>

namespace qfc::constants {

// CODATA 2018 exact / recommended values.
inline constexpr double kSpeedOfLight = 2.99792458e8;       // m/s
inline constexpr double kPlanck = 6.62607015e-34;           // J s
inline constexpr double kHbar = kPlanck / (2.0 * std::numbers::pi);
inline constexpr double kBoltzmann = 1.380649e-23;          // J/K
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F/m
inline constexpr double kPascalPerBar = 1.0e5;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace qfc::constants
