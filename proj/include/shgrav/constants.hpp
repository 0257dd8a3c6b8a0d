#pragma once

namespace shgrav::constants {

/// CODATA 2018 gravitational constant [m^3 kg^-1 s^-2].
inline constexpr double kGravitationalConstant = 6.67430e-11;

/// 1 mgal in m/s^2.
inline constexpr double kMgal = 1.0e-5;

}  // namespace shgrav::constants
