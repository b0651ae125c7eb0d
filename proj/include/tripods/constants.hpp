#pragma once
#include <numbers>

namespace tripods::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double sqrt3 = std::numbers::sqrt3;

/// Limit of primitive tripod counts over R^4 for unit covolume.
inline constexpr double main_constant = 15.0 * sqrt3 / (4.0 * pi * pi * pi);
/// Volume of the region of admissible (z, w) with tripod length <= 1.
inline constexpr double omega_volume = sqrt3 * pi / 24.0;
inline constexpr double zeta4_inv = 90.0 / (pi * pi * pi * pi);
inline constexpr double one_minus_6_over_pi2 = 1.0 - 6.0 / (pi * pi);
inline constexpr double eisenstein_total = pi / 12.0;
inline constexpr double nonreduced_bound = one_minus_6_over_pi2 * pi / 16.0;
inline constexpr double c1 = one_minus_6_over_pi2 * 3.0 / 4.0;
inline constexpr double c2 = zeta4_inv;

}  // namespace tripods::constants
