#pragma once
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tripods {

using Complex = std::complex<double>;

/// Name of the sampler: one mt19937_64 per block of kSampleBlock draws,
/// seeded with seed_seq(seed, block index).
inline constexpr const char* kSamplerName = "mt19937_64/seed_seq(seed,block)";
inline constexpr std::uint64_t kSampleBlock = 1u << 16;

/// Closed-form constants keyed by name, in a fixed order.
std::vector<std::pair<std::string, double>> reference_constants();

/// (z, w) lies in the region of canonical tripods of length <= 1:
/// arg z < arg w < arg z + pi, every angle of (0, z, w) below 2pi/3,
/// |u| <= 1 and arg u in [0, 2pi/3).
bool omega_membership(Complex z, Complex w);

struct VolumeEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  std::uint64_t seed = 0;
  double reference = 0.0;  // sqrt3 pi / 24
  std::string sampler = kSamplerName;
};

/// z and w uniform in the unit disk; estimate = pi^2 * hit fraction.
/// Throws std::invalid_argument for fewer than 10^4 samples.
VolumeEstimate mc_omega_volume(std::uint64_t samples, std::uint64_t seed, int threads);
/// Same stream, single loop. Kept as a reference for the parallel version.
VolumeEstimate mc_omega_volume_serial(std::uint64_t samples, std::uint64_t seed);

struct SliceCheck {
  Complex u;
  std::uint64_t trials = 0;
  std::uint64_t skipped = 0;     // within 1e-9 of the triangle boundary
  std::uint64_t mismatches = 0;
  std::vector<Complex> counterexamples;  // first few mismatching z
  double area_estimate = 0.0;
  double area_standard_error = 0.0;
  double area_reference = 0.0;  // sqrt3 |u|^2 / 4
  bool passed = false;
};

/// Compares z in u * triangle(0, 1, e^{-i pi/3}) with membership of
/// (z, e^{-i pi/3} z + e^{i pi/3} u) in the region, on random z from a disk
/// around the triangle. Throws std::invalid_argument unless |u| <= 1 and
/// arg u in [0, 2pi/3) (u = 0 allowed).
SliceCheck slice_property_check(Complex u, std::uint64_t trials, std::uint64_t seed);

struct EquivarianceCheck {
  std::uint64_t trials = 0;
  std::uint64_t skipped = 0;
  std::uint64_t mismatches = 0;
};

/// z in slice(u) <=> c z in slice(c u) for random |c| <= 1 with u and c u
/// both in the sector.
EquivarianceCheck equivariance_check(std::uint64_t trials, std::uint64_t seed);

struct JacobianCheck {
  std::uint64_t points = 0;
  double max_deviation = 0.0;  // max | |det J| - 1 |
};

/// Finite-difference 4x4 real Jacobian of (z, w) -> (z, u) at random points.
JacobianCheck jacobian_check(std::uint64_t points, std::uint64_t seed);

}  // namespace tripods
