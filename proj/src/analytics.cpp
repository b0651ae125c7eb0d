#include "tripods/analytics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "tripods/constants.hpp"
#include "tripods/geometry.hpp"

namespace tripods {

namespace {

const Complex kRot60 = std::polar(1.0, constants::pi / 3.0);

FloatPoint as_point(Complex z) { return {z.real(), z.imag()}; }

std::mt19937_64 block_rng(std::uint64_t seed, std::uint64_t block) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  return std::mt19937_64(seq);
}

Complex disk_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = radius * std::sqrt(unit(rng));
  const double theta = 2.0 * constants::pi * unit(rng);
  return std::polar(r, theta);
}

std::uint64_t count_block(std::uint64_t seed, std::uint64_t block, std::uint64_t n) {
  std::mt19937_64 rng = block_rng(seed, block);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const Complex z = disk_point(rng, 1.0);
    const Complex w = disk_point(rng, 1.0);
    hits += omega_membership(z, w);
  }
  return hits;
}

VolumeEstimate make_estimate(std::uint64_t samples, std::uint64_t hits, std::uint64_t seed) {
  VolumeEstimate v;
  const double bounding = constants::pi * constants::pi;
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  v.samples = samples;
  v.hits = hits;
  v.seed = seed;
  v.estimate = bounding * p;
  v.standard_error = std::sqrt(p * (1.0 - p) / static_cast<double>(samples)) * bounding;
  v.reference = constants::omega_volume;
  return v;
}

void require_samples(std::uint64_t samples) {
  if (samples < 10000) throw std::invalid_argument("volume estimate needs at least 10^4 samples");
}

double segment_distance(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

// -1 outside, 0 within tol of the boundary, 1 inside.
int triangle_side(Complex p, Complex a, Complex b, Complex c, double tol) {
  const double d = std::min({segment_distance(p, a, b), segment_distance(p, b, c),
                             segment_distance(p, c, a)});
  if (d <= tol) return 0;
  const auto side = [](Complex o, Complex e, Complex q) {
    return cross(as_point(e - o), as_point(q - o));
  };
  const double s1 = side(a, b, p), s2 = side(b, c, p), s3 = side(c, a, p);
  const bool inside = (s1 > 0 && s2 > 0 && s3 > 0) || (s1 < 0 && s2 < 0 && s3 < 0);
  return inside ? 1 : -1;
}

// Membership with u supplied rather than recomputed from w, so slices whose
// u lies on |u| = 1 or on the ray arg u = 0 are not decided by rounding.
bool membership_given_u(Complex z, Complex w, Complex u) {
  const FloatPoint zp = as_point(z), wp = as_point(w);
  if (!(cross(zp, wp) > 0.0)) return false;
  if (!detail::vertex_angle_below_120(zp, wp) || !detail::vertex_angle_below_120(-zp, wp - zp) ||
      !detail::vertex_angle_below_120(-wp, zp - wp)) {
    return false;
  }
  return std::norm(u) <= 1.0 && in_lemma_sector(as_point(u));
}

bool in_slice(Complex z, Complex u) {
  return membership_given_u(z, std::conj(kRot60) * z + kRot60 * u, u);
}

bool sector_arg(Complex u) {
  return std::abs(u) > 0.0 && in_lemma_sector(as_point(u));
}

}  // namespace

std::vector<std::pair<std::string, double>> reference_constants() {
  return {
      {"main_constant", constants::main_constant},
      {"omega_volume", constants::omega_volume},
      {"zeta4_inv", constants::zeta4_inv},
      {"eisenstein_total", constants::eisenstein_total},
      {"nonreduced_bound", constants::nonreduced_bound},
      {"one_minus_6_over_pi2", constants::one_minus_6_over_pi2},
      {"C1", constants::c1},
      {"C2", constants::c2},
  };
}

bool omega_membership(Complex z, Complex w) {
  return membership_given_u(z, w, kRot60 * z + std::conj(kRot60) * w);
}

VolumeEstimate mc_omega_volume(std::uint64_t samples, std::uint64_t seed, int threads) {
  require_samples(samples);
  if (threads < 1) throw std::invalid_argument("thread count must be positive");
  const std::uint64_t blocks = (samples + kSampleBlock - 1) / kSampleBlock;
  std::uint64_t hits = 0;
#pragma omp parallel for schedule(static) reduction(+ : hits) num_threads(threads)
  for (std::uint64_t b = 0; b < blocks; ++b) {
    const std::uint64_t n = std::min(kSampleBlock, samples - b * kSampleBlock);
    hits += count_block(seed, b, n);
  }
  return make_estimate(samples, hits, seed);
}

VolumeEstimate mc_omega_volume_serial(std::uint64_t samples, std::uint64_t seed) {
  require_samples(samples);
  std::uint64_t hits = 0;
  for (std::uint64_t done = 0, b = 0; done < samples; done += kSampleBlock, ++b) {
    hits += count_block(seed, b, std::min(kSampleBlock, samples - done));
  }
  return make_estimate(samples, hits, seed);
}

SliceCheck slice_property_check(Complex u, std::uint64_t trials, std::uint64_t seed) {
  const bool zero = u == Complex{};
  if (std::abs(u) > 1.0 || (!zero && !sector_arg(u))) {
    throw std::invalid_argument("slice needs |u| <= 1 and arg u in [0, 2pi/3)");
  }
  if (trials == 0) throw std::invalid_argument("slice check needs at least one trial");
  SliceCheck out;
  out.u = u;
  out.trials = trials;
  out.area_reference = constants::sqrt3 / 4.0 * std::norm(u);

  const double radius = zero ? 1.0 : 1.25 * std::abs(u);
  const Complex a = 0.0, b = u, c = u * std::conj(kRot60);
  std::uint64_t hits = 0;
  std::mt19937_64 rng = block_rng(seed, 0);
  for (std::uint64_t i = 0; i < trials; ++i) {
    const Complex z = disk_point(rng, radius);
    const bool member = in_slice(z, u);
    hits += member;
    const int side = zero ? -1 : triangle_side(z, a, b, c, 1e-9);
    if (side == 0) {
      ++out.skipped;
      continue;
    }
    if (member != (side > 0)) {
      ++out.mismatches;
      if (out.counterexamples.size() < 8) out.counterexamples.push_back(z);
    }
  }
  const double box = constants::pi * radius * radius;
  const double p = static_cast<double>(hits) / static_cast<double>(trials);
  out.area_estimate = box * p;
  out.area_standard_error = box * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  const bool area_ok = std::abs(out.area_estimate - out.area_reference) <=
                       4.0 * out.area_standard_error + 1e-12;
  out.passed = out.mismatches == 0 && area_ok;
  return out;
}

EquivarianceCheck equivariance_check(std::uint64_t trials, std::uint64_t seed) {
  EquivarianceCheck out;
  out.trials = trials;
  std::mt19937_64 rng = block_rng(seed, 0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double sector = 2.0 * constants::pi / 3.0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const double arg_u = sector * unit(rng);
    const Complex u = std::polar(0.1 + 0.9 * unit(rng), arg_u);
    const double alpha = -arg_u + sector * unit(rng);
    const Complex cf = std::polar(0.1 + 0.9 * unit(rng), alpha);
    const Complex z = disk_point(rng, 1.25 * std::abs(u));
    const Complex cu = cf * u;
    if (!sector_arg(u) || !sector_arg(cu) ||
        triangle_side(z, 0.0, u, u * std::conj(kRot60), 1e-9) == 0) {
      ++out.skipped;
      continue;
    }
    if (in_slice(z, u) != in_slice(cf * z, cu)) ++out.mismatches;
  }
  return out;
}

JacobianCheck jacobian_check(std::uint64_t points, std::uint64_t seed) {
  JacobianCheck out;
  out.points = points;
  std::mt19937_64 rng = block_rng(seed, 0);
  const auto phi = [](const Eigen::Vector4d& x) {
    const Complex z{x[0], x[1]}, w{x[2], x[3]};
    const Complex u = kRot60 * z + std::conj(kRot60) * w;
    return Eigen::Vector4d{z.real(), z.imag(), u.real(), u.imag()};
  };
  const double h = 1e-2;
  for (std::uint64_t i = 0; i < points; ++i) {
    const Complex z = disk_point(rng, 1.0), w = disk_point(rng, 1.0);
    const Eigen::Vector4d x{z.real(), z.imag(), w.real(), w.imag()};
    Eigen::Matrix4d jac;
    for (int k = 0; k < 4; ++k) {
      Eigen::Vector4d step = Eigen::Vector4d::Zero();
      step[k] = h;
      jac.col(k) = (phi(x + step) - phi(x - step)) / (2.0 * h);
    }
    out.max_deviation = std::max(out.max_deviation, std::abs(std::abs(jac.determinant()) - 1.0));
  }
  return out;
}

}  // namespace tripods
