#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "tripods/errors.hpp"
#include "tripods/lattice.hpp"
#include "tripods/vec2.hpp"

namespace tripods {

/// Endpoints z = a + b*tau and w = c + d*tau of a candidate tripod with the
/// third endpoint at the origin.
struct Quadruple {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 0;

  LatticeVector z() const { return {a, b}; }
  LatticeVector w() const { return {c, d}; }
  /// ad - bc; positive for positively oriented pairs.
  std::int64_t determinant() const { return a * d - b * c; }
  Quadruple scaled(std::int64_t k) const { return {k * a, k * b, k * c, k * d}; }

  friend bool operator==(const Quadruple&, const Quadruple&) = default;
  friend auto operator<=>(const Quadruple&, const Quadruple&) = default;
};

namespace detail {

template <class T>
void require_nondegenerate(const Vec2<T>& z, const Vec2<T>& w) {
  if (sign_of(norm_sq(z)) == 0 || sign_of(norm_sq(w)) == 0) {
    throw InvalidTripod("nonzero", "tripod endpoint coincides with the origin");
  }
  if (sign_of(cross(z, w)) == 0) {
    throw InvalidTripod("collinear", "0, z and w are collinear");
  }
}

template <class T>
void require_oriented(const Vec2<T>& z, const Vec2<T>& w) {
  if (sign_of(cross(z, w)) <= 0) {
    throw InvalidTripod("orientation", "need arg(z) < arg(w) < arg(z) + pi");
  }
}

/// Angle between e1 and e2 strictly below 2pi/3, i.e. 2<e1,e2> + |e1||e2| > 0.
template <class T>
bool vertex_angle_below_120(const Vec2<T>& e1, const Vec2<T>& e2) {
  const T d = dot(e1, e2);
  if (sign_of(d) >= 0) return true;
  return sign_of(norm_sq(e1) * norm_sq(e2) - T(4) * d * d) > 0;
}

}  // namespace detail

/// All three angles of the triangle (0, z, w) are strictly below 2pi/3.
/// Throws InvalidTripod for a zero endpoint or collinear input.
template <class T>
bool angle_condition(const Vec2<T>& z, const Vec2<T>& w) {
  detail::require_nondegenerate(z, w);
  return detail::vertex_angle_below_120(z, w) &&
         detail::vertex_angle_below_120(-z, w - z) &&
         detail::vertex_angle_below_120(-w, z - w);
}

/// Float angle condition that also rejects angles within `eps` (relative) of
/// 2pi/3, where the Fermat point would sit on a vertex up to rounding.
inline bool angle_condition_with_margin(const FloatPoint& z, const FloatPoint& w, double eps) {
  const auto clear = [eps](const FloatPoint& e1, const FloatPoint& e2) {
    const double n = std::sqrt(norm_sq(e1) * norm_sq(e2));
    return 2.0 * dot(e1, e2) + n > eps * n;
  };
  detail::require_nondegenerate(z, w);
  return clear(z, w) && clear(-z, w - z) && clear(-w, z - w);
}

/// Toricelli point u = e^{i pi/3} z + e^{-i pi/3} w. |u| is the tripod length
/// and arg(u) the direction of the leg from 0 to the Fermat point.
template <class T>
Vec2<T> toricelli_point(const Vec2<T>& z, const Vec2<T>& w) {
  detail::require_oriented(z, w);
  return rotate_plus60(z) + rotate_minus60(w);
}

/// Squared tripod length |z|^2 + |w|^2 - <z,w> + sqrt3 * cross(z, w).
template <class T>
T tripod_length_sq(const Vec2<T>& z, const Vec2<T>& w) {
  if (!angle_condition(z, w)) {
    throw InvalidTripod("angle_condition", "triangle has an angle >= 2pi/3");
  }
  detail::require_oriented(z, w);
  return norm_sq(z) + norm_sq(w) - dot(z, w) + ScalarTraits<T>::sqrt3() * cross(z, w);
}

/// Fermat point: the segment 0-u meets the segment from z to the apex
/// e^{i pi/3} w of the outer equilateral triangle on side 0w. Computed by line
/// intersection, so it is exact for exact scalars. An angle of exactly 2pi/3
/// puts the point on a vertex and is rejected.
template <class T>
Vec2<T> fermat_point(const Vec2<T>& z, const Vec2<T>& w) {
  if (!angle_condition(z, w)) {
    throw InvalidTripod("angle_condition", "triangle has an angle >= 2pi/3");
  }
  const Vec2<T> u = toricelli_point(z, w);
  const Vec2<T> apex_dir = rotate_plus60(w) - z;
  const T t = cross(apex_dir, z) / cross(apex_dir, u);
  return t * u;
}

/// Which of the three planar lifts of a torus tripod is counted.
enum class Canonicalization {
  lemma,     // arg(u) in [0, 2pi/3)
  appendix,  // largest triangle angle strictly at the origin
};

/// arg(v) in the half-open sector [0, 2pi/3).
template <class T>
bool in_lemma_sector(const Vec2<T>& v) {
  const int sy = sign_of(v.y);
  if (sy == 0) return sign_of(v.x) > 0;
  return sy > 0 && sign_of(ScalarTraits<T>::sqrt3() * v.x + v.y) > 0;
}

/// Float sector test that snaps |component| <= eps*|v| to zero before
/// applying the half-open rule.
inline bool in_lemma_sector_with_margin(const FloatPoint& v, double eps) {
  const double tol = eps * std::sqrt(norm_sq(v));
  const auto fuzzy = [tol](double x) { return std::abs(x) <= tol ? 0 : (x > 0 ? 1 : -1); };
  const int sy = fuzzy(v.y);
  if (sy == 0) return fuzzy(v.x) > 0;
  return sy > 0 && fuzzy((ScalarTraits<double>::sqrt3() * v.x + v.y) / 2.0) > 0;
}

/// The side opposite the origin is strictly the longest:
/// min(|z|^2, |w|^2) > 2 <z, w>.
template <class T>
bool largest_angle_at_origin(const Vec2<T>& z, const Vec2<T>& w) {
  const T twice_dot = T(2) * dot(z, w);
  return sign_of(norm_sq(z) - twice_dot) > 0 && sign_of(norm_sq(w) - twice_dot) > 0;
}

/// Canonical-lift test for a valid, positively oriented pair.
template <class T>
bool is_canonical(const Vec2<T>& z, const Vec2<T>& w, Canonicalization mode) {
  if (mode == Canonicalization::appendix) return largest_angle_at_origin(z, w);
  return in_lemma_sector(toricelli_point(z, w));
}

/// Gaussian closed form (a^2+b^2+c^2+d^2 - ac - bd) + (ad - bc) sqrt3.
QuadraticNumber gaussian_length_sq(const Quadruple& q);
/// Eisenstein Toricelli point (-b + c + d) + (a + b - c) zeta, a lattice point.
LatticeVector eisenstein_toricelli(const Quadruple& q);
/// Eisenstein squared length |u|^2 = m^2 + m k + k^2 for u = m + k zeta.
std::int64_t eisenstein_length_sq(const Quadruple& q);

struct ExactTripodGeometry {
  ExactPoint z, w, u, p;
  QuadraticNumber length_sq;
  /// |p|^2, |z - p|^2, |w - p|^2
  std::array<QuadraticNumber, 3> leg_length_sq;
};

struct TripodFlags {
  bool primitive = false;
  std::optional<bool> reduced;  // unset until classified
  bool heuristic = false;       // reducedness came from float tolerances
  std::optional<bool> degenerate_intersections;
};

struct Tripod {
  Quadruple coords;
  std::int64_t index_n = 0;
  std::optional<ExactTripodGeometry> exact;  // preset lattices only
  FloatPoint z, w, u, p;
  double length_sq = 0.0;
  double length = 0.0;
  std::array<double, 3> leg_lengths{};  // |p|, |z - p|, |w - p|
  TripodFlags flags;
};

/// Validates the quadruple (nonzero, non-collinear, positively oriented,
/// strict angle condition) and fills in the geometry and the primitive flag.
/// Throws InvalidTripod naming the failing predicate.
Tripod make_tripod(const Quadruple& q, const LatticeSpec& lattice);

enum class SegmentMethod { direction, bounding_box };

struct ReducednessDetail {
  bool legs_clear = true;
  bool fermat_on_lattice = false;
  bool heuristic = false;
  std::array<std::vector<LatticeVector>, 3> leg_points;  // legs 0-p, z-p, w-p
};

ReducednessDetail reducedness_detail(const Tripod& tripod, const LatticeSpec& lattice,
                                     SegmentMethod method = SegmentMethod::direction);

/// primitive <=> gcd(a,b,c,d) = 1; reduced <=> primitive, no lattice point in
/// the interior of any leg, and the Fermat point is not a lattice point.
TripodFlags classify(const Tripod& tripod, const LatticeSpec& lattice,
                     SegmentMethod method = SegmentMethod::direction);

/// Exact reducedness of a primitive preset-lattice quadruple without building
/// the float views. Used by the census kernel.
bool is_reduced_exact(const Quadruple& q, const LatticeSpec& lattice);

struct VolumeIndex {
  double volume = 0.0;                         // (sqrt3/4)(l^2 - L2^2)
  std::optional<QuadraticNumber> exact_volume;  // preset lattices
  std::int64_t index = 0;                       // ad - bc
};

VolumeIndex tripod_volume_and_index(const Tripod& tripod, const LatticeSpec& lattice);

}  // namespace tripods
