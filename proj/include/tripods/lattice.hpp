#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tripods/quadratic.hpp"
#include "tripods/vec2.hpp"

namespace tripods {

enum class LatticeMode { gaussian, eisenstein, general_tau };

/// The lattice Z + Z*tau. Preset modes (Gaussian tau = i, Eisenstein
/// tau = e^{i pi/3}) are evaluated exactly in Q(sqrt 3); `epsilon` only
/// matters for GeneralTau.
struct LatticeSpec {
  LatticeMode mode = LatticeMode::gaussian;
  double tau_s = 0.0;
  double tau_t = 1.0;
  double epsilon = 1e-9;

  static LatticeSpec gaussian() { return {}; }
  static LatticeSpec eisenstein() {
    return {LatticeMode::eisenstein, 0.5, 0.86602540378443864676, 1e-9};
  }
  /// Throws std::invalid_argument unless t > 0.
  static LatticeSpec general(double s, double t, double epsilon = 1e-9);

  bool exact() const { return mode != LatticeMode::general_tau; }
  double covolume() const { return tau_t; }
  /// Covolume as an element of Q(sqrt 3); preset modes only.
  QuadraticNumber exact_covolume() const;
  /// Canonical selection string: "gaussian", "eisenstein" or "tau=<s>,<t>".
  std::string name() const;
};

/// Parses `gaussian`, `eisenstein` or `tau=<s>,<t>`. Throws std::invalid_argument.
LatticeSpec parse_lattice(std::string_view text);

double covolume(const LatticeSpec& lattice);

/// Integer coordinates with respect to the basis {1, tau}.
struct LatticeVector {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

/// Embedding a + b*tau. The exact overload throws std::logic_error for GeneralTau.
ExactPoint embed_exact(const LatticeVector& v, const LatticeSpec& lattice);
FloatPoint embed(const LatticeVector& v, const LatticeSpec& lattice);

/// Inverse basis map: planar point -> (real) lattice coordinates.
ExactPoint to_lattice_coords(const ExactPoint& p, const LatticeSpec& lattice);
FloatPoint to_lattice_coords(const FloatPoint& p, const LatticeSpec& lattice);
/// Lattice coordinates -> planar point (the forward basis map on real coordinates).
FloatPoint from_lattice_coords(const FloatPoint& coords, const LatticeSpec& lattice);

/// Bounding box on |a|, |b| for lattice vectors a + b*tau of length <= radius.
struct CoordinateBox {
  std::int64_t a_max = 0;
  std::int64_t b_max = 0;
};
CoordinateBox coordinate_box(double radius, const LatticeSpec& lattice);

/// gcd(a, b, c, d) == 1. Throws std::invalid_argument when all four are zero.
bool is_primitive_quadruple(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

std::int64_t gcd4(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

struct SegmentLatticePoints {
  std::vector<LatticeVector> points;  // sorted
  bool heuristic = false;             // float tolerance was involved
};

/// Lattice points strictly inside the segment between two planar points, by
/// enumerating the lattice-coordinate bounding box and testing collinearity
/// and the open parameter range. Exact in preset modes. Throws
/// std::invalid_argument if the endpoints coincide.
SegmentLatticePoints lattice_points_on_open_segment(const ExactPoint& endpoint_a,
                                                    const ExactPoint& endpoint_b,
                                                    const LatticeSpec& lattice);
SegmentLatticePoints lattice_points_on_open_segment(const FloatPoint& endpoint_a,
                                                    const FloatPoint& endpoint_b,
                                                    const LatticeSpec& lattice);

/// Same set, computed from lattice coordinates in O(1) exact operations:
/// integer points on a line through the integer point `start` exist only when
/// the direction is rational, and then they are start + j*step.
std::vector<LatticeVector> lattice_points_on_open_segment_from(const LatticeVector& start,
                                                               const ExactPoint& end_coords);

/// True iff the lattice coordinates are integers.
bool is_lattice_point(const ExactPoint& coords);

}  // namespace tripods
