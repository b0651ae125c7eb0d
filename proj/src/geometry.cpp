#include "tripods/geometry.hpp"

#include <cmath>

namespace tripods {

QuadraticNumber gaussian_length_sq(const Quadruple& q) {
  const auto [a, b, c, d] = q;
  return {Rational{a * a + b * b + c * c + d * d - a * c - b * d}, Rational{a * d - b * c}};
}

LatticeVector eisenstein_toricelli(const Quadruple& q) {
  return {-q.b + q.c + q.d, q.a + q.b - q.c};
}

std::int64_t eisenstein_length_sq(const Quadruple& q) {
  const LatticeVector u = eisenstein_toricelli(q);
  return u.a * u.a + u.a * u.b + u.b * u.b;
}

Tripod make_tripod(const Quadruple& q, const LatticeSpec& lattice) {
  Tripod t;
  t.coords = q;
  t.index_n = q.determinant();
  if (lattice.exact()) {
    ExactTripodGeometry g;
    g.z = embed_exact(q.z(), lattice);
    g.w = embed_exact(q.w(), lattice);
    g.length_sq = tripod_length_sq(g.z, g.w);  // validates
    g.u = toricelli_point(g.z, g.w);
    g.p = fermat_point(g.z, g.w);
    g.leg_length_sq = {norm_sq(g.p), norm_sq(g.z - g.p), norm_sq(g.w - g.p)};
    t.z = to_float(g.z);
    t.w = to_float(g.w);
    t.u = to_float(g.u);
    t.p = to_float(g.p);
    t.length_sq = g.length_sq.to_double();
    for (std::size_t i = 0; i < 3; ++i) t.leg_lengths[i] = std::sqrt(g.leg_length_sq[i].to_double());
    t.exact = std::move(g);
  } else {
    t.z = embed(q.z(), lattice);
    t.w = embed(q.w(), lattice);
    t.length_sq = tripod_length_sq(t.z, t.w);
    t.u = toricelli_point(t.z, t.w);
    t.p = fermat_point(t.z, t.w);
    t.leg_lengths = {length(t.p), length(t.z - t.p), length(t.w - t.p)};
  }
  t.length = std::sqrt(t.length_sq);
  t.flags.primitive = gcd4(q.a, q.b, q.c, q.d) == 1;
  return t;
}

ReducednessDetail reducedness_detail(const Tripod& tripod, const LatticeSpec& lattice,
                                     SegmentMethod method) {
  ReducednessDetail out;
  const std::array<LatticeVector, 3> ends = {LatticeVector{0, 0}, tripod.coords.z(),
                                             tripod.coords.w()};
  if (tripod.exact) {
    const ExactPoint p_coords = to_lattice_coords(tripod.exact->p, lattice);
    out.fermat_on_lattice = is_lattice_point(p_coords);
    for (std::size_t i = 0; i < 3; ++i) {
      if (method == SegmentMethod::direction) {
        out.leg_points[i] = lattice_points_on_open_segment_from(ends[i], p_coords);
      } else {
        out.leg_points[i] =
            lattice_points_on_open_segment(embed_exact(ends[i], lattice), tripod.exact->p, lattice)
                .points;
      }
    }
  } else {
    out.heuristic = true;
    const FloatPoint pc = to_lattice_coords(tripod.p, lattice);
    const FloatPoint nearest{std::round(pc.x), std::round(pc.y)};
    out.fermat_on_lattice = length(from_lattice_coords(nearest, lattice) - tripod.p) <= lattice.epsilon;
    for (std::size_t i = 0; i < 3; ++i) {
      out.leg_points[i] = lattice_points_on_open_segment(embed(ends[i], lattice), tripod.p, lattice).points;
    }
  }
  for (const auto& pts : out.leg_points) out.legs_clear = out.legs_clear && pts.empty();
  return out;
}

TripodFlags classify(const Tripod& tripod, const LatticeSpec& lattice, SegmentMethod method) {
  TripodFlags flags = tripod.flags;
  const auto [a, b, c, d] = tripod.coords;
  flags.primitive = is_primitive_quadruple(a, b, c, d);
  if (!flags.primitive) {
    flags.reduced = false;
    flags.heuristic = !lattice.exact();
    return flags;
  }
  const ReducednessDetail detail = reducedness_detail(tripod, lattice, method);
  flags.reduced = detail.legs_clear && !detail.fermat_on_lattice;
  flags.heuristic = detail.heuristic;
  return flags;
}

bool is_reduced_exact(const Quadruple& q, const LatticeSpec& lattice) {
  const ExactPoint z = embed_exact(q.z(), lattice);
  const ExactPoint w = embed_exact(q.w(), lattice);
  const ExactPoint p = to_lattice_coords(fermat_point(z, w), lattice);
  if (is_lattice_point(p)) return false;
  return lattice_points_on_open_segment_from({0, 0}, p).empty() &&
         lattice_points_on_open_segment_from(q.z(), p).empty() &&
         lattice_points_on_open_segment_from(q.w(), p).empty();
}

VolumeIndex tripod_volume_and_index(const Tripod& tripod, const LatticeSpec& /*lattice*/) {
  VolumeIndex out;
  out.index = tripod.coords.determinant();
  if (tripod.exact) {
    const auto& g = *tripod.exact;
    const QuadraticNumber l2_sq = g.leg_length_sq[0] + g.leg_length_sq[1] + g.leg_length_sq[2];
    const QuadraticNumber vol =
        QuadraticNumber{Rational{0}, Rational{1, 4}} * (g.length_sq - l2_sq);
    out.exact_volume = vol;
    out.volume = vol.to_double();
  } else {
    const auto& l = tripod.leg_lengths;
    const double l2_sq = l[0] * l[0] + l[1] * l[1] + l[2] * l[2];
    const double sum = l[0] + l[1] + l[2];
    out.volume = std::sqrt(3.0) / 4.0 * (sum * sum - l2_sq);
  }
  return out;
}

}  // namespace tripods
