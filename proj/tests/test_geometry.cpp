#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "doctest.h"
#include "tripods/geometry.hpp"

using namespace tripods;

namespace {

const LatticeSpec kGauss = LatticeSpec::gaussian();
const LatticeSpec kEis = LatticeSpec::eisenstein();

QuadraticNumber qi(std::int64_t v) { return QuadraticNumber{v}; }

ExactPoint ez(const Quadruple& q, const LatticeSpec& l) { return embed_exact(q.z(), l); }
ExactPoint ew(const Quadruple& q, const LatticeSpec& l) { return embed_exact(q.w(), l); }

// Float angle oracle: largest interior angle of (0, z, w) via acos.
double largest_angle(FloatPoint z, FloatPoint w) {
  auto angle = [](FloatPoint e1, FloatPoint e2) {
    double c = dot(e1, e2) / (length(e1) * length(e2));
    return std::acos(std::clamp(c, -1.0, 1.0));
  };
  return std::max({angle(z, w), angle(-z, w - z), angle(-w, z - w)});
}

// Weiszfeld iteration for the point minimising the sum of distances.
FloatPoint weiszfeld(FloatPoint a, FloatPoint b, FloatPoint c) {
  FloatPoint x{(a.x + b.x + c.x) / 3, (a.y + b.y + c.y) / 3};
  for (int it = 0; it < 20000; ++it) {
    double wsum = 0;
    FloatPoint acc{0, 0};
    for (const FloatPoint& v : {a, b, c}) {
      double d = length(v - x);
      if (d < 1e-15) return x;
      acc = acc + (1.0 / d) * v;
      wsum += 1.0 / d;
    }
    x = (1.0 / wsum) * acc;
  }
  return x;
}

// Tripods with squared length < limit, positively oriented, in |coord| <= box.
std::vector<Tripod> small_tripods(const LatticeSpec& lat, double max_len_sq, int box) {
  std::vector<Tripod> out;
  for (int a = -box; a <= box; ++a)
    for (int b = -box; b <= box; ++b)
      for (int c = -box; c <= box; ++c)
        for (int d = -box; d <= box; ++d) {
          Quadruple q{a, b, c, d};
          if (q.determinant() <= 0) continue;
          FloatPoint z = embed(q.z(), lat), w = embed(q.w(), lat);
          if (norm_sq(z) + norm_sq(w) - dot(z, w) + std::sqrt(3.0) * cross(z, w) > max_len_sq) continue;
          if (largest_angle(z, w) > 2.1) continue;
          if (!angle_condition(embed_exact(q.z(), lat), embed_exact(q.w(), lat))) continue;
          out.push_back(make_tripod(q, lat));
        }
  return out;
}

}  // namespace

TEST_CASE("angle_condition examples") {
  CHECK(angle_condition(ExactPoint{qi(1), qi(0)}, ExactPoint{qi(0), qi(1)}));
  CHECK_FALSE(angle_condition(ExactPoint{qi(1), qi(0)}, ExactPoint{qi(-1), qi(1)}));
  CHECK(angle_condition(ez({1, 0, 0, 1}, kEis), ew({1, 0, 0, 1}, kEis)));
  CHECK_THROWS_AS(angle_condition(ExactPoint{qi(1), qi(0)}, ExactPoint{qi(2), qi(0)}), InvalidTripod);
  CHECK_THROWS_AS(angle_condition(ExactPoint{qi(0), qi(0)}, ExactPoint{qi(2), qi(0)}), InvalidTripod);
  // Angle exactly 2pi/3 at 0 (Eisenstein z = 1, w = zeta^2 = -1 + zeta) is excluded.
  CHECK_FALSE(angle_condition(ez({1, 0, -1, 1}, kEis), ew({1, 0, -1, 1}, kEis)));
}

TEST_CASE("exact angle predicate matches float angles for |coords| <= 8") {
  const double limit = 2 * std::numbers::pi / 3;
  long agreed = 0;
  for (const LatticeSpec& lat : {kGauss, kEis}) {
    for (int a = -8; a <= 8; ++a)
      for (int b = -8; b <= 8; ++b)
        for (int c = -8; c <= 8; ++c)
          for (int d = -8; d <= 8; ++d) {
            if (Quadruple{a, b, c, d}.determinant() == 0) continue;
            const double biggest = largest_angle(embed({a, b}, lat), embed({c, d}, lat));
            if (std::abs(biggest - limit) < 1e-9) continue;
            const bool exact = angle_condition(embed_exact({a, b}, lat), embed_exact({c, d}, lat));
            REQUIRE(exact == (biggest < limit));
            ++agreed;
          }
  }
  CHECK(agreed > 150000);
}

TEST_CASE("tripod_length_sq examples and closed forms") {
  const Quadruple unit{1, 0, 0, 1};
  CHECK(tripod_length_sq(ez(unit, kGauss), ew(unit, kGauss)) == QuadraticNumber(Rational{2}, Rational{1}));
  CHECK(tripod_length_sq(ez(unit, kEis), ew(unit, kEis)) == qi(3));
  const Quadruple two{2, 0, 0, 2};
  CHECK(tripod_length_sq(ez(two, kGauss), ew(two, kGauss)) == QuadraticNumber(Rational{8}, Rational{4}));
  CHECK_THROWS_AS(tripod_length_sq(ew(unit, kGauss), ez(unit, kGauss)), InvalidTripod);

  for (const Tripod& t : small_tripods(kGauss, 60, 6)) {
    const auto [a, b, c, d] = t.coords;
    REQUIRE(t.exact->length_sq == gaussian_length_sq(t.coords));
    // appendix form (a-c)^2 + (b-d)^2 + ac + bd + sqrt3 (ad - bc)
    REQUIRE(gaussian_length_sq(t.coords) ==
            QuadraticNumber(Rational{(a - c) * (a - c) + (b - d) * (b - d) + a * c + b * d},
                            Rational{a * d - b * c}));
  }
  for (const Tripod& t : small_tripods(kEis, 60, 8)) {
    REQUIRE(t.exact->length_sq == qi(eisenstein_length_sq(t.coords)));
  }
}

TEST_CASE("toricelli_point examples") {
  const Quadruple unit{1, 0, 0, 1};
  const ExactPoint u = toricelli_point(ez(unit, kGauss), ew(unit, kGauss));
  const QuadraticNumber h{Rational{1, 2}, Rational{1, 2}};
  CHECK(u == ExactPoint{h, h});
  const ExactPoint ue = toricelli_point(ez(unit, kEis), ew(unit, kEis));
  CHECK(ue == embed_exact({1, 1}, kEis));  // 1 + zeta
  for (const Tripod& t : small_tripods(kEis, 50, 7)) {
    const LatticeVector lv = eisenstein_toricelli(t.coords);
    REQUIRE(t.exact->u == embed_exact(lv, kEis));
  }
}

TEST_CASE("fermat_point examples") {
  const Quadruple unit{1, 0, 0, 1};
  const ExactPoint p = fermat_point(ez(unit, kGauss), ew(unit, kGauss));
  const QuadraticNumber c{Rational{1, 2}, Rational{-1, 6}};  // (3 - sqrt3)/6
  CHECK(p.x == c);
  CHECK(p.y == c);
  CHECK(p.x == qi(1) / QuadraticNumber(Rational{3}, Rational{1}));

  const ExactPoint pe = fermat_point(ez(unit, kEis), ew(unit, kEis));
  const ExactPoint centroid = QuadraticNumber{Rational{1, 3}} * (ez(unit, kEis) + ew(unit, kEis));
  CHECK(pe == centroid);

  for (const Quadruple& q : {Quadruple{2, 1, 1, 2}, Quadruple{3, -1, 1, 2}, Quadruple{1, 0, 0, 1}}) {
    const ExactPoint p1 = fermat_point(ez(q, kGauss), ew(q, kGauss));
    const ExactPoint p2 = fermat_point(ez(q.scaled(2), kGauss), ew(q.scaled(2), kGauss));
    CHECK(p2 == qi(2) * p1);
  }
  CHECK_THROWS_AS(fermat_point(ez({1, 0, -1, 1}, kEis), ew({1, 0, -1, 1}, kEis)), InvalidTripod);
}

TEST_CASE("exact Fermat point agrees with Weiszfeld minimisation") {
  for (const LatticeSpec& lat : {kGauss, kEis}) {
    for (const Tripod& t : small_tripods(lat, 40, 5)) {
      const FloatPoint oracle = weiszfeld({0, 0}, t.z, t.w);
      REQUIRE(length(oracle - t.p) < 1e-6 * (1 + t.length));
      const double total = length(oracle) + length(t.z - oracle) + length(t.w - oracle);
      REQUIRE(total == doctest::Approx(t.length).epsilon(1e-9));
    }
  }
}

TEST_CASE("leg identities: length, argument, 2pi/3 meeting, area") {
  for (const LatticeSpec& lat : {kGauss, kEis}) {
    const QuadraticNumber covol = lat.exact_covolume();
    for (const Tripod& t : small_tripods(lat, 80, 8)) {
      const auto& g = *t.exact;
      const auto& l = t.leg_lengths;
      // l1 + l2 + l3 = |u|
      REQUIRE(l[0] + l[1] + l[2] == doctest::Approx(t.length).epsilon(1e-9));
      REQUIRE(std::sqrt(norm_sq(t.u)) == doctest::Approx(t.length).epsilon(1e-12));
      // arg p = arg u, exactly
      REQUIRE(cross(g.p, g.u).is_zero());
      REQUIRE(qn_sign(dot(g.p, g.u)) > 0);
      // e^{i pi/3}(z - p), p and e^{-i pi/3}(w - p) point the same way
      const ExactPoint leg_z = rotate_plus60(g.z - g.p);
      const ExactPoint leg_w = rotate_minus60(g.w - g.p);
      REQUIRE(cross(leg_z, g.p).is_zero());
      REQUIRE(cross(leg_w, g.p).is_zero());
      REQUIRE(qn_sign(dot(leg_z, g.p)) > 0);
      REQUIRE(qn_sign(dot(leg_w, g.p)) > 0);
      // Area(0,z,w) = (sqrt3/4)(l1 l2 + l1 l3 + l2 l3) = n covol / 2
      const double area = std::sqrt(3.0) / 4 * (l[0] * l[1] + l[0] * l[2] + l[1] * l[2]);
      REQUIRE(area == doctest::Approx(t.index_n * lat.covolume() / 2).epsilon(1e-9));
      // volume and index, exact
      const VolumeIndex vi = tripod_volume_and_index(t, lat);
      REQUIRE(vi.index == t.index_n);
      REQUIRE(*vi.exact_volume == qi(vi.index) * covol);
    }
  }
}

TEST_CASE("homogeneity under scaling") {
  for (const Tripod& t : small_tripods(kGauss, 40, 4)) {
    for (std::int64_t k : {2, 3}) {
      const Tripod s = make_tripod(t.coords.scaled(k), kGauss);
      REQUIRE(s.exact->p == qi(k) * t.exact->p);
      REQUIRE(s.exact->length_sq == qi(k * k) * t.exact->length_sq);
      REQUIRE_FALSE(s.flags.primitive);
    }
  }
}

TEST_CASE("make_tripod names the failing predicate") {
  auto failing = [](Quadruple q, const LatticeSpec& lat) {
    try {
      make_tripod(q, lat);
    } catch (const InvalidTripod& e) {
      return e.predicate();
    }
    return std::string("none");
  };
  CHECK(failing({1, 0, 1, 0}, kGauss) == "collinear");
  CHECK(failing({0, 0, 1, 0}, kGauss) == "nonzero");
  CHECK(failing({0, 1, 1, 0}, kGauss) == "orientation");
  CHECK(failing({1, 0, -1, 1}, kGauss) == "angle_condition");
  CHECK(failing({1, 0, 0, 1}, kGauss) == "none");
}

TEST_CASE("classify examples") {
  const Tripod unit = make_tripod({1, 0, 0, 1}, kGauss);
  TripodFlags f = classify(unit, kGauss);
  CHECK(f.primitive);
  CHECK(f.reduced == true);
  CHECK_FALSE(f.heuristic);
  CHECK(classify(unit, kGauss, SegmentMethod::bounding_box).reduced == true);

  const TripodFlags f2 = classify(make_tripod({2, 0, 0, 2}, kGauss), kGauss);
  CHECK_FALSE(f2.primitive);
  CHECK(f2.reduced == false);

  // Eisenstein: u nonprimitive and |p| > |u|/2 forces a lattice point on 0p.
  int found = 0;
  for (const Tripod& t : small_tripods(kEis, 150, 9)) {
    if (!t.flags.primitive) continue;
    const LatticeVector u = eisenstein_toricelli(t.coords);
    if (std::gcd(u.a, u.b) == 1) continue;
    if (!(qi(4) * t.exact->leg_length_sq[0] > t.exact->length_sq)) continue;
    ++found;
    const TripodFlags flags = classify(t, kEis);
    REQUIRE(flags.reduced == false);
    const ReducednessDetail detail = reducedness_detail(t, kEis);
    REQUIRE_FALSE(detail.leg_points[0].empty());
  }
  CHECK(found > 10);
}

TEST_CASE("both segment methods classify identically") {
  for (const LatticeSpec& lat : {kGauss, kEis}) {
    int nonreduced = 0;
    for (const Tripod& t : small_tripods(lat, 120, 11)) {
      const ReducednessDetail fast = reducedness_detail(t, lat, SegmentMethod::direction);
      const ReducednessDetail box = reducedness_detail(t, lat, SegmentMethod::bounding_box);
      REQUIRE(fast.leg_points == box.leg_points);
      REQUIRE(fast.fermat_on_lattice == box.fermat_on_lattice);
      if (t.flags.primitive) {
        const bool reduced = *classify(t, lat).reduced;
        REQUIRE(reduced == is_reduced_exact(t.coords, lat));
        nonreduced += !reduced;
      }
    }
    CHECK(nonreduced > 0);
  }
}

TEST_CASE("volume and index examples") {
  const VolumeIndex unit = tripod_volume_and_index(make_tripod({1, 0, 0, 1}, kGauss), kGauss);
  CHECK(unit.index == 1);
  CHECK(unit.volume == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(*unit.exact_volume == qi(1));
  const VolumeIndex three = tripod_volume_and_index(make_tripod({2, 1, 1, 2}, kGauss), kGauss);
  CHECK(three.index == 3);
  CHECK(three.volume == doctest::Approx(3.0).epsilon(1e-12));
  const VolumeIndex eis = tripod_volume_and_index(make_tripod({1, 0, 0, 1}, kEis), kEis);
  CHECK(eis.index == 1);
  CHECK(eis.volume == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
}

TEST_CASE("general lattice tripods use float geometry") {
  const LatticeSpec lat = LatticeSpec::general(0.3, 1.1);
  const Tripod t = make_tripod({1, 0, 0, 1}, lat);
  CHECK_FALSE(t.exact.has_value());
  CHECK(t.leg_lengths[0] + t.leg_lengths[1] + t.leg_lengths[2] == doctest::Approx(t.length).epsilon(1e-12));
  const TripodFlags f = classify(t, lat);
  CHECK(f.heuristic);
  CHECK(f.reduced == true);
  const VolumeIndex vi = tripod_volume_and_index(t, lat);
  CHECK(vi.volume == doctest::Approx(1.1).epsilon(1e-9));
}
