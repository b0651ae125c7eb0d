#include <cmath>
#include <cstdlib>
#include <random>
#include <set>

#include "doctest.h"
#include "tripods/census.hpp"
#include "tripods/constants.hpp"

using namespace tripods;

namespace {

const LatticeSpec kGauss = LatticeSpec::gaussian();
const LatticeSpec kEis = LatticeSpec::eisenstein();

CensusConfig make_config(const LatticeSpec& lat, double radius,
                         Canonicalization mode = Canonicalization::lemma) {
  CensusConfig c;
  c.lattice = lat;
  c.radius = radius;
  c.mode = mode;
  c.threads = 2;
  return c;
}

std::uint64_t histogram_total(const CensusReport& r) {
  std::uint64_t total = 0;
  for (const auto& [n, count] : r.index_histogram) {
    CHECK(n > 0);
    total += count;
  }
  return total;
}

void check_same(const CensusReport& a, const CensusReport& b) {
  CHECK(a.counts == b.counts);
  CHECK(a.index_histogram == b.index_histogram);
  CHECK(a.ties == b.ties);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].coords == b.samples[i].coords);
    CHECK(a.samples[i].index_n == b.samples[i].index_n);
    CHECK(a.samples[i].primitive == b.samples[i].primitive);
    CHECK(a.samples[i].reduced == b.samples[i].reduced);
    CHECK(a.samples[i].length_sq == doctest::Approx(b.samples[i].length_sq).epsilon(1e-12));
  }
}

}  // namespace

TEST_CASE("golden count at R = 35") {
  const CensusReport app = census(make_config(kGauss, 35, Canonicalization::appendix));
  CHECK(app.counts.primitive == 312488);
  CHECK(std::abs(app.error - 0.00124129370635984) < 1e-9);
  CHECK(app.reference_constant == doctest::Approx(0.20947986097));

  const CensusReport lem = census(make_config(kGauss, 35));
  CHECK(lem.counts.primitive >= app.counts.primitive);
  CHECK(lem.counts.primitive - app.counts.primitive == lem.ties.largest_angle);
  CHECK(app.ties == lem.ties);
}

TEST_CASE("no tripods below the shortest one") {
  CHECK(census(make_config(kGauss, 1)).counts.all_tripods == 0);
  // shortest Gaussian tripod has length^2 = 2 + sqrt3 < 4
  CHECK(census(make_config(kGauss, 2)).counts.all_tripods > 0);
}

TEST_CASE("report invariants") {
  for (const LatticeSpec& lat : {kGauss, kEis}) {
    CensusConfig c = make_config(lat, 14);
    c.classify_reduced = true;
    const CensusReport r = census(c);
    CHECK(r.counts.primitive <= r.counts.all_tripods);
    REQUIRE(r.counts.reduced);
    CHECK(*r.counts.reduced + *r.counts.nonreduced_primitive == r.counts.primitive);
    CHECK(histogram_total(r) == r.counts.all_tripods);
    CHECK(r.counts.total_tuples_scanned > r.counts.all_tripods);
    CHECK_FALSE(r.heuristic);
  }
  const CensusReport plain = census(make_config(kGauss, 10));
  CHECK_FALSE(plain.counts.reduced);
  CHECK_FALSE(plain.counts.nonreduced_primitive);
  CHECK(plain.samples.empty());
}

TEST_CASE("kernel agrees with the serial reference") {
  struct Case {
    LatticeSpec lat;
    double radius;
    Canonicalization mode;
  };
  const Case cases[] = {
      {kGauss, 9, Canonicalization::lemma},
      {kGauss, 9, Canonicalization::appendix},
      {kEis, 9, Canonicalization::lemma},
      {LatticeSpec::general(0.3, 1.1), 6, Canonicalization::lemma},
  };
  for (const Case& k : cases) {
    CensusConfig c = make_config(k.lat, k.radius, k.mode);
    c.classify_reduced = true;
    c.emit_samples = 1u << 20;
    const CensusReport fast = census(c);
    const CensusReport slow = census_reference(c);
    CHECK(fast.counts.all_tripods == fast.samples.size());
    check_same(fast, slow);
    CHECK(fast.heuristic == !k.lat.exact());
  }
}

TEST_CASE("sample cap keeps the leading records") {
  CensusConfig c = make_config(kEis, 8);
  c.emit_samples = 1u << 20;
  const CensusReport all = census(c);
  c.emit_samples = 5;
  const CensusReport few = census(c);
  REQUIRE(few.samples.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(few.samples[i] == all.samples[i]);
}

TEST_CASE("counts do not depend on thread count") {
  for (const LatticeSpec& lat : {kGauss, kEis}) {
    CensusConfig c = make_config(lat, 18);
    c.classify_reduced = true;
    c.emit_samples = 200;
    c.threads = 1;
    const CensusReport one = census(c);
    for (int t : {4, 8}) {
      c.threads = t;
      check_same(one, census(c));
    }
  }
}

TEST_CASE("doubled primitive tripods are counted but not primitive") {
  for (const LatticeSpec& lat : {kGauss, kEis}) {
    CensusConfig small = make_config(lat, 8);
    small.emit_samples = 1u << 20;
    CensusConfig big = make_config(lat, 16);
    big.emit_samples = 1u << 22;
    const CensusReport rs = census(small);
    const CensusReport rb = census(big);
    std::set<Quadruple> primitive_big, all_big;
    for (const CensusSample& s : rb.samples) {
      all_big.insert(s.coords);
      if (s.primitive) primitive_big.insert(s.coords);
    }
    for (const CensusSample& s : rs.samples) {
      if (!s.primitive) continue;
      CHECK(all_big.count(s.coords.scaled(2)) == 1);
      CHECK(primitive_big.count(s.coords.scaled(2)) == 0);
    }
  }
}

TEST_CASE("exact length predicate matches the float formula away from ties") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<std::int64_t> coord(-30, 30);
  std::uniform_int_distribution<std::int64_t> radius(1, 60);
  int checked = 0;
  for (int i = 0; i < 1000000; ++i) {
    const Quadruple q{coord(rng), coord(rng), coord(rng), coord(rng)};
    const bool gauss = (i & 1) == 0;
    const LatticeSpec& lat = gauss ? kGauss : kEis;
    if (!admissible_exact(q, lat)) continue;
    const std::int64_t r = radius(rng);
    const FloatPoint z = embed(q.z(), lat), w = embed(q.w(), lat);
    const double l2 = norm_sq(z) + norm_sq(w) - dot(z, w) + std::sqrt(3.0) * cross(z, w);
    const double r2 = static_cast<double>(r * r);
    if (std::abs(l2 - r2) < 1e-6) continue;
    CHECK(length_below_exact(q, lat, r) == (l2 < r2));
    ++checked;
  }
  CHECK(checked > 100000);
}

TEST_CASE("admissible_exact matches the generic predicates") {
  for (const LatticeSpec& lat : {kGauss, kEis}) {
    for (std::int64_t a = -4; a <= 4; ++a)
      for (std::int64_t b = -4; b <= 4; ++b)
        for (std::int64_t c = -4; c <= 4; ++c)
          for (std::int64_t d = -4; d <= 4; ++d) {
            const Quadruple q{a, b, c, d};
            bool expected = false;
            if (q.determinant() > 0) {
              expected = angle_condition(embed_exact(q.z(), lat), embed_exact(q.w(), lat));
            }
            REQUIRE(admissible_exact(q, lat) == expected);
          }
  }
}

TEST_CASE("census rejects bad configurations") {
  CHECK_THROWS_AS(census(make_config(kEis, 10, Canonicalization::appendix)),
                  std::invalid_argument);
  CHECK_THROWS_AS(census(make_config(kGauss, 2e6)), OverflowError);
  CHECK_THROWS_AS(census(make_config(kGauss, 10.5)), std::invalid_argument);
  CHECK_THROWS_AS(census(make_config(kGauss, 0)), std::invalid_argument);
  CensusConfig c = make_config(kGauss, 5);
  c.threads = 0;
  CHECK_THROWS_AS(census(c), std::invalid_argument);
  CHECK_NOTHROW(census(make_config(LatticeSpec::general(0.2, 0.9), 4.5)));
}

TEST_CASE("convergence toward the main constant") {
  const auto rows = convergence_scan(kGauss, {10, 20, 35}, Canonicalization::appendix, false, 2);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].error > rows[1].error);
  CHECK(rows[1].error > rows[2].error);
  CHECK(rows[2].primitive == 312488);
  CHECK(rows[2].primitive_over_R4 == doctest::Approx(312488.0 / std::pow(35.0, 4)));
  CHECK_THROWS_AS(convergence_scan(kGauss, {20, 10}), std::invalid_argument);

  // non-unit covolume: normalized by covol^2
  const auto eis = convergence_scan(kEis, {30}, Canonicalization::lemma, false, 2);
  const double covol = std::sqrt(3.0) / 2.0;
  CHECK(eis[0].primitive_over_R4 * covol * covol ==
        doctest::Approx(constants::main_constant).epsilon(0.03));
}

TEST_CASE("nonreduced census") {
  CHECK_THROWS_AS(nonreduced_census(LatticeSpec::general(0.3, 1.1), 10), std::invalid_argument);
  const NonreducedCensus e = nonreduced_census(kEis, 20, 2);
  CHECK(e.nonreduced > 0);
  CHECK(e.nonreduced_over_R4 == doctest::Approx(static_cast<double>(e.nonreduced) / 160000.0));
  REQUIRE(e.c1);
  CHECK(*e.c1 == doctest::Approx(0.294).epsilon(0.002));
  CHECK(*e.c2 == doctest::Approx(0.924).epsilon(0.001));
  CHECK(e.one_minus_6_over_pi2 == doctest::Approx(0.392).epsilon(0.001));
  CHECK(e.asymptotic_bound == doctest::Approx(0.0770).epsilon(0.001));

  const NonreducedCensus g = nonreduced_census(kGauss, 20, 2);
  CHECK_FALSE(g.c1);
  CensusConfig c = make_config(kGauss, 20);
  c.classify_reduced = true;
  CHECK(g.nonreduced == *census(c).counts.nonreduced_primitive);
}

TEST_CASE("random lattice experiment") {
  const double zs = 0.5, zt = std::sqrt(3.0) / 2.0;
  const RandomLatticeReport a = random_lattice_experiment(12, 8, 99, {{zs, zt}}, 2);
  const RandomLatticeReport b = random_lattice_experiment(12, 8, 99, {{zs, zt}}, 1);
  CHECK(a.histogram == b.histogram);
  REQUIRE(a.samples.size() == 13);
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].tau_s == b.samples[i].tau_s);
    CHECK(a.samples[i].nonreduced == b.samples[i].nonreduced);
    if (a.samples[i].extra) continue;
    CHECK(a.samples[i].tau_s >= 0.0);
    CHECK(a.samples[i].tau_s < 1.0);
    CHECK(a.samples[i].tau_t >= 0.5);
    CHECK(a.samples[i].tau_t <= 1.5);
  }
  CHECK(a.heuristic);
  std::uint64_t drawn = 0, zero = 0;
  for (const auto& [count, n] : a.histogram) {
    drawn += n;
    if (count == 0) zero += n;
  }
  CHECK(drawn == 12);
  CHECK(zero * 2 > drawn);
  CHECK(a.samples.back().extra);
  CHECK(a.samples.back().nonreduced > 0);

  const RandomLatticeReport c = random_lattice_experiment(12, 8, 100, {}, 2);
  CHECK(c.samples[0].tau_s != a.samples[0].tau_s);
}

TEST_CASE("thread count default honours TRIPOD_THREADS") {
  setenv("TRIPOD_THREADS", "3", 1);
  CHECK(default_thread_count() == 3);
  setenv("TRIPOD_THREADS", "zero", 1);
  CHECK(default_thread_count() >= 1);
  unsetenv("TRIPOD_THREADS");
  CHECK(default_thread_count() >= 1);
}

TEST_CASE("float kernel at preset taus reproduces the exact census") {
  const std::pair<LatticeSpec, LatticeSpec> pairs[] = {
      {LatticeSpec::general(0.0, 1.0), kGauss},
      {LatticeSpec::general(0.5, std::sqrt(3.0) / 2.0), kEis},
  };
  for (const auto& [approx, exact] : pairs) {
    CensusConfig c = make_config(approx, 12);
    c.classify_reduced = true;
    const CensusReport f = census(c);
    c.lattice = exact;
    const CensusReport e = census(c);
    CHECK(f.heuristic);
    CHECK(f.counts == e.counts);
    CHECK(f.index_histogram == e.index_histogram);
    CHECK(f.ties == e.ties);
  }
}
