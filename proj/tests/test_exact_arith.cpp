#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "tripods/quadratic.hpp"

using tripods::OverflowError;
using tripods::QuadraticNumber;
using tripods::Rational;

namespace {

QuadraticNumber q(std::int64_t x, std::int64_t y) { return {Rational{x}, Rational{y}}; }

QuadraticNumber random_qn(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-50, 50);
  std::uniform_int_distribution<std::int64_t> den(1, 12);
  return {Rational{num(rng), den(rng)}, Rational{num(rng), den(rng)}};
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms with positive denominator") {
  Rational r{6, -4};
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational{0, -7} == Rational{0});
  CHECK(r.str() == "-3/2");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("qn arithmetic examples") {
  CHECK(tripods::qn_mul(q(1, 1), q(1, 1)) == q(4, 2));
  CHECK(tripods::qn_sub(q(2, 1), q(2, 1)) == q(0, 0));
  CHECK(tripods::qn_mul({Rational{1, 2}}, q(0, 2)) == q(0, 1));
  CHECK(tripods::qn_add(q(1, 2), q(-1, 3)) == q(0, 5));
  CHECK(q(1, 1) / q(1, 1) == q(1, 0));
  // 1/(3 + sqrt3) = (3 - sqrt3)/6
  CHECK(q(1, 0) / q(3, 1) == QuadraticNumber{Rational{1, 2}, Rational{-1, 6}});
  CHECK_THROWS_AS(q(1, 0) / q(0, 0), std::domain_error);
}

TEST_CASE("qn_sign examples") {
  CHECK(tripods::qn_sign(q(2, -1)) == 1);
  // 4 sqrt3 ~ 6.928 < 7, confirmed by 49 > 48
  CHECK(tripods::qn_sign(q(-7, 4)) == -1);
  CHECK(tripods::qn_sign(q(0, 0)) == 0);
  CHECK(tripods::qn_sign(q(0, -3)) == -1);
  // 97^2 = 9409 > 3 * 56^2 = 9408
  CHECK(tripods::qn_sign(q(-97, 56)) == -1);
}

TEST_CASE("qn_to_float examples") {
  CHECK(tripods::qn_to_float(q(2, 1)) == doctest::Approx(3.7320508075688772).epsilon(1e-15));
  CHECK(tripods::qn_to_float(q(0, 0)) == 0.0);
  CHECK(tripods::qn_to_float({Rational{1, 2}, Rational{1, 2}}) ==
        doctest::Approx(1.3660254037844386).epsilon(1e-15));
}

TEST_CASE("qn_floor is exact near integers") {
  CHECK(tripods::qn_floor(q(2, 0)) == 2);
  CHECK(tripods::qn_floor(q(-2, 0)) == -2);
  CHECK(tripods::qn_floor(q(0, 1)) == 1);
  CHECK(tripods::qn_floor(q(-7, 4)) == -1);  // -0.0718
  CHECK(tripods::qn_floor(q(97, -56)) == 0);  // 0.00515...
}

TEST_CASE("sign agrees with floats outside the rounding zone") {
  std::mt19937_64 rng(12345);
  int compared = 0;
  for (int i = 0; i < 100000; ++i) {
    const QuadraticNumber a = random_qn(rng);
    const QuadraticNumber b = random_qn(rng);
    const double diff = tripods::qn_to_float(a) - tripods::qn_to_float(b);
    if (std::abs(diff) <= 1e-6) continue;
    ++compared;
    REQUIRE(tripods::qn_sign(a - b) == (diff > 0 ? 1 : -1));
  }
  CHECK(compared > 99000);
}

TEST_CASE("ring axioms hold exactly") {
  std::mt19937_64 rng(777);
  for (int i = 0; i < 5000; ++i) {
    const QuadraticNumber a = random_qn(rng);
    const QuadraticNumber b = random_qn(rng);
    const QuadraticNumber c = random_qn(rng);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a * b == b * a);
    if (!b.is_zero()) REQUIRE((a / b) * b == a);
  }
}

TEST_CASE("squares are nonnegative and vanish only at zero") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 5000; ++i) {
    const QuadraticNumber a = random_qn(rng);
    const int s = tripods::qn_sign(a * a);
    REQUIRE(s >= 0);
    REQUIRE((s == 0) == a.is_zero());
  }
}

TEST_CASE("overflow is reported, never wrapped") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  const QuadraticNumber x{Rational{std::int64_t{1} << 40}, Rational{std::int64_t{1} << 40}};
  const QuadraticNumber cube = x * x * x;  // ~2^123
  CHECK(cube.rational_part().num() > 0);
  CHECK_THROWS_AS(cube * x, OverflowError);
  CHECK_THROWS_AS(Rational(big) * Rational(big) * Rational(big), OverflowError);
}

TEST_CASE("string form") {
  CHECK(QuadraticNumber{Rational{1, 2}, Rational{-1, 6}}.str() == "1/2 - 1/6*sqrt3");
  CHECK(q(2, 1).str() == "2 + sqrt3");
  CHECK(q(0, 0).str() == "0");
}
