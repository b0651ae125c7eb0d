#include "tripods/quadratic.hpp"

#include <cmath>
#include <stdexcept>

namespace tripods {

QuadraticNumber operator/(const QuadraticNumber& a, const QuadraticNumber& b) {
  if (b.is_zero()) throw std::domain_error("division by zero in Q(sqrt 3)");
  // a / b = a * conj(b) / N(b); N(b) != 0 for b != 0 since sqrt(3) is irrational.
  Rational n = b.norm();
  QuadraticNumber num = a * b.conjugate();
  return {num.rational_part() / n, num.root3_part() / n};
}

QuadraticNumber qn_add(const QuadraticNumber& a, const QuadraticNumber& b) { return a + b; }
QuadraticNumber qn_sub(const QuadraticNumber& a, const QuadraticNumber& b) { return a - b; }
QuadraticNumber qn_mul(const QuadraticNumber& a, const QuadraticNumber& b) { return a * b; }

int qn_sign(const QuadraticNumber& a) {
  int sx = a.rational_part().sign();
  int sy = a.root3_part().sign();
  if (sx == 0) return sy;
  if (sy == 0 || sx == sy) return sx;
  // Opposite signs: the term with the larger square wins. x^2 == 3 y^2 has
  // no nonzero rational solution.
  const Rational& x = a.rational_part();
  const Rational& y = a.root3_part();
  int c = compare(x * x, Rational{3} * y * y);
  return c > 0 ? sx : sy;
}

double QuadraticNumber::to_double() const {
  static const long double root3 = std::sqrt(3.0L);
  return static_cast<double>(x_.to_long_double() + y_.to_long_double() * root3);
}

double qn_to_float(const QuadraticNumber& a) { return a.to_double(); }

std::string QuadraticNumber::str() const {
  if (y_.is_zero()) return x_.str();
  auto root_term = [](const Rational& c) {
    return c == Rational{1} ? std::string("sqrt3") : c.str() + "*sqrt3";
  };
  if (x_.is_zero()) return root_term(y_);
  if (y_.sign() < 0) return x_.str() + " - " + root_term(-y_);
  return x_.str() + " + " + root_term(y_);
}

std::int64_t qn_floor(const QuadraticNumber& a) {
  auto f = static_cast<std::int64_t>(std::floor(a.to_double()));
  while (qn_sign(a - QuadraticNumber{f}) < 0) --f;
  while (qn_sign(a - QuadraticNumber{f + 1}) >= 0) ++f;
  return f;
}

}  // namespace tripods
