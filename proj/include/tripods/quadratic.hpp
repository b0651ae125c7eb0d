#pragma once

#include <string>

#include "tripods/rational.hpp"

namespace tripods {

/// An element `rational_part + root3_part * sqrt(3)` of the field Q(sqrt 3).
///
/// The representation is unique because sqrt(3) is irrational, so equality is
/// componentwise. Values are immutable in practice; all operators return new
/// values and throw OverflowError rather than wrap.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(Rational rational_part, Rational root3_part = Rational{})  // NOLINT
      : x_(rational_part), y_(root3_part) {}
  QuadraticNumber(std::int64_t n) : x_(n) {}  // NOLINT

  static QuadraticNumber sqrt3() { return {Rational{0}, Rational{1}}; }

  const Rational& rational_part() const { return x_; }
  const Rational& root3_part() const { return y_; }

  bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
  bool is_rational() const { return y_.is_zero(); }
  bool is_integer() const { return y_.is_zero() && x_.is_integer(); }

  QuadraticNumber operator-() const { return {-x_, -y_}; }
  /// Galois conjugate x - y sqrt(3).
  QuadraticNumber conjugate() const { return {x_, -y_}; }
  /// Field norm x^2 - 3 y^2.
  Rational norm() const { return x_ * x_ - Rational{3} * y_ * y_; }

  friend QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b) {
    return {a.x_ + b.x_, a.y_ + b.y_};
  }
  friend QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b) {
    return {a.x_ - b.x_, a.y_ - b.y_};
  }
  friend QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b) {
    return {a.x_ * b.x_ + Rational{3} * a.y_ * b.y_, a.x_ * b.y_ + b.x_ * a.y_};
  }
  /// Throws std::domain_error on division by zero.
  friend QuadraticNumber operator/(const QuadraticNumber& a, const QuadraticNumber& b);

  QuadraticNumber& operator+=(const QuadraticNumber& o) { return *this = *this + o; }
  QuadraticNumber& operator-=(const QuadraticNumber& o) { return *this = *this - o; }
  QuadraticNumber& operator*=(const QuadraticNumber& o) { return *this = *this * o; }

  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
    return a.x_ == b.x_ && a.y_ == b.y_;
  }

  double to_double() const;
  std::string str() const;

 private:
  Rational x_;
  Rational y_;
};

QuadraticNumber qn_add(const QuadraticNumber& a, const QuadraticNumber& b);
QuadraticNumber qn_sub(const QuadraticNumber& a, const QuadraticNumber& b);
QuadraticNumber qn_mul(const QuadraticNumber& a, const QuadraticNumber& b);

/// Exact sign of x + y sqrt(3): immediate when x and y agree in sign,
/// otherwise decided by comparing x^2 against 3 y^2.
int qn_sign(const QuadraticNumber& a);

double qn_to_float(const QuadraticNumber& a);

inline int compare(const QuadraticNumber& a, const QuadraticNumber& b) { return qn_sign(a - b); }
inline bool operator<(const QuadraticNumber& a, const QuadraticNumber& b) { return qn_sign(a - b) < 0; }
inline bool operator>(const QuadraticNumber& a, const QuadraticNumber& b) { return qn_sign(a - b) > 0; }
inline bool operator<=(const QuadraticNumber& a, const QuadraticNumber& b) { return qn_sign(a - b) <= 0; }
inline bool operator>=(const QuadraticNumber& a, const QuadraticNumber& b) { return qn_sign(a - b) >= 0; }

/// Largest integer f with f <= a, exact.
std::int64_t qn_floor(const QuadraticNumber& a);

}  // namespace tripods
