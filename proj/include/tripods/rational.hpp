#pragma once

#include <cstdint>
#include <string>

#include "tripods/errors.hpp"

namespace tripods {

using int128 = __int128;

namespace checked {

inline int128 add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit overflow in addition");
  return r;
}

inline int128 sub(int128 a, int128 b) {
  int128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("128-bit overflow in subtraction");
  return r;
}

inline int128 mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit overflow in multiplication");
  return r;
}

inline int128 neg(int128 a) { return sub(0, a); }

}  // namespace checked

int128 gcd128(int128 a, int128 b);
std::string to_string(int128 v);

/// Exact rational number with a 128-bit numerator and denominator.
///
/// Always kept in lowest terms with a positive denominator, so structural
/// equality is value equality. Every operation is overflow-checked and throws
/// OverflowError instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int128 num, int128 den);

  int128 num() const { return num_; }
  int128 den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Compares without going through floating point.
  friend int compare(const Rational& a, const Rational& b);

  long double to_long_double() const;
  double to_double() const { return static_cast<double>(to_long_double()); }

  /// "n" or "n/d".
  std::string str() const;

 private:
  void normalize();

  int128 num_ = 0;
  int128 den_ = 1;
};

}  // namespace tripods
