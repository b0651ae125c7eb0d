#include "tripods/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace tripods {

int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = checked::neg(a);
  if (b < 0) b = checked::neg(b);
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string to_string(int128 v) {
  if (v == 0) return "0";
  bool negative = v < 0;
  // Work in the negative range so the minimum value needs no special case.
  std::string out;
  int128 n = negative ? v : -v;
  while (n != 0) {
    int digit = -static_cast<int>(n % 10);
    out.push_back(static_cast<char>('0' + digit));
    n /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Rational::Rational(int128 num, int128 den) : num_(num), den_(den) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = checked::neg(num_);
    den_ = checked::neg(den_);
  }
  int128 g = gcd128(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = checked::neg(num_);
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    num_ = checked::add(num_, o.num_);
  } else {
    // Divide out the common factor first to keep intermediates small.
    int128 g = gcd128(den_, o.den_);
    int128 lhs_scale = o.den_ / g;
    int128 rhs_scale = den_ / g;
    num_ = checked::add(checked::mul(num_, lhs_scale), checked::mul(o.num_, rhs_scale));
    den_ = checked::mul(den_, lhs_scale);
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (num_ == 0 || o.num_ == 0) {
    num_ = 0;
    den_ = 1;
    return *this;
  }
  int128 g1 = gcd128(num_, o.den_);
  int128 g2 = gcd128(o.num_, den_);
  num_ = checked::mul(num_ / g1, o.num_ / g2);
  den_ = checked::mul(den_ / g2, o.den_ / g1);
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  Rational inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  if (inv.den_ < 0) {
    inv.num_ = checked::neg(inv.num_);
    inv.den_ = checked::neg(inv.den_);
  }
  return *this *= inv;
}

int compare(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return (a.num_ > b.num_) - (a.num_ < b.num_);
  int sa = a.sign();
  int sb = b.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  int128 lhs = checked::mul(a.num_, b.den_);
  int128 rhs = checked::mul(b.num_, a.den_);
  return (lhs > rhs) - (lhs < rhs);
}

long double Rational::to_long_double() const {
  return static_cast<long double>(num_) / static_cast<long double>(den_);
}

std::string Rational::str() const {
  if (den_ == 1) return to_string(num_);
  return to_string(num_) + "/" + to_string(den_);
}

}  // namespace tripods
