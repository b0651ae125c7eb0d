#pragma once

#include <cmath>

#include "tripods/quadratic.hpp"

namespace tripods {

/// Planar point or vector over an exact (QuadraticNumber) or float scalar.
template <class T>
struct Vec2 {
  T x{};
  T y{};

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(const T& s, const Vec2& a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
};

using ExactPoint = Vec2<QuadraticNumber>;
using FloatPoint = Vec2<double>;

template <class T>
T dot(const Vec2<T>& a, const Vec2<T>& b) {
  return a.x * b.x + a.y * b.y;
}

/// z-component of the cross product, Im(conj(a) * b).
template <class T>
T cross(const Vec2<T>& a, const Vec2<T>& b) {
  return a.x * b.y - a.y * b.x;
}

template <class T>
T norm_sq(const Vec2<T>& a) {
  return dot(a, a);
}

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static double half() { return 0.5; }
  static double half_sqrt3() { return 0.86602540378443864676; }
  static double sqrt3() { return 1.7320508075688772935; }
  static int sign(double v) { return (v > 0) - (v < 0); }
  static double to_double(double v) { return v; }
};

template <>
struct ScalarTraits<QuadraticNumber> {
  static QuadraticNumber half() { return {Rational{1, 2}}; }
  static QuadraticNumber half_sqrt3() { return {Rational{0}, Rational{1, 2}}; }
  static QuadraticNumber sqrt3() { return QuadraticNumber::sqrt3(); }
  static int sign(const QuadraticNumber& v) { return qn_sign(v); }
  static double to_double(const QuadraticNumber& v) { return v.to_double(); }
};

template <class T>
int sign_of(const T& v) {
  return ScalarTraits<T>::sign(v);
}

/// Multiplication by e^{i pi/3}.
template <class T>
Vec2<T> rotate_plus60(const Vec2<T>& v) {
  const T h = ScalarTraits<T>::half();
  const T s = ScalarTraits<T>::half_sqrt3();
  return {h * v.x - s * v.y, s * v.x + h * v.y};
}

/// Multiplication by e^{-i pi/3}.
template <class T>
Vec2<T> rotate_minus60(const Vec2<T>& v) {
  const T h = ScalarTraits<T>::half();
  const T s = ScalarTraits<T>::half_sqrt3();
  return {h * v.x + s * v.y, h * v.y - s * v.x};
}

template <class T>
FloatPoint to_float(const Vec2<T>& v) {
  return {ScalarTraits<T>::to_double(v.x), ScalarTraits<T>::to_double(v.y)};
}

inline double length(const FloatPoint& v) { return std::hypot(v.x, v.y); }

}  // namespace tripods
