#include "tripods/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace tripods {

namespace {

QuadraticNumber qn(std::int64_t v) { return QuadraticNumber{v}; }

double parse_double(std::string_view s) {
  std::string tmp(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tmp, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad number in lattice spec: '" + tmp + "'");
  }
  if (used != tmp.size()) throw std::invalid_argument("bad number in lattice spec: '" + tmp + "'");
  return v;
}

std::int64_t ceil_exact(const QuadraticNumber& v) { return -qn_floor(-v); }

}  // namespace

LatticeSpec LatticeSpec::general(double s, double t, double epsilon) {
  if (!(t > 0.0) || !std::isfinite(s) || !std::isfinite(t)) {
    throw std::invalid_argument("lattice requires Im(tau) > 0");
  }
  return {LatticeMode::general_tau, s, t, epsilon};
}

QuadraticNumber LatticeSpec::exact_covolume() const {
  switch (mode) {
    case LatticeMode::gaussian:
      return qn(1);
    case LatticeMode::eisenstein:
      return {Rational{0}, Rational{1, 2}};
    case LatticeMode::general_tau:
      break;
  }
  throw std::logic_error("exact covolume requested for a general lattice");
}

std::string LatticeSpec::name() const {
  switch (mode) {
    case LatticeMode::gaussian:
      return "gaussian";
    case LatticeMode::eisenstein:
      return "eisenstein";
    case LatticeMode::general_tau:
      break;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "tau=%.17g,%.17g", tau_s, tau_t);
  return buf;
}

LatticeSpec parse_lattice(std::string_view text) {
  if (text == "gaussian") return LatticeSpec::gaussian();
  if (text == "eisenstein") return LatticeSpec::eisenstein();
  constexpr std::string_view prefix = "tau=";
  if (text.substr(0, prefix.size()) == prefix) {
    std::string_view rest = text.substr(prefix.size());
    auto comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw std::invalid_argument("lattice spec must be tau=<s>,<t>");
    }
    return LatticeSpec::general(parse_double(rest.substr(0, comma)),
                                parse_double(rest.substr(comma + 1)));
  }
  throw std::invalid_argument("unknown lattice '" + std::string(text) +
                              "' (expected gaussian, eisenstein or tau=<s>,<t>)");
}

double covolume(const LatticeSpec& lattice) { return lattice.covolume(); }

ExactPoint embed_exact(const LatticeVector& v, const LatticeSpec& lattice) {
  switch (lattice.mode) {
    case LatticeMode::gaussian:
      return {qn(v.a), qn(v.b)};
    case LatticeMode::eisenstein:
      // a + b*(1/2 + i sqrt3/2)
      return {QuadraticNumber{Rational{v.a} + Rational{v.b, 2}},
              QuadraticNumber{Rational{0}, Rational{v.b, 2}}};
    case LatticeMode::general_tau:
      break;
  }
  throw std::logic_error("exact embedding requested for a general lattice");
}

FloatPoint embed(const LatticeVector& v, const LatticeSpec& lattice) {
  if (lattice.exact()) return to_float(embed_exact(v, lattice));
  return from_lattice_coords(FloatPoint{static_cast<double>(v.a), static_cast<double>(v.b)}, lattice);
}

ExactPoint to_lattice_coords(const ExactPoint& p, const LatticeSpec& lattice) {
  switch (lattice.mode) {
    case LatticeMode::gaussian:
      return p;
    case LatticeMode::eisenstein: {
      // y = b sqrt3/2  =>  b = (2/3) sqrt3 y;  a = x - b/2
      QuadraticNumber b = QuadraticNumber{Rational{0}, Rational{2, 3}} * p.y;
      QuadraticNumber a = p.x - QuadraticNumber{Rational{1, 2}} * b;
      return {a, b};
    }
    case LatticeMode::general_tau:
      break;
  }
  throw std::logic_error("exact lattice coordinates requested for a general lattice");
}

FloatPoint to_lattice_coords(const FloatPoint& p, const LatticeSpec& lattice) {
  double b = p.y / lattice.tau_t;
  return {p.x - b * lattice.tau_s, b};
}

FloatPoint from_lattice_coords(const FloatPoint& coords, const LatticeSpec& lattice) {
  return {coords.x + coords.y * lattice.tau_s, coords.y * lattice.tau_t};
}

CoordinateBox coordinate_box(double radius, const LatticeSpec& lattice) {
  // Cramer's rule on x = a*1 + b*tau:  b = Im(x)/t,  a = cross(x, tau)/t.
  const double t = lattice.tau_t;
  const double tau_len = std::hypot(lattice.tau_s, lattice.tau_t);
  const double slack = 1e-9 * (1.0 + radius);
  return {static_cast<std::int64_t>(std::floor(radius * tau_len / t + slack)),
          static_cast<std::int64_t>(std::floor(radius / t + slack))};
}

std::int64_t gcd4(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return std::gcd(std::gcd(a, b), std::gcd(c, d));
}

bool is_primitive_quadruple(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  if (a == 0 && b == 0 && c == 0 && d == 0) {
    throw std::invalid_argument("degenerate configuration: all coordinates are zero");
  }
  return gcd4(a, b, c, d) == 1;
}

bool is_lattice_point(const ExactPoint& coords) {
  return coords.x.is_integer() && coords.y.is_integer();
}

SegmentLatticePoints lattice_points_on_open_segment(const ExactPoint& endpoint_a,
                                                    const ExactPoint& endpoint_b,
                                                    const LatticeSpec& lattice) {
  if (endpoint_a == endpoint_b) throw std::invalid_argument("segment endpoints coincide");
  const ExactPoint a = to_lattice_coords(endpoint_a, lattice);
  const ExactPoint b = to_lattice_coords(endpoint_b, lattice);
  const ExactPoint dir = b - a;
  const QuadraticNumber dir_sq = norm_sq(dir);

  const std::int64_t i_lo = ceil_exact(a.x < b.x ? a.x : b.x);
  const std::int64_t i_hi = qn_floor(a.x < b.x ? b.x : a.x);
  const std::int64_t j_lo = ceil_exact(a.y < b.y ? a.y : b.y);
  const std::int64_t j_hi = qn_floor(a.y < b.y ? b.y : a.y);

  SegmentLatticePoints out;
  for (std::int64_t i = i_lo; i <= i_hi; ++i) {
    for (std::int64_t j = j_lo; j <= j_hi; ++j) {
      const ExactPoint rel = ExactPoint{qn(i), qn(j)} - a;
      if (!cross(dir, rel).is_zero()) continue;
      // Collinear; the open parameter range is 0 < <rel, dir> < |dir|^2.
      const QuadraticNumber along = dot(rel, dir);
      if (qn_sign(along) > 0 && qn_sign(dir_sq - along) > 0) out.points.push_back({i, j});
    }
  }
  return out;
}

SegmentLatticePoints lattice_points_on_open_segment(const FloatPoint& endpoint_a,
                                                    const FloatPoint& endpoint_b,
                                                    const LatticeSpec& lattice) {
  if (endpoint_a == endpoint_b) throw std::invalid_argument("segment endpoints coincide");
  const double eps = lattice.epsilon;
  const FloatPoint a = to_lattice_coords(endpoint_a, lattice);
  const FloatPoint b = to_lattice_coords(endpoint_b, lattice);
  const FloatPoint dir = endpoint_b - endpoint_a;
  const double len = length(dir);

  const auto i_lo = static_cast<std::int64_t>(std::ceil(std::min(a.x, b.x) - eps));
  const auto i_hi = static_cast<std::int64_t>(std::floor(std::max(a.x, b.x) + eps));
  const auto j_lo = static_cast<std::int64_t>(std::ceil(std::min(a.y, b.y) - eps));
  const auto j_hi = static_cast<std::int64_t>(std::floor(std::max(a.y, b.y) + eps));

  SegmentLatticePoints out;
  out.heuristic = !lattice.exact();
  for (std::int64_t i = i_lo; i <= i_hi; ++i) {
    for (std::int64_t j = j_lo; j <= j_hi; ++j) {
      const FloatPoint rel = embed({i, j}, lattice) - endpoint_a;
      // Residuals measured as planar distances.
      if (std::abs(cross(dir, rel)) / len > eps) continue;
      const double along = dot(rel, dir) / len;
      if (along > eps && along < len - eps) out.points.push_back({i, j});
    }
  }
  return out;
}

std::vector<LatticeVector> lattice_points_on_open_segment_from(const LatticeVector& start,
                                                               const ExactPoint& end_coords) {
  const ExactPoint delta = end_coords - ExactPoint{qn(start.a), qn(start.b)};
  // delta = (x1, x2) + sqrt3 * (y1, y2) with rational vectors X and Y. The
  // direction is rational iff X and Y are parallel.
  const Rational x1 = delta.x.rational_part();
  const Rational x2 = delta.y.rational_part();
  const Rational y1 = delta.x.root3_part();
  const Rational y2 = delta.y.root3_part();
  if (!(x1 * y2 - x2 * y1).is_zero()) return {};

  const bool use_x = !(x1.is_zero() && x2.is_zero());
  const Rational& r1 = use_x ? x1 : y1;
  const Rational& r2 = use_x ? x2 : y2;
  if (r1.is_zero() && r2.is_zero()) {
    throw std::invalid_argument("segment endpoints coincide");
  }
  // Primitive integer step along (r1, r2).
  const int128 l = r1.den() / gcd128(r1.den(), r2.den()) * r2.den();
  int128 m = r1.num() * (l / r1.den());
  int128 k = r2.num() * (l / r2.den());
  const int128 g = gcd128(m, k);
  m /= g;
  k /= g;
  // delta = scale * (m, k) with scale in Q(sqrt 3).
  QuadraticNumber scale = m != 0 ? QuadraticNumber{x1 / Rational{m, 1}, y1 / Rational{m, 1}}
                                  : QuadraticNumber{x2 / Rational{k, 1}, y2 / Rational{k, 1}};
  if (qn_sign(scale) < 0) {
    m = -m;
    k = -k;
    scale = -scale;
  }
  // Interior points: start + j*(m, k) for integer 1 <= j < scale.
  const std::int64_t f = qn_floor(scale);
  const std::int64_t last = (scale == QuadraticNumber{f}) ? f - 1 : f;
  std::vector<LatticeVector> out;
  for (std::int64_t j = 1; j <= last; ++j) {
    out.push_back({start.a + j * static_cast<std::int64_t>(m), start.b + j * static_cast<std::int64_t>(k)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tripods
