#include "tripods/topology.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tripods {

namespace {

enum class EndKind { lattice, fermat };

template <class T>
int fuzzy_sign(const T& v, double /*eps*/) {
  return sign_of(v);
}

template <>
int fuzzy_sign<double>(const double& v, double eps) {
  if (std::abs(v) <= eps) return 0;
  return v > 0 ? 1 : -1;
}

template <class T>
struct Leg {
  Vec2<T> start;  // lattice endpoint (image of 0)
  Vec2<T> end;    // Fermat point
  FloatPoint lo, hi;  // float bounding box in lattice coordinates
  double length = 0.0;  // planar length
};

// Position of a parameter along a leg: start, interior or end.
enum class Where { start, interior, end };

template <class T>
Where classify_param(const T& t, double eps) {
  if (fuzzy_sign(t, eps) == 0) return Where::start;
  if (fuzzy_sign(t - T(1), eps) == 0) return Where::end;
  return Where::interior;
}

struct Crossing {
  int leg = 0;
  double t_approx = 0.0;
  std::size_t slot = 0;  // index into the exact parameter store
};

template <class T>
class Arrangement {
 public:
  Arrangement(const std::array<Vec2<T>, 3>& starts, const Vec2<T>& fermat,
              const std::array<double, 3>& planar_lengths, double eps)
      : eps_(eps) {
    for (int i = 0; i < 3; ++i) {
      Leg<T> leg{starts[i], fermat, {}, {}, planar_lengths[i]};
      const FloatPoint a = to_float(leg.start);
      const FloatPoint b = to_float(leg.end);
      leg.lo = {std::min(a.x, b.x), std::min(a.y, b.y)};
      leg.hi = {std::max(a.x, b.x), std::max(a.y, b.y)};
      legs_[i] = leg;
    }
  }

  // Intersects leg i with leg j translated by lambda; records crossings on leg i.
  void intersect(int i, int j, const LatticeVector& lambda, ImmersionReport& report) {
    const Leg<T>& si = legs_[i];
    const Leg<T>& sj = legs_[j];
    const double lx = static_cast<double>(lambda.a);
    const double ly = static_cast<double>(lambda.b);
    constexpr double slack = 1e-6;
    if (si.hi.x + slack < sj.lo.x + lx || sj.hi.x + lx + slack < si.lo.x ||
        si.hi.y + slack < sj.lo.y + ly || sj.hi.y + ly + slack < si.lo.y) {
      return;
    }
    const Vec2<T> shift{T(lambda.a), T(lambda.b)};
    const Vec2<T> a = si.start;
    const Vec2<T> r = si.end - si.start;
    const Vec2<T> c = sj.start + shift;
    const Vec2<T> s = sj.end - sj.start;
    const Vec2<T> ac = c - a;
    const T denom = cross(r, s);

    if (fuzzy_sign(denom, eps_) == 0) {
      if (fuzzy_sign(cross(ac, r), eps_) != 0) return;  // parallel, disjoint lines
      // Collinear: project the translate onto leg i.
      const T rr = dot(r, r);
      const T t0 = dot(ac, r) / rr;
      const T t1 = dot(c + s - a, r) / rr;
      const T lo = fuzzy_sign(t0 - t1, eps_) < 0 ? t0 : t1;
      const T hi = fuzzy_sign(t0 - t1, eps_) < 0 ? t1 : t0;
      const int lo_vs_end = fuzzy_sign(lo - T(1), eps_);
      const int hi_vs_start = fuzzy_sign(hi, eps_);
      if (lo_vs_end > 0 || hi_vs_start < 0) return;
      if (lo_vs_end < 0 && hi_vs_start > 0) {
        mark_degenerate(report, "collinear overlap between leg translates");
        return;
      }
      // Touching at a single endpoint of both.
      const EndKind here = lo_vs_end == 0 ? EndKind::fermat : EndKind::lattice;
      const T& touching = lo_vs_end == 0 ? lo : hi;
      const EndKind there = touching == t0 ? EndKind::lattice : EndKind::fermat;
      if (here != there) mark_degenerate(report, "Fermat point meets a lattice point");
      return;
    }

    const T t = cross(ac, s) / denom;
    const T u = cross(ac, r) / denom;
    if (fuzzy_sign(t, eps_) < 0 || fuzzy_sign(t - T(1), eps_) > 0) return;
    if (fuzzy_sign(u, eps_) < 0 || fuzzy_sign(u - T(1), eps_) > 0) return;
    const Where wt = classify_param(t, eps_);
    const Where wu = classify_param(u, eps_);
    if (wt == Where::interior && wu == Where::interior) {
      crossings_.push_back({i, ScalarTraits<T>::to_double(t), params_.size()});
      params_.push_back(t);
      return;
    }
    if (wt == Where::interior || wu == Where::interior) {
      mark_degenerate(report, "a tripod vertex lies in the interior of a leg");
      return;
    }
    if ((wt == Where::start) != (wu == Where::start)) {
      mark_degenerate(report, "Fermat point meets a lattice point");
    }
  }

  void finish(ImmersionReport& report) {
    // Each torus crossing shows up once from each of its two leg pieces.
    if (crossings_.size() % 2 != 0) {
      mark_degenerate(report, "unpaired crossing record");
    }
    std::sort(crossings_.begin(), crossings_.end(), [](const Crossing& x, const Crossing& y) {
      return x.leg != y.leg ? x.leg < y.leg : x.t_approx < y.t_approx;
    });
    // A point of a leg crossed by more than one other leg piece is a multiple point.
    for (std::size_t k = 1; k < crossings_.size(); ++k) {
      const Crossing& prev = crossings_[k - 1];
      const Crossing& cur = crossings_[k];
      if (prev.leg != cur.leg) continue;
      if (std::abs(prev.t_approx - cur.t_approx) > 1e-6) continue;
      if (fuzzy_sign(params_[prev.slot] - params_[cur.slot], eps_) == 0) {
        mark_degenerate(report, "more than two leg pieces cross at one point");
      }
    }
    report.intersections = static_cast<std::int64_t>(crossings_.size() / 2);
  }

  const Leg<T>& leg(int i) const { return legs_[i]; }

 private:
  static void mark_degenerate(ImmersionReport& report, const char* reason) {
    if (!report.degenerate) report.degenerate_reason = reason;
    report.degenerate = true;
  }

  double eps_;
  std::array<Leg<T>, 3> legs_;
  std::vector<Crossing> crossings_;
  std::vector<T> params_;
};

template <class T>
void run_arrangement(Arrangement<T>& arrangement, const LatticeSpec& lattice,
                     ImmersionReport& report) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double reach = arrangement.leg(i).length + arrangement.leg(j).length;
      const CoordinateBox box = coordinate_box(reach, lattice);
      for (std::int64_t la = -box.a_max; la <= box.a_max; ++la) {
        for (std::int64_t lb = -box.b_max; lb <= box.b_max; ++lb) {
          if (i == j && la == 0 && lb == 0) continue;
          if (length(embed({la, lb}, lattice)) > reach * (1 + 1e-9) + 1e-9) continue;
          arrangement.intersect(i, j, {la, lb}, report);
        }
      }
    }
  }
  arrangement.finish(report);
}

}  // namespace

ImmersionReport self_intersections(const Tripod& tripod, const LatticeSpec& lattice) {
  ImmersionReport report;
  report.index_n = tripod.index_n;
  const Quadruple& q = tripod.coords;

  if (tripod.exact) {
    const ExactPoint p = to_lattice_coords(tripod.exact->p, lattice);
    auto pt = [](const LatticeVector& v) { return ExactPoint{QuadraticNumber{v.a}, QuadraticNumber{v.b}}; };
    Arrangement<QuadraticNumber> arrangement({pt({0, 0}), pt(q.z()), pt(q.w())}, p,
                                             tripod.leg_lengths, 0.0);
    run_arrangement(arrangement, lattice, report);
  } else {
    report.heuristic = true;
    const FloatPoint p = to_lattice_coords(tripod.p, lattice);
    auto pt = [](const LatticeVector& v) {
      return FloatPoint{static_cast<double>(v.a), static_cast<double>(v.b)};
    };
    Arrangement<double> arrangement({pt({0, 0}), pt(q.z()), pt(q.w())}, p, tripod.leg_lengths,
                                    lattice.epsilon);
    run_arrangement(arrangement, lattice, report);
  }

  // Cell structure: the two tripod vertices have degree 3, each transverse
  // crossing has degree 4.
  report.vertex_degrees.assign(2, 3);
  report.vertex_degrees.insert(report.vertex_degrees.end(),
                               static_cast<std::size_t>(report.intersections), 4);
  std::int64_t degree_sum = 0;
  for (int d : report.vertex_degrees) degree_sum += d;
  report.cells.vertices = static_cast<std::int64_t>(report.vertex_degrees.size());
  report.cells.edges = degree_sum / 2;
  report.cells.faces = report.cells.edges - report.cells.vertices;  // Euler characteristic 0
  return report;
}

std::int64_t region_count(const ImmersionReport& report) {
  if (report.degenerate) {
    throw std::invalid_argument("region count undefined: " + report.degenerate_reason);
  }
  return report.cells.faces;
}

double shortest_vector_length(const LatticeVector& v1, const LatticeVector& v2,
                              const LatticeSpec& lattice) {
  const FloatPoint e1 = embed(v1, lattice);
  const FloatPoint e2 = embed(v2, lattice);
  const double area = std::abs(cross(e1, e2));
  if (area == 0.0) throw std::invalid_argument("dependent sublattice basis");
  const double bound = std::min(length(e1), length(e2));
  const auto m_max = static_cast<std::int64_t>(std::ceil(bound * length(e2) / area));
  const auto n_max = static_cast<std::int64_t>(std::ceil(bound * length(e1) / area));
  double best = bound;
  for (std::int64_t m = -m_max; m <= m_max; ++m) {
    for (std::int64_t n = -n_max; n <= n_max; ++n) {
      if (m == 0 && n == 0) continue;
      best = std::min(best, length(static_cast<double>(m) * e1 + static_cast<double>(n) * e2));
    }
  }
  return best;
}

std::vector<Tripod> fiber_tripods(const LatticeVector& v1, const LatticeVector& v2,
                                  const LatticeSpec& lattice, Canonicalization mode) {
  const std::int64_t det = v1.a * v2.b - v1.b * v2.a;
  if (det == 0) throw std::invalid_argument("dependent sublattice basis");
  const std::int64_t index = std::abs(det);

  const FloatPoint e1 = embed(v1, lattice);
  const FloatPoint e2 = embed(v2, lattice);
  const double covol0 = static_cast<double>(index) * lattice.covolume();
  const double shortest = shortest_vector_length(v1, v2, lattice);
  // With the largest angle at the origin, |z||w| <= 2 covol0 / sqrt3 and both
  // endpoints are at least `shortest` long. Other lifts only need sides up to
  // the longest side |z - w| <= |z| + |w|.
  double radius = 2.0 * covol0 / (std::sqrt(3.0) * shortest);
  if (mode == Canonicalization::lemma) radius *= 2.0;
  radius *= 1.0 + 1e-9;

  const double area = std::abs(cross(e1, e2));
  const auto m_max = static_cast<std::int64_t>(std::ceil(radius * length(e2) / area));
  const auto n_max = static_cast<std::int64_t>(std::ceil(radius * length(e1) / area));
  std::vector<LatticeVector> points;
  for (std::int64_t m = -m_max; m <= m_max; ++m) {
    for (std::int64_t n = -n_max; n <= n_max; ++n) {
      const LatticeVector v{m * v1.a + n * v2.a, m * v1.b + n * v2.b};
      if ((m != 0 || n != 0) && length(embed(v, lattice)) <= radius) points.push_back(v);
    }
  }

  std::vector<Tripod> out;
  for (const LatticeVector& z : points) {
    for (const LatticeVector& w : points) {
      const Quadruple q{z.a, z.b, w.a, w.b};
      // Spanning exactly the sublattice with positive orientation.
      if (q.determinant() != index) continue;
      bool keep = false;
      if (lattice.exact()) {
        const ExactPoint ze = embed_exact(z, lattice);
        const ExactPoint we = embed_exact(w, lattice);
        keep = angle_condition(ze, we) && is_canonical(ze, we, mode);
      } else {
        const FloatPoint zf = embed(z, lattice);
        const FloatPoint wf = embed(w, lattice);
        keep = angle_condition(zf, wf) && is_canonical(zf, wf, mode);
      }
      if (keep) out.push_back(make_tripod(q, lattice));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Tripod& x, const Tripod& y) { return x.coords < y.coords; });
  return out;
}

}  // namespace tripods
