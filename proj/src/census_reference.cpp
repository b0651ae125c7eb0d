#include <algorithm>
#include <chrono>
#include <numeric>
#include <type_traits>

#include "census_internal.hpp"
#include "tripods/census.hpp"

namespace tripods {

namespace {

template <class T>
bool on_boundary_ray(const Vec2<T>& u) {
  using S = ScalarTraits<T>;
  const Vec2<T> rays[3] = {{T(1), T(0)}, {-S::half(), S::half_sqrt3()}, {-S::half(), -S::half_sqrt3()}};
  for (const auto& r : rays) {
    if (sign_of(cross(u, r)) == 0 && sign_of(dot(u, r)) > 0) return true;
  }
  return false;
}

template <class T>
bool max_side_tied(const Vec2<T>& z, const Vec2<T>& w) {
  const T s[3] = {norm_sq(w - z), norm_sq(z), norm_sq(w)};
  int best = 0;
  for (int i = 1; i < 3; ++i) {
    if (sign_of(s[i] - s[best]) > 0) best = i;
  }
  int ties = 0;
  for (const T& v : s) ties += sign_of(v - s[best]) == 0;
  return ties >= 2;
}

struct Verdict {
  bool admissible = false;
  bool lemma = false;
  bool appendix = false;
  bool tie = false;
  bool boundary = false;
};

template <class T>
Verdict judge(const Vec2<T>& z, const Vec2<T>& w, const T& r2, double eps) {
  Verdict v;
  if constexpr (std::is_same_v<T, double>) {
    if (!angle_condition_with_margin(z, w, eps)) return v;
  } else {
    (void)eps;
    if (!angle_condition(z, w)) return v;
  }
  const Vec2<T> u = toricelli_point(z, w);
  if constexpr (std::is_same_v<T, double>) {
    if (!(tripod_length_sq(z, w) < r2 * (1.0 - eps))) return v;
    v.lemma = in_lemma_sector_with_margin(u, eps);
  } else {
    if (!(tripod_length_sq(z, w) < r2)) return v;
    v.lemma = in_lemma_sector(u);
  }
  v.admissible = true;
  v.appendix = largest_angle_at_origin(z, w);
  v.tie = max_side_tied(z, w);
  v.boundary = on_boundary_ray(u);
  return v;
}

}  // namespace

CensusReport census_reference(const CensusConfig& config) {
  detail::validate_config(config);
  const auto start = std::chrono::steady_clock::now();
  const LatticeSpec& lat = config.lattice;
  CensusReport report;
  report.config = config;
  report.heuristic = !lat.exact();

  const CoordinateBox box = coordinate_box(config.radius, lat);
  const double r2f = config.radius * config.radius;
  const QuadraticNumber r2q = lat.exact() ? QuadraticNumber{static_cast<std::int64_t>(r2f)}
                                          : QuadraticNumber{};
  std::uint64_t reduced = 0, nonreduced = 0;

  for (std::int64_t a = -box.a_max; a <= box.a_max; ++a) {
    for (std::int64_t b = -box.b_max; b <= box.b_max; ++b) {
      for (std::int64_t c = -box.a_max; c <= box.a_max; ++c) {
        for (std::int64_t d = -box.b_max; d <= box.b_max; ++d) {
          const Quadruple q{a, b, c, d};
          if (q.determinant() <= 0) continue;
          Verdict v;
          if (lat.exact()) {
            const ExactPoint z = embed_exact(q.z(), lat), w = embed_exact(q.w(), lat);
            if (!(norm_sq(z) < r2q) || !(norm_sq(w) < r2q)) continue;
            v = judge(z, w, r2q, 0.0);
          } else {
            v = judge(embed(q.z(), lat), embed(q.w(), lat), r2f, lat.epsilon);
          }
          if (!v.admissible) continue;
          const bool primitive = gcd4(a, b, c, d) == 1;
          if (primitive) {
            report.ties.largest_angle += v.lemma && v.tie;
            report.ties.sector_boundary += v.boundary;
          }
          if (!(config.mode == Canonicalization::lemma ? v.lemma : v.appendix)) continue;

          Tripod t = make_tripod(q, lat);
          ++report.counts.all_tripods;
          ++report.index_histogram[t.index_n];
          std::optional<bool> red;
          if (config.classify_reduced) {
            red = classify(t, lat, SegmentMethod::bounding_box).reduced;
          }
          if (primitive) {
            ++report.counts.primitive;
            if (red) ++(*red ? reduced : nonreduced);
          }
          if (config.emit_samples && report.samples.size() < *config.emit_samples) {
            report.samples.push_back({q, t.index_n, t.length_sq, primitive, red});
          }
        }
      }
    }
  }
  report.counts.total_tuples_scanned = detail::box_tuple_count(box);
  if (config.classify_reduced) {
    report.counts.reduced = reduced;
    report.counts.nonreduced_primitive = nonreduced;
  }
  detail::finish_report(report, start);
  return report;
}

}  // namespace tripods
