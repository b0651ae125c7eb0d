#include "tripods/census.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "census_internal.hpp"
#include "tripods/constants.hpp"
#include "tripods/rational.hpp"

namespace tripods {

int default_thread_count() {
  if (const char* env = std::getenv("TRIPOD_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 4096) return static_cast<int>(v);
  }
  return std::max(1, omp_get_max_threads());
}

namespace detail {

void validate_config(const CensusConfig& config) {
  if (!(config.radius > 0.0) || !std::isfinite(config.radius)) {
    throw std::invalid_argument("census radius must be positive");
  }
  if (config.radius > kMaxCensusRadius) {
    throw OverflowError("census radius exceeds 1e6");
  }
  if (config.lattice.exact() && std::floor(config.radius) != config.radius) {
    throw std::invalid_argument("census radius must be an integer in preset lattices");
  }
  if (config.mode == Canonicalization::appendix &&
      config.lattice.mode != LatticeMode::gaussian) {
    throw std::invalid_argument("appendix canonicalization requires the gaussian lattice");
  }
  if (config.threads < 1) throw std::invalid_argument("thread count must be positive");
}

void finish_report(CensusReport& report, std::chrono::steady_clock::time_point start) {
  const double r4 = std::pow(report.config.radius, 4);
  const double covol = report.config.lattice.covolume();
  report.primitive_over_R4 = static_cast<double>(report.counts.primitive) / r4;
  report.normalized_constant = report.primitive_over_R4 * covol * covol;
  report.reference_constant = constants::main_constant;
  report.error = std::abs(report.normalized_constant - report.reference_constant);
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
}

std::uint64_t box_tuple_count(const CoordinateBox& box) {
  const std::uint64_t na = 2 * static_cast<std::uint64_t>(box.a_max) + 1;
  const std::uint64_t nb = 2 * static_cast<std::uint64_t>(box.b_max) + 1;
  return na * nb * na * nb;
}

}  // namespace detail

namespace {

struct Outcome {
  bool admissible = false;  // orientation, angle and length
  bool lemma = false;
  bool appendix = false;
  bool tie = false;       // largest angle attained twice
  bool boundary = false;  // u on a sector boundary ray
  bool primitive = false;
};

template <class Int>
int sign_root3(Int p, Int q) {
  const int sp = (p > 0) - (p < 0);
  const int sq = (q > 0) - (q < 0);
  if (sp == sq || sq == 0) return sp;
  if (sp == 0) return sq;
  return p * p > 3 * q * q ? sp : sq;
}

template <class Int>
bool angle_ok(Int d, Int n1, Int n2) {
  return d >= 0 || d * d < n1 * n2;
}

template <class Int>
bool tied(Int s0, Int s1, Int s2) {
  const Int m = std::max({s0, s1, s2});
  return (s0 == m) + (s1 == m) + (s2 == m) >= 2;
}

// Z = |z|^2, W = |w|^2, D = <z, w>, n = ad - bc.
template <class Int>
struct GaussianKernel {
  Int r2;

  Int norm(Int x, Int y) const { return x * x + y * y; }

  void evaluate(Int a, Int b, Int c, Int d, Int Z, Int W, Outcome& o) const {
    const Int n = a * d - b * c;
    if (n <= 0) return;
    const Int D = a * c + b * d;
    const Int S = Z + W - 2 * D;
    // angle test written with 4<e1,e2>^2 < |e1|^2 |e2|^2
    if (!(D >= 0 || 4 * D * D < Z * W)) return;
    const Int dz = Z - D;
    if (!(dz >= 0 || 4 * dz * dz < Z * S)) return;
    const Int dw = W - D;
    if (!(dw >= 0 || 4 * dw * dw < W * S)) return;
    const Int e = r2 - (Z + W - D);
    if (e <= 0 || e * e <= 3 * n * n) return;
    o.admissible = true;

    // 2u = ((a + c) + (d - b) sqrt3, (b + d) + (a - c) sqrt3)
    const int uy = sign_root3(b + d, a - c);
    const int ux = sign_root3(a + c, d - b);
    const int rot120 = sign_root3(2 * d - b, a);  // sign of sqrt3 ux + uy
    const int rot240 = sign_root3(d - 2 * b, c);  // sign of sqrt3 ux - uy
    o.lemma = (uy > 0 && rot120 > 0) || (uy == 0 && ux > 0);
    o.appendix = std::min(Z, W) > 2 * D;
    o.tie = tied(S, Z, W);
    o.boundary = (uy == 0 && ux > 0) || (rot120 == 0 && uy > 0) || (rot240 == 0 && uy < 0);
  }

  double length_sq(Int a, Int b, Int c, Int d) const {
    const double x = static_cast<double>(a * a + b * b + c * c + d * d - a * c - b * d);
    return x + constants::sqrt3 * static_cast<double>(a * d - b * c);
  }
};

// Dots are doubled so everything stays integral: D2 = 2<z, w>.
template <class Int>
struct EisensteinKernel {
  Int r2;

  Int norm(Int x, Int y) const { return x * x + x * y + y * y; }

  void evaluate(Int a, Int b, Int c, Int d, Int Z, Int W, Outcome& o) const {
    const Int n = a * d - b * c;
    if (n <= 0) return;
    const Int D2 = 2 * a * c + a * d + b * c + 2 * b * d;
    const Int S = Z + W - D2;
    if (!(D2 >= 0 || D2 * D2 < Z * W)) return;
    const Int dz = 2 * Z - D2;
    if (!(dz >= 0 || dz * dz < Z * S)) return;
    const Int dw = 2 * W - D2;
    if (!(dw >= 0 || dw * dw < W * S)) return;
    // u = m + k zeta
    const Int m = -b + c + d;
    const Int k = a + b - c;
    if (!(m * m + m * k + k * k < r2)) return;
    o.admissible = true;

    o.lemma = (k > 0 && m + k > 0) || (k == 0 && m > 0);
    o.appendix = std::min(Z, W) > D2;
    o.tie = tied(S, Z, W);
    o.boundary = (k == 0 && m > 0) || (m + k == 0 && k > 0) || (m == 0 && k < 0);
  }

  double length_sq(Int a, Int b, Int c, Int d) const {
    const Int m = -b + c + d;
    const Int k = a + b - c;
    return static_cast<double>(m * m + m * k + k * k);
  }
};

struct Accumulator {
  std::uint64_t all = 0;
  std::uint64_t primitive = 0;
  std::uint64_t reduced = 0;
  std::uint64_t nonreduced = 0;
  std::map<std::int64_t, std::uint64_t> histogram;
  TieCounts ties;
  std::vector<CensusSample> samples;
};

// Shared bookkeeping once the filters have run.
template <class Reduced>
void record(const CensusConfig& config, const Quadruple& q, const Outcome& o, double length_sq,
            Reduced&& reduced_test, Accumulator& acc) {
  if (!o.admissible) return;
  if (o.primitive) {
    if (o.lemma && o.tie) ++acc.ties.largest_angle;
    if (o.boundary) ++acc.ties.sector_boundary;
  }
  const bool counted = config.mode == Canonicalization::lemma ? o.lemma : o.appendix;
  if (!counted) return;
  ++acc.all;
  ++acc.histogram[q.determinant()];
  std::optional<bool> reduced;
  if (o.primitive) {
    ++acc.primitive;
    if (config.classify_reduced) {
      reduced = reduced_test(q);
      ++(*reduced ? acc.reduced : acc.nonreduced);
    }
  } else if (config.classify_reduced) {
    reduced = false;
  }
  if (config.emit_samples && acc.samples.size() < *config.emit_samples) {
    acc.samples.push_back({q, q.determinant(), length_sq, o.primitive, reduced});
  }
}

template <class Int, class Kernel>
void scan_preset_chunk(const CensusConfig& config, const CoordinateBox& box, const Kernel& kernel,
                       std::int64_t a, Accumulator& acc) {
  const auto reduced_test = [&](const Quadruple& q) {
    return is_reduced_exact(q, config.lattice);
  };
  for (std::int64_t b = -box.b_max; b <= box.b_max; ++b) {
    if (a == 0 && b == 0) continue;
    const Int Z = kernel.norm(a, b);
    if (Z >= kernel.r2) continue;
    for (std::int64_t c = -box.a_max; c <= box.a_max; ++c) {
      for (std::int64_t d = -box.b_max; d <= box.b_max; ++d) {
        const Int W = kernel.norm(c, d);
        if (W >= kernel.r2 || W == 0) continue;
        Outcome o;
        kernel.evaluate(a, b, c, d, Z, W, o);
        if (!o.admissible) continue;
        o.primitive = gcd4(a, b, c, d) == 1;
        const Quadruple q{a, b, c, d};
        record(config, q, o, kernel.length_sq(a, b, c, d), reduced_test, acc);
      }
    }
  }
}

void scan_general_chunk(const CensusConfig& config, const CoordinateBox& box, std::int64_t a,
                        Accumulator& acc) {
  const LatticeSpec& lat = config.lattice;
  const double r2 = config.radius * config.radius;
  const double slack = 1.0 + 1e-12;
  const double eps = lat.epsilon;
  const auto reduced_test = [&](const Quadruple& q) {
    const Tripod t = make_tripod(q, lat);
    return classify(t, lat).reduced.value_or(false);
  };
  for (std::int64_t b = -box.b_max; b <= box.b_max; ++b) {
    if (a == 0 && b == 0) continue;
    const FloatPoint z = embed({a, b}, lat);
    const double Z = norm_sq(z);
    if (Z >= r2 * slack) continue;
    for (std::int64_t c = -box.a_max; c <= box.a_max; ++c) {
      for (std::int64_t d = -box.b_max; d <= box.b_max; ++d) {
        if (a * d - b * c <= 0) continue;
        const FloatPoint w = embed({c, d}, lat);
        const double W = norm_sq(w);
        if (W >= r2 * slack) continue;
        if (!angle_condition_with_margin(z, w, eps)) continue;
        const double l2 = tripod_length_sq(z, w);
        if (!(l2 < r2 * (1.0 - eps))) continue;
        Outcome o;
        o.admissible = true;
        const FloatPoint u = toricelli_point(z, w);
        o.lemma = in_lemma_sector_with_margin(u, eps);
        const double S = norm_sq(w - z);
        const double m = std::max({S, Z, W});
        const double tol = eps * m;
        o.tie = (std::abs(S - m) <= tol) + (std::abs(Z - m) <= tol) + (std::abs(W - m) <= tol) >= 2;
        const double ulen = length(u);
        o.boundary = (std::abs(u.y) <= eps * ulen && u.x > 0) ||
                     (std::abs(constants::sqrt3 * u.x + u.y) <= 2 * eps * ulen && u.y > 0) ||
                     (std::abs(constants::sqrt3 * u.x - u.y) <= 2 * eps * ulen && u.y < 0);
        o.primitive = gcd4(a, b, c, d) == 1;
        record(config, Quadruple{a, b, c, d}, o, l2, reduced_test, acc);
      }
    }
  }
}

template <class ChunkFn>
std::vector<Accumulator> run_chunks(const CensusConfig& config, const CoordinateBox& box,
                                    ChunkFn&& chunk_fn) {
  const std::int64_t chunks = 2 * box.a_max + 1;
  std::vector<Accumulator> acc(static_cast<std::size_t>(chunks));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic, 1) num_threads(config.threads)
  for (std::int64_t i = 0; i < chunks; ++i) {
    try {
      chunk_fn(i - box.a_max, acc[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return acc;
}

}  // namespace

bool admissible_exact(const Quadruple& q, const LatticeSpec& lattice) {
  if (!lattice.exact()) throw std::invalid_argument("exact predicates need a preset lattice");
  Outcome o;
  const int128 a = q.a, b = q.b, c = q.c, d = q.d;
  // with r2 at its maximum only the length filter could fail, so test it separately
  if (lattice.mode == LatticeMode::gaussian) {
    const GaussianKernel<int128> k{0};
    const int128 Z = k.norm(a, b), W = k.norm(c, d);
    if (Z == 0 || W == 0) return false;
    const int128 n = a * d - b * c, D = a * c + b * d, S = Z + W - 2 * D;
    return n > 0 && angle_ok<int128>(2 * D, Z, W) && angle_ok<int128>(2 * (Z - D), Z, S) &&
           angle_ok<int128>(2 * (W - D), W, S);
  }
  const EisensteinKernel<int128> k{0};
  const int128 Z = k.norm(a, b), W = k.norm(c, d);
  if (Z == 0 || W == 0) return false;
  const int128 n = a * d - b * c, D2 = 2 * a * c + a * d + b * c + 2 * b * d, S = Z + W - D2;
  return n > 0 && angle_ok<int128>(D2, Z, W) && angle_ok<int128>(2 * Z - D2, Z, S) &&
         angle_ok<int128>(2 * W - D2, W, S);
}

bool length_below_exact(const Quadruple& q, const LatticeSpec& lattice, std::int64_t radius) {
  if (!lattice.exact()) throw std::invalid_argument("exact predicates need a preset lattice");
  const int128 a = q.a, b = q.b, c = q.c, d = q.d;
  const int128 r2 = static_cast<int128>(radius) * radius;
  if (lattice.mode == LatticeMode::gaussian) {
    const int128 n = a * d - b * c;
    const int128 e = r2 - (a * a + b * b + c * c + d * d - a * c - b * d);
    return e > 0 && e * e > 3 * n * n;
  }
  const int128 m = -b + c + d, k = a + b - c;
  return m * m + m * k + k * k < r2;
}

CensusReport census(const CensusConfig& config) {
  detail::validate_config(config);
  const auto start = std::chrono::steady_clock::now();
  CensusReport report;
  report.config = config;
  report.heuristic = !config.lattice.exact();

  const CoordinateBox box = coordinate_box(config.radius, config.lattice);
  const auto r = static_cast<std::int64_t>(config.radius);

  std::vector<Accumulator> parts;
  const auto preset = [&]<class Int>(Int) {
    const Int r2 = static_cast<Int>(r) * r;
    if (config.lattice.mode == LatticeMode::gaussian) {
      const GaussianKernel<Int> kernel{r2};
      parts = run_chunks(config, box, [&](std::int64_t a, Accumulator& acc) {
        scan_preset_chunk<Int>(config, box, kernel, a, acc);
      });
    } else {
      const EisensteinKernel<Int> kernel{r2};
      parts = run_chunks(config, box, [&](std::int64_t a, Accumulator& acc) {
        scan_preset_chunk<Int>(config, box, kernel, a, acc);
      });
    }
  };
  if (!config.lattice.exact()) {
    parts = run_chunks(config, box, [&](std::int64_t a, Accumulator& acc) {
      scan_general_chunk(config, box, a, acc);
    });
  } else if (config.radius <= detail::kInt64RadiusLimit) {
    preset(std::int64_t{});
  } else {
    preset(int128{});
  }

  report.counts.total_tuples_scanned = detail::box_tuple_count(box);
  std::uint64_t reduced = 0, nonreduced = 0;
  for (Accumulator& part : parts) {
    report.counts.all_tripods += part.all;
    report.counts.primitive += part.primitive;
    reduced += part.reduced;
    nonreduced += part.nonreduced;
    for (const auto& [n, count] : part.histogram) report.index_histogram[n] += count;
    report.ties.largest_angle += part.ties.largest_angle;
    report.ties.sector_boundary += part.ties.sector_boundary;
    if (config.emit_samples) {
      for (CensusSample& s : part.samples) {
        if (report.samples.size() >= *config.emit_samples) break;
        report.samples.push_back(std::move(s));
      }
    }
  }
  if (config.classify_reduced) {
    report.counts.reduced = reduced;
    report.counts.nonreduced_primitive = nonreduced;
  }
  detail::finish_report(report, start);
  return report;
}

std::vector<ConvergenceRow> convergence_scan(const LatticeSpec& lattice,
                                             const std::vector<double>& radii,
                                             Canonicalization mode, bool classify_reduced,
                                             int threads) {
  for (std::size_t i = 1; i < radii.size(); ++i) {
    if (!(radii[i] > radii[i - 1])) {
      throw std::invalid_argument("convergence radii must be strictly increasing");
    }
  }
  std::vector<ConvergenceRow> rows;
  for (double radius : radii) {
    CensusConfig config;
    config.lattice = lattice;
    config.radius = radius;
    config.mode = mode;
    config.classify_reduced = classify_reduced;
    config.threads = threads;
    const CensusReport rep = census(config);
    ConvergenceRow row;
    row.radius = radius;
    row.all_tripods = rep.counts.all_tripods;
    row.primitive = rep.counts.primitive;
    row.reduced = rep.counts.reduced;
    row.nonreduced_primitive = rep.counts.nonreduced_primitive;
    row.primitive_over_R4 = rep.primitive_over_R4;
    row.all_over_R4 = static_cast<double>(rep.counts.all_tripods) / std::pow(radius, 4);
    row.error = rep.error;
    rows.push_back(row);
  }
  return rows;
}

NonreducedCensus nonreduced_census(const LatticeSpec& lattice, double radius, int threads) {
  if (!lattice.exact()) {
    throw std::invalid_argument("nonreduced census needs exact reducedness (preset lattice)");
  }
  CensusConfig config;
  config.lattice = lattice;
  config.radius = radius;
  config.classify_reduced = true;
  config.threads = threads;
  const CensusReport rep = census(config);

  NonreducedCensus out;
  out.lattice = lattice;
  out.radius = radius;
  out.primitive = rep.counts.primitive;
  out.nonreduced = rep.counts.nonreduced_primitive.value_or(0);
  out.nonreduced_over_R4 = static_cast<double>(out.nonreduced) / std::pow(radius, 4);
  out.asymptotic_bound = constants::nonreduced_bound;
  out.one_minus_6_over_pi2 = constants::one_minus_6_over_pi2;
  if (lattice.mode == LatticeMode::eisenstein) {
    out.c1 = constants::c1;
    out.c2 = constants::c2;
  }
  return out;
}

RandomLatticeReport random_lattice_experiment(
    std::size_t sample_count, double radius, std::uint64_t seed,
    const std::vector<std::pair<double, double>>& extra_taus, int threads) {
  RandomLatticeReport report;
  report.seed = seed;
  report.radius = radius;

  std::vector<LatticeSampleResult> draws;
  for (std::size_t i = 0; i < sample_count; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> s_dist(0.0, 1.0);
    std::uniform_real_distribution<double> t_dist(0.5, 1.5);
    LatticeSampleResult r;
    r.tau_s = s_dist(rng);
    r.tau_t = t_dist(rng);
    draws.push_back(r);
  }
  for (const auto& [s, t] : extra_taus) {
    LatticeSampleResult r;
    r.tau_s = s;
    r.tau_t = t;
    r.extra = true;
    draws.push_back(r);
  }
  for (LatticeSampleResult& r : draws) {
    CensusConfig config;
    config.lattice = LatticeSpec::general(r.tau_s, r.tau_t);
    config.radius = radius;
    config.classify_reduced = true;
    config.threads = threads;
    const CensusReport rep = census(config);
    r.primitive = rep.counts.primitive;
    r.nonreduced = rep.counts.nonreduced_primitive.value_or(0);
    if (!r.extra) ++report.histogram[r.nonreduced];
  }
  report.samples = std::move(draws);
  return report;
}

}  // namespace tripods
