#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tripods/geometry.hpp"
#include "tripods/lattice.hpp"

namespace tripods {

/// Largest radius accepted by the census. Beyond it the exact predicates
/// would need more than 128 bits.
inline constexpr double kMaxCensusRadius = 1e6;

/// TRIPOD_THREADS if set to a positive integer, else the OpenMP default.
int default_thread_count();

struct CensusConfig {
  LatticeSpec lattice = LatticeSpec::gaussian();
  double radius = 0.0;  // integral in preset lattices
  Canonicalization mode = Canonicalization::lemma;
  bool classify_reduced = false;
  int threads = 1;
  std::optional<std::size_t> emit_samples;  // cap on retained per-tripod records
};

struct CensusCounts {
  std::uint64_t total_tuples_scanned = 0;
  std::uint64_t all_tripods = 0;
  std::uint64_t primitive = 0;
  std::optional<std::uint64_t> reduced;  // set when classify_reduced
  std::optional<std::uint64_t> nonreduced_primitive;

  friend bool operator==(const CensusCounts&, const CensusCounts&) = default;
};

/// Primitive admissible tuples (orientation, angle and length filters) whose
/// lift choice is ambiguous.
struct TieCounts {
  std::uint64_t largest_angle = 0;    // in the lemma sector, two angles tie for largest
  std::uint64_t sector_boundary = 0;  // arg(u) in {0, 2pi/3, 4pi/3}

  friend bool operator==(const TieCounts&, const TieCounts&) = default;
};

struct CensusSample {
  Quadruple coords;
  std::int64_t index_n = 0;
  double length_sq = 0.0;
  bool primitive = false;
  std::optional<bool> reduced;

  friend bool operator==(const CensusSample&, const CensusSample&) = default;
};

struct CensusReport {
  CensusConfig config;
  CensusCounts counts;
  std::map<std::int64_t, std::uint64_t> index_histogram;  // over all counted tripods
  TieCounts ties;
  double primitive_over_R4 = 0.0;
  double normalized_constant = 0.0;  // primitive * covolume^2 / R^4
  double reference_constant = 0.0;
  double error = 0.0;  // |normalized_constant - reference_constant|
  double elapsed_ms = 0.0;
  std::vector<CensusSample> samples;
  bool heuristic = false;
};

/// Counts tripods with length < R in the selected canonical lift. Parallel
/// over chunks of the outer coordinate; results do not depend on `threads`.
/// Throws std::invalid_argument for a bad config and OverflowError for
/// R > kMaxCensusRadius.
CensusReport census(const CensusConfig& config);

/// Straightforward serial census on Q(sqrt3) arithmetic and make_tripod,
/// with bounding-box reducedness. Slow; kept as a test oracle.
CensusReport census_reference(const CensusConfig& config);

/// Exact filters used by the kernel, exposed for testing. Preset lattices only.
bool admissible_exact(const Quadruple& q, const LatticeSpec& lattice);
bool length_below_exact(const Quadruple& q, const LatticeSpec& lattice, std::int64_t radius);

struct ConvergenceRow {
  double radius = 0.0;
  std::uint64_t all_tripods = 0;
  std::uint64_t primitive = 0;
  std::optional<std::uint64_t> reduced;
  std::optional<std::uint64_t> nonreduced_primitive;
  double primitive_over_R4 = 0.0;
  double all_over_R4 = 0.0;
  double error = 0.0;  // normalized constant vs 15 sqrt3 / (4 pi^3)
};

/// One census per radius. Radii must be strictly increasing.
std::vector<ConvergenceRow> convergence_scan(const LatticeSpec& lattice,
                                             const std::vector<double>& radii,
                                             Canonicalization mode = Canonicalization::lemma,
                                             bool classify_reduced = false,
                                             int threads = default_thread_count());

struct NonreducedCensus {
  LatticeSpec lattice;
  double radius = 0.0;
  std::uint64_t primitive = 0;
  std::uint64_t nonreduced = 0;
  double nonreduced_over_R4 = 0.0;
  double asymptotic_bound = 0.0;  // (1 - 6/pi^2) pi / 16
  double one_minus_6_over_pi2 = 0.0;
  std::optional<double> c1;  // Eisenstein only
  std::optional<double> c2;
};

/// Throws std::invalid_argument for GeneralTau.
NonreducedCensus nonreduced_census(const LatticeSpec& lattice, double radius,
                                   int threads = default_thread_count());

struct LatticeSampleResult {
  double tau_s = 0.0;
  double tau_t = 0.0;
  bool extra = false;  // supplied by the caller, not drawn
  std::uint64_t primitive = 0;
  std::uint64_t nonreduced = 0;
};

struct RandomLatticeReport {
  std::uint64_t seed = 0;
  double radius = 0.0;
  std::vector<LatticeSampleResult> samples;
  std::map<std::uint64_t, std::uint64_t> histogram;  // nonreduced count -> samples
  bool heuristic = true;
};

/// Draws tau = s + it with s in [0, 1), t in [0.5, 1.5] and runs a heuristic
/// census for each. `extra_taus` are appended as given (s, t) pairs.
RandomLatticeReport random_lattice_experiment(
    std::size_t sample_count, double radius, std::uint64_t seed,
    const std::vector<std::pair<double, double>>& extra_taus = {},
    int threads = default_thread_count());

}  // namespace tripods
