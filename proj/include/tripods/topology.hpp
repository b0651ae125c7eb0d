#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tripods/geometry.hpp"

namespace tripods {

struct CellCounts {
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t faces = 0;
};

/// Result of the segment-arrangement oracle for one tripod on C / Lambda.
struct ImmersionReport {
  std::int64_t index_n = 0;
  std::int64_t intersections = 0;  // transverse self-intersections on the torus
  bool degenerate = false;         // non-transverse contact; counts are then unreliable
  std::string degenerate_reason;
  bool heuristic = false;          // float tolerances were used (GeneralTau)
  /// The two tripod vertices (images of 0 and p) followed by one entry per
  /// self-intersection point.
  std::vector<int> vertex_degrees;
  CellCounts cells;
};

/// Counts self-intersections by lifting the legs [0,p], [z,p], [w,p] and
/// intersecting each with every lattice translate of every leg within reach.
/// Meetings at graph vertices are not counted; vertex-on-leg contacts,
/// collinear overlaps and multiple crossings set `degenerate`.
ImmersionReport self_intersections(const Tripod& tripod, const LatticeSpec& lattice);

/// Number of complementary regions c2 = c1 - c0. Throws std::invalid_argument
/// for a degenerate report.
std::int64_t region_count(const ImmersionReport& report);

/// All tripods whose spanning lattice is exactly span(v1, v2), canonicalized
/// by `mode`, sorted by coordinates. Throws std::invalid_argument for a
/// dependent basis.
std::vector<Tripod> fiber_tripods(const LatticeVector& v1, const LatticeVector& v2,
                                  const LatticeSpec& lattice,
                                  Canonicalization mode = Canonicalization::lemma);

/// Length of the shortest nonzero vector of span(v1, v2), by bounded search.
double shortest_vector_length(const LatticeVector& v1, const LatticeVector& v2,
                              const LatticeSpec& lattice);

}  // namespace tripods
