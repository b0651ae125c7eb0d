#pragma once
#include <chrono>
#include <cstdint>

#include "tripods/census.hpp"

namespace tripods::detail {

/// Below this radius every kernel product fits in 64 bits.
inline constexpr double kInt64RadiusLimit = 10000.0;

void validate_config(const CensusConfig& config);
void finish_report(CensusReport& report, std::chrono::steady_clock::time_point start);
std::uint64_t box_tuple_count(const CoordinateBox& box);

}  // namespace tripods::detail
