#pragma once
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tripods/analytics.hpp"
#include "tripods/census.hpp"
#include "tripods/geometry.hpp"
#include "tripods/topology.hpp"

namespace tripods {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

/// Serializes with floats printed as %.17g and non-finite floats as null.
/// indent < 0 gives a single line.
std::string dump_json(const Json& value, int indent = 2);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string iso_timestamp_utc();

/// Envelope keys, in order: tool_version, command, lattice, timestamp,
/// payload, then seed for stochastic commands.
Json make_envelope(const std::string& command, const std::string& lattice, Json payload,
                   std::optional<std::uint64_t> seed = std::nullopt,
                   const std::string& timestamp = iso_timestamp_utc());

Json to_json(const QuadraticNumber& q);
Json to_json(const ExactPoint& p);
Json to_json(const FloatPoint& p);
Json to_json(const Quadruple& q);
Json to_json(const CensusReport& report, bool include_timing = false);
Json to_json(const ConvergenceRow& row);
Json to_json(const NonreducedCensus& n);
Json to_json(const RandomLatticeReport& r);
Json to_json(const VolumeEstimate& v);
Json to_json(const SliceCheck& s);
Json to_json(const ImmersionReport& r);

/// Full description of one tripod: geometry, index, volume, flags and the
/// self-intersection report.
Json inspect_payload(const Tripod& tripod, const LatticeSpec& lattice);

/// Float formatting shared by JSON and CSV.
std::string format_double(double v);

inline constexpr const char* kCsvHeader = "R,total,primitive,reduced,nonreduced,primitive_over_R4,error";
std::string csv_row(const ConvergenceRow& row);
std::string to_csv(const std::vector<ConvergenceRow>& rows);
ConvergenceRow row_from_report(const CensusReport& report);

/// Static SVG: R against N/R^4 with a horizontal line at `reference`.
std::string convergence_svg(const std::vector<ConvergenceRow>& rows, double reference,
                            double covolume = 1.0);

}  // namespace tripods
