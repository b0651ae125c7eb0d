#include "tripods/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>

#include "tripods/constants.hpp"

namespace tripods {

namespace {

void dump_into(const Json& v, int indent, int depth, std::string& out) {
  const auto newline = [&](int level) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * level), ' ');
  };
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(key).dump();
        out += indent < 0 ? ":" : ": ";
        dump_into(item, indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      const bool flat = std::none_of(v.begin(), v.end(), [](const Json& item) {
        return item.is_structured();
      });
      if (flat) {
        out += '[';
        bool first = true;
        for (const auto& item : v) {
          if (!first) out += indent < 0 ? "," : ", ";
          first = false;
          dump_into(item, indent, depth + 1, out);
        }
        out += ']';
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        dump_into(item, indent, depth + 1, out);
      }
      newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      out += std::isfinite(d) ? format_double(d) : "null";
      return;
    }
    default:
      out += v.dump();
  }
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

const char* mode_name(Canonicalization mode) {
  return mode == Canonicalization::lemma ? "lemma" : "appendix";
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string dump_json(const Json& value, int indent) {
  std::string out;
  dump_into(value, indent, 0, out);
  return out;
}

std::string iso_timestamp_utc() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json make_envelope(const std::string& command, const std::string& lattice, Json payload,
                   std::optional<std::uint64_t> seed, const std::string& timestamp) {
  Json env;
  env["tool_version"] = kToolVersion;
  env["command"] = command;
  env["lattice"] = lattice;
  env["timestamp"] = timestamp;
  env["payload"] = std::move(payload);
  if (seed) env["seed"] = *seed;
  return env;
}

Json to_json(const QuadraticNumber& q) {
  Json j;
  j["rational"] = q.rational_part().str();
  j["sqrt3"] = q.root3_part().str();
  j["text"] = q.str();
  j["value"] = q.to_double();
  return j;
}

Json to_json(const ExactPoint& p) {
  Json j;
  j["x"] = to_json(p.x);
  j["y"] = to_json(p.y);
  return j;
}

Json to_json(const FloatPoint& p) { return Json::array({p.x, p.y}); }

Json to_json(const Quadruple& q) { return Json::array({q.a, q.b, q.c, q.d}); }

Json to_json(const CensusReport& r, bool include_timing) {
  Json j;
  Json config;
  config["lattice"] = r.config.lattice.name();
  config["radius"] = r.config.radius;
  config["mode"] = mode_name(r.config.mode);
  config["classify_reduced"] = r.config.classify_reduced;
  config["threads"] = r.config.threads;
  config["emit_samples"] = optional_json(r.config.emit_samples);
  j["config"] = config;

  Json counts;
  counts["total_tuples_scanned"] = r.counts.total_tuples_scanned;
  counts["all_tripods"] = r.counts.all_tripods;
  counts["primitive"] = r.counts.primitive;
  counts["reduced"] = optional_json(r.counts.reduced);
  counts["nonreduced_primitive"] = optional_json(r.counts.nonreduced_primitive);
  j["counts"] = counts;

  Json hist = Json::object();
  for (const auto& [n, count] : r.index_histogram) hist[std::to_string(n)] = count;
  j["index_histogram"] = hist;
  j["ties"] = {{"largest_angle", r.ties.largest_angle},
               {"sector_boundary", r.ties.sector_boundary}};
  j["primitive_over_R4"] = r.primitive_over_R4;
  j["normalized_constant"] = r.normalized_constant;
  j["reference_constant"] = r.reference_constant;
  j["error"] = r.error;
  j["heuristic"] = r.heuristic;
  if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
  if (r.config.emit_samples) {
    Json samples = Json::array();
    for (const CensusSample& s : r.samples) {
      samples.push_back({{"coords", to_json(s.coords)},
                         {"index_n", s.index_n},
                         {"length_sq", s.length_sq},
                         {"primitive", s.primitive},
                         {"reduced", optional_json(s.reduced)}});
    }
    j["samples"] = samples;
  }
  return j;
}

Json to_json(const ConvergenceRow& row) {
  Json j;
  j["R"] = row.radius;
  j["total"] = row.all_tripods;
  j["primitive"] = row.primitive;
  j["reduced"] = optional_json(row.reduced);
  j["nonreduced"] = optional_json(row.nonreduced_primitive);
  j["primitive_over_R4"] = row.primitive_over_R4;
  j["all_over_R4"] = row.all_over_R4;
  j["error"] = row.error;
  return j;
}

Json to_json(const NonreducedCensus& n) {
  Json j;
  j["radius"] = n.radius;
  j["primitive"] = n.primitive;
  j["nonreduced"] = n.nonreduced;
  j["nonreduced_over_R4"] = n.nonreduced_over_R4;
  j["asymptotic_bound"] = n.asymptotic_bound;
  j["one_minus_6_over_pi2"] = n.one_minus_6_over_pi2;
  j["C1"] = optional_json(n.c1);
  j["C2"] = optional_json(n.c2);
  return j;
}

Json to_json(const RandomLatticeReport& r) {
  Json j;
  j["heuristic"] = r.heuristic;
  j["radius"] = r.radius;
  j["window"] = {{"s", Json::array({0.0, 1.0})}, {"t", Json::array({0.5, 1.5})}};
  Json hist = Json::object();
  for (const auto& [count, n] : r.histogram) hist[std::to_string(count)] = n;
  j["histogram"] = hist;
  Json samples = Json::array();
  for (const LatticeSampleResult& s : r.samples) {
    samples.push_back({{"tau", Json::array({s.tau_s, s.tau_t})},
                       {"extra", s.extra},
                       {"primitive", s.primitive},
                       {"nonreduced", s.nonreduced}});
  }
  j["samples"] = samples;
  return j;
}

Json to_json(const VolumeEstimate& v) {
  Json j;
  j["estimate"] = v.estimate;
  j["standard_error"] = v.standard_error;
  j["samples"] = v.samples;
  j["hits"] = v.hits;
  j["seed"] = v.seed;
  j["reference"] = v.reference;
  j["sampler"] = v.sampler;
  j["within_3_se"] = std::abs(v.estimate - v.reference) < 3.0 * v.standard_error;
  return j;
}

Json to_json(const SliceCheck& s) {
  Json j;
  j["u"] = Json::array({s.u.real(), s.u.imag()});
  j["trials"] = s.trials;
  j["skipped"] = s.skipped;
  j["mismatches"] = s.mismatches;
  Json ce = Json::array();
  for (const Complex& z : s.counterexamples) ce.push_back(Json::array({z.real(), z.imag()}));
  j["counterexamples"] = ce;
  j["area_estimate"] = s.area_estimate;
  j["area_standard_error"] = s.area_standard_error;
  j["area_reference"] = s.area_reference;
  j["passed"] = s.passed;
  return j;
}

Json to_json(const ImmersionReport& r) {
  Json j;
  j["intersections"] = r.intersections;
  j["regions"] = r.degenerate ? Json(nullptr) : Json(region_count(r));
  j["degenerate"] = r.degenerate;
  j["degenerate_reason"] = r.degenerate ? Json(r.degenerate_reason) : Json(nullptr);
  j["heuristic"] = r.heuristic;
  j["cells"] = {{"vertices", r.cells.vertices}, {"edges", r.cells.edges}, {"faces", r.cells.faces}};
  j["vertex_degrees"] = r.vertex_degrees;
  return j;
}

Json inspect_payload(const Tripod& t, const LatticeSpec& lattice) {
  const TripodFlags flags = classify(t, lattice);
  const VolumeIndex vol = tripod_volume_and_index(t, lattice);
  const ImmersionReport topo = self_intersections(t, lattice);

  Json j;
  j["coords"] = to_json(t.coords);
  j["index_n"] = t.index_n;
  j["intersections"] = topo.intersections;
  j["regions"] = topo.degenerate ? Json(nullptr) : Json(region_count(topo));
  j["degenerate"] = topo.degenerate;
  j["z"] = to_json(t.z);
  j["w"] = to_json(t.w);
  j["toricelli_point"] = to_json(t.u);
  j["fermat_point"] = to_json(t.p);
  j["length_sq"] = t.length_sq;
  j["length"] = t.length;
  j["leg_lengths"] = Json::array({t.leg_lengths[0], t.leg_lengths[1], t.leg_lengths[2]});
  j["volume"] = vol.volume;
  if (t.exact) {
    Json ex;
    ex["toricelli_point"] = to_json(t.exact->u);
    ex["fermat_point"] = to_json(t.exact->p);
    ex["length_sq"] = to_json(t.exact->length_sq);
    Json legs = Json::array();
    for (const QuadraticNumber& l : t.exact->leg_length_sq) legs.push_back(to_json(l));
    ex["leg_lengths_sq"] = legs;
    ex["volume"] = to_json(*vol.exact_volume);
    j["exact"] = ex;
  } else {
    j["exact"] = nullptr;
  }
  j["flags"] = {{"primitive", flags.primitive},
                {"reduced", optional_json(flags.reduced)},
                {"heuristic", flags.heuristic},
                {"degenerate_intersections", topo.degenerate}};
  j["topology"] = to_json(topo);
  return j;
}

std::string csv_row(const ConvergenceRow& row) {
  std::ostringstream s;
  const auto opt = [](const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string{};
  };
  s << format_double(row.radius) << ',' << row.all_tripods << ',' << row.primitive << ','
    << opt(row.reduced) << ',' << opt(row.nonreduced_primitive) << ','
    << format_double(row.primitive_over_R4) << ',' << format_double(row.error);
  return s.str();
}

std::string to_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const ConvergenceRow& row : rows) out += csv_row(row) + "\n";
  return out;
}

ConvergenceRow row_from_report(const CensusReport& r) {
  ConvergenceRow row;
  row.radius = r.config.radius;
  row.all_tripods = r.counts.all_tripods;
  row.primitive = r.counts.primitive;
  row.reduced = r.counts.reduced;
  row.nonreduced_primitive = r.counts.nonreduced_primitive;
  row.primitive_over_R4 = r.primitive_over_R4;
  row.all_over_R4 = static_cast<double>(r.counts.all_tripods) / std::pow(r.config.radius, 4);
  row.error = r.error;
  return row;
}

std::string convergence_svg(const std::vector<ConvergenceRow>& rows, double reference,
                            double covolume) {
  const double width = 640, height = 400, left = 80, right = 20, top = 20, bottom = 50;
  double r_max = 1.0, y_lo = reference, y_hi = reference;
  std::vector<std::pair<double, double>> pts;
  for (const ConvergenceRow& row : rows) {
    const double y = row.primitive_over_R4 * covolume * covolume;
    pts.emplace_back(row.radius, y);
    r_max = std::max(r_max, row.radius);
    y_lo = std::min(y_lo, y);
    y_hi = std::max(y_hi, y);
  }
  const double pad = std::max(0.05 * (y_hi - y_lo), 1e-3);
  y_lo -= pad;
  y_hi += pad;
  const auto sx = [&](double r) { return left + (width - left - right) * r / r_max; };
  const auto sy = [&](double y) {
    return top + (height - top - bottom) * (y_hi - y) / (y_hi - y_lo);
  };
  const auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };
  const auto label = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return std::string(buf);
  };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes
  s << "<line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\"" << width - right
    << "\" y2=\"" << height - bottom << "\" stroke=\"black\"/>\n";
  s << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
    << height - bottom << "\" stroke=\"black\"/>\n";
  s << "<text x=\"" << (left + width - right) / 2 << "\" y=\"" << height - 10
    << "\" text-anchor=\"middle\" font-size=\"14\">R</text>\n";
  s << "<text x=\"20\" y=\"" << (top + height - bottom) / 2
    << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 "
    << (top + height - bottom) / 2 << ")\">N(R) covol^2 / R^4</text>\n";
  for (int i = 0; i <= 4; ++i) {
    const double y = y_lo + (y_hi - y_lo) * i / 4.0;
    s << "<text x=\"" << left - 6 << "\" y=\"" << num(sy(y) + 4)
      << "\" text-anchor=\"end\" font-size=\"11\">" << label(y) << "</text>\n";
  }
  for (const auto& [r, y] : pts) {
    s << "<text x=\"" << num(sx(r)) << "\" y=\"" << height - bottom + 16
      << "\" text-anchor=\"middle\" font-size=\"11\">" << label(r) << "</text>\n";
  }
  s << "<line x1=\"" << left << "\" y1=\"" << num(sy(reference)) << "\" x2=\"" << width - right
    << "\" y2=\"" << num(sy(reference))
    << "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n";
  s << "<text x=\"" << width - right << "\" y=\"" << num(sy(reference) - 6)
    << "\" text-anchor=\"end\" font-size=\"11\" fill=\"gray\">15 sqrt3 / (4 pi^3) = "
    << label(reference) << "</text>\n";
  s << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    s << (i ? " " : "") << num(sx(pts[i].first)) << ',' << num(sy(pts[i].second));
  }
  s << "\"/>\n";
  for (const auto& [r, y] : pts) {
    s << "<circle cx=\"" << num(sx(r)) << "\" cy=\"" << num(sy(y))
      << "\" r=\"3\" fill=\"steelblue\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace tripods
