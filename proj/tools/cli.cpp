#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "tripods/analytics.hpp"
#include "tripods/census.hpp"
#include "tripods/constants.hpp"
#include "tripods/report.hpp"
#include "tripods/topology.hpp"

namespace tripods::cli {

namespace {

struct Options {
  std::string lattice = "gaussian";
  double radius = 0.0;
  std::string mode;
  bool reduced = false;
  int threads = default_thread_count();
  std::string format = "json";
  std::string out_file;
  std::optional<std::size_t> emit_samples;
  bool timing = false;
  std::vector<std::int64_t> coords;
  std::vector<double> radii;
  std::string plot;
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  bool slices = false;
  std::vector<std::int64_t> basis;
  std::vector<std::string> taus;
};

Canonicalization parse_mode(const std::string& mode, const LatticeSpec& lattice) {
  if (mode == "lemma") return Canonicalization::lemma;
  if (mode == "appendix") return Canonicalization::appendix;
  // convergence defaults to the appendix lift on Z[i] so its last row lines
  // up with the published comparison value
  return lattice.mode == LatticeMode::gaussian ? Canonicalization::appendix
                                               : Canonicalization::lemma;
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_file);
  if (!f) throw std::runtime_error("cannot open " + o.out_file);
  f << text;
}

void emit_json(const Options& o, std::ostream& out, const Json& envelope) {
  emit(o, out, dump_json(envelope) + "\n");
}

int cmd_census(const Options& o, std::ostream& out) {
  CensusConfig config;
  config.lattice = parse_lattice(o.lattice);
  config.radius = o.radius;
  config.mode = o.mode == "appendix" ? Canonicalization::appendix : Canonicalization::lemma;
  config.classify_reduced = o.reduced;
  config.threads = o.threads;
  config.emit_samples = o.emit_samples;
  const CensusReport report = census(config);
  if (o.format == "csv") {
    emit(o, out, to_csv({row_from_report(report)}));
  } else {
    emit_json(o, out, make_envelope("census", config.lattice.name(), to_json(report, o.timing)));
  }
  return ok;
}

int cmd_inspect(const Options& o, std::ostream& out) {
  const LatticeSpec lattice = parse_lattice(o.lattice);
  const Quadruple q{o.coords[0], o.coords[1], o.coords[2], o.coords[3]};
  const Tripod t = make_tripod(q, lattice);
  emit_json(o, out, make_envelope("inspect", lattice.name(), inspect_payload(t, lattice)));
  return ok;
}

int cmd_convergence(const Options& o, std::ostream& out) {
  const LatticeSpec lattice = parse_lattice(o.lattice);
  const Canonicalization mode = parse_mode(o.mode, lattice);
  const auto rows = convergence_scan(lattice, o.radii, mode, o.reduced, o.threads);
  if (!o.plot.empty()) {
    std::ofstream f(o.plot);
    if (!f) throw std::runtime_error("cannot open " + o.plot);
    f << convergence_svg(rows, constants::main_constant, lattice.covolume());
  }
  if (o.format == "csv") {
    emit(o, out, to_csv(rows));
    return ok;
  }
  Json payload;
  payload["mode"] = mode == Canonicalization::lemma ? "lemma" : "appendix";
  payload["reference_constant"] = constants::main_constant;
  payload["covolume"] = lattice.covolume();
  Json table = Json::array();
  for (const ConvergenceRow& row : rows) table.push_back(to_json(row));
  payload["rows"] = table;
  emit_json(o, out, make_envelope("convergence", lattice.name(), payload));
  return ok;
}

int cmd_volume(const Options& o, std::ostream& out) {
  Json payload = to_json(mc_omega_volume(o.samples, o.seed, o.threads));
  if (o.slices) {
    Json checks = Json::array();
    for (const Complex u : {Complex{1.0, 0.0}, std::polar(0.5, constants::pi / 4),
                            std::polar(0.9, constants::pi / 2)}) {
      checks.push_back(to_json(slice_property_check(u, 10000, o.seed)));
    }
    payload["slices"] = checks;
    const EquivarianceCheck eq = equivariance_check(10000, o.seed);
    payload["equivariance"] = {
        {"trials", eq.trials}, {"skipped", eq.skipped}, {"mismatches", eq.mismatches}};
    const JacobianCheck jac = jacobian_check(1000, o.seed);
    payload["jacobian"] = {{"points", jac.points}, {"max_deviation", jac.max_deviation}};
  }
  emit_json(o, out, make_envelope("volume", "none", payload, o.seed));
  return ok;
}

int cmd_nonreduced(const Options& o, std::ostream& out) {
  const LatticeSpec lattice = parse_lattice(o.lattice);
  const NonreducedCensus n = nonreduced_census(lattice, o.radius, o.threads);
  emit_json(o, out, make_envelope("nonreduced", lattice.name(), to_json(n)));
  return ok;
}

int cmd_fiber(const Options& o, std::ostream& out) {
  const LatticeSpec lattice = parse_lattice(o.lattice);
  const LatticeVector v1{o.basis[0], o.basis[1]}, v2{o.basis[2], o.basis[3]};
  const Canonicalization mode =
      o.mode == "appendix" ? Canonicalization::appendix : Canonicalization::lemma;
  const std::vector<Tripod> fiber = fiber_tripods(v1, v2, lattice, mode);
  Json payload;
  payload["basis"] = Json::array({v1.a, v1.b, v2.a, v2.b});
  payload["index_n"] = std::llabs(v1.a * v2.b - v1.b * v2.a);
  payload["mode"] = mode == Canonicalization::lemma ? "lemma" : "appendix";
  payload["shortest_vector"] = shortest_vector_length(v1, v2, lattice);
  payload["count"] = fiber.size();
  Json list = Json::array();
  for (const Tripod& t : fiber) {
    const TripodFlags flags = classify(t, lattice);
    list.push_back({{"coords", to_json(t.coords)},
                    {"length_sq", t.length_sq},
                    {"length", t.length},
                    {"primitive", flags.primitive},
                    {"reduced", flags.reduced ? Json(*flags.reduced) : Json(nullptr)}});
  }
  payload["tripods"] = list;
  emit_json(o, out, make_envelope("fiber", lattice.name(), payload));
  return ok;
}

int cmd_random_lattice(const Options& o, std::ostream& out) {
  std::vector<std::pair<double, double>> extra;
  for (const std::string& text : o.taus) {
    const LatticeSpec l = parse_lattice("tau=" + text);
    extra.emplace_back(l.tau_s, l.tau_t);
  }
  const RandomLatticeReport r =
      random_lattice_experiment(o.samples, o.radius, o.seed, extra, o.threads);
  emit_json(o, out, make_envelope("random-lattice", "random", to_json(r), o.seed));
  return ok;
}

int cmd_constants(const Options& o, std::ostream& out) {
  Json payload;
  for (const auto& [name, value] : reference_constants()) payload[name] = value;
  emit_json(o, out, make_envelope("constants", "none", payload));
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tripod census and verification tool", "tripods"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Options o;

  const auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "worker threads (default TRIPOD_THREADS)")
        ->check(CLI::PositiveNumber);
  };
  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", o.out_file, "write the report to FILE");
  };
  const std::vector<std::string> modes{"lemma", "appendix"};

  CLI::App* census_cmd = app.add_subcommand("census", "count tripods with length < R");
  census_cmd->add_option("--lattice", o.lattice)->capture_default_str();
  census_cmd->add_option("--radius", o.radius)->required()->check(CLI::PositiveNumber);
  census_cmd->add_option("--mode", o.mode)->check(CLI::IsMember(modes));
  census_cmd->add_flag("--reduced", o.reduced, "classify reducedness");
  add_threads(census_cmd);
  census_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  census_cmd->add_option("--emit-samples", o.emit_samples, "keep up to N per-tripod records");
  census_cmd->add_flag("--timing", o.timing, "include elapsed_ms in the report");
  add_out(census_cmd);

  CLI::App* inspect_cmd = app.add_subcommand("inspect", "describe one tripod");
  inspect_cmd->add_option("--lattice", o.lattice)->capture_default_str();
  inspect_cmd->add_option("--coords", o.coords, "a,b,c,d")
      ->required()
      ->delimiter(',')
      ->expected(4);
  add_out(inspect_cmd);

  CLI::App* conv_cmd = app.add_subcommand("convergence", "census over several radii");
  conv_cmd->add_option("--lattice", o.lattice)->capture_default_str();
  conv_cmd->add_option("--radii", o.radii)->required()->delimiter(',');
  conv_cmd->add_option("--mode", o.mode, "default: appendix on gaussian, else lemma")
      ->check(CLI::IsMember(modes));
  conv_cmd->add_flag("--reduced", o.reduced);
  add_threads(conv_cmd);
  conv_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  conv_cmd->add_option("--plot", o.plot, "write an SVG plot");
  add_out(conv_cmd);

  CLI::App* volume_cmd = app.add_subcommand("volume", "Monte Carlo volume of the tripod region");
  o.samples = 1000000;
  volume_cmd->add_option("--samples", o.samples)->capture_default_str();
  volume_cmd->add_option("--seed", o.seed)->capture_default_str();
  volume_cmd->add_flag("--slices", o.slices, "also run the slice, equivariance and Jacobian checks");
  add_threads(volume_cmd);
  add_out(volume_cmd);

  CLI::App* nonred_cmd = app.add_subcommand("nonreduced", "count nonreduced primitive tripods");
  nonred_cmd->add_option("--radius", o.radius)->required()->check(CLI::PositiveNumber);
  add_threads(nonred_cmd);
  add_out(nonred_cmd);

  CLI::App* fiber_cmd = app.add_subcommand("fiber", "tripods spanning a given sublattice");
  fiber_cmd->add_option("--basis", o.basis, "a1,b1,a2,b2")->required()->delimiter(',')->expected(4);
  fiber_cmd->add_option("--mode", o.mode)->check(CLI::IsMember(modes));
  add_out(fiber_cmd);

  CLI::App* random_cmd =
      app.add_subcommand("random-lattice", "heuristic nonreduced counts on random lattices");
  random_cmd->add_option("--radius", o.radius, "census radius (default 10)");
  random_cmd->add_option("--seed", o.seed)->capture_default_str();
  random_cmd->add_option("--tau", o.taus, "extra s,t lattice (repeatable)");
  add_threads(random_cmd);
  add_out(random_cmd);

  CLI::App* const_cmd = app.add_subcommand("constants", "closed-form reference constants");
  add_out(const_cmd);

  // defaults that differ per subcommand are applied after parsing
  nonred_cmd->add_option("--lattice", o.lattice, "default eisenstein");
  fiber_cmd->add_option("--lattice", o.lattice)->capture_default_str();
  random_cmd->add_option("--samples", o.samples, "number of random lattices (default 50)");

  std::vector<std::string> storage{"tripods"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (*census_cmd) return cmd_census(o, out);
    if (*inspect_cmd) return cmd_inspect(o, out);
    if (*conv_cmd) return cmd_convergence(o, out);
    if (*volume_cmd) return cmd_volume(o, out);
    if (*nonred_cmd) {
      if (nonred_cmd->count("--lattice") == 0) o.lattice = "eisenstein";
      return cmd_nonreduced(o, out);
    }
    if (*fiber_cmd) return cmd_fiber(o, out);
    if (*random_cmd) {
      if (random_cmd->count("--samples") == 0) o.samples = 50;
      if (random_cmd->count("--radius") == 0) o.radius = 10;
      return cmd_random_lattice(o, out);
    }
    if (*const_cmd) return cmd_constants(o, out);
  } catch (const InvalidTripod& e) {
    err << "invalid tripod (" << e.predicate() << "): " << e.what() << "\n";
    return invalid_tripod;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << "\n";
    return overflow;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return failure;
  }
  return usage;
}

}  // namespace tripods::cli
