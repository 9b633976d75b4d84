#pragma once

// Command-line front end. `run` is the whole program minus process plumbing
// so that tests can drive it in-process.
//
//   state      construct, validate and print a density matrix
//   intensity  G1 over a range of detector phases
//   coherence  visibility, dipole, entropies, discord and concurrence
//   curve      product | werner parameter sweeps
//
// Exit codes: 0 success, 2 usage error, 3 validation or numerical error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twoatom/coherence.hpp"
#include "twoatom/errors.hpp"
#include "twoatom/farfield.hpp"
#include "twoatom/output.hpp"
#include "twoatom/qstate.hpp"
#include "twoatom/scenarios.hpp"
#include "twoatom/state_io.hpp"

namespace twoatom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

class UsageError : public Error {
 public:
  using Error::Error;
};

namespace detail {

struct StateOptions {
  std::string kind;
  double alpha2 = -1.0;
  double p = -1.0;
  std::string file;
};

struct Options {
  StateOptions state;
  std::string format = "csv";
  std::string output;
  std::size_t points = 101;
  double delta_min = 0.0;
  double delta_max = 2.0 * std::numbers::pi;
  std::string measured = "a";
};

inline void add_state_flags(CLI::App* cmd, StateOptions& s) {
  cmd->add_option("--state", s.kind, "dicke | product | werner | file")
      ->check(CLI::IsMember({"dicke", "product", "werner", "file"}));
  cmd->add_option("--alpha2", s.alpha2, "ground-state population of each atom (product state)")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--p", s.p, "weight of the Dicke projector (Werner state)")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--file", s.file, "JSON density-matrix file");
}

inline void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", o.output, "output path (default: standard output)");
}

inline DensityMatrix build_state(const StateOptions& s, nlohmann::ordered_json& params) {
  std::string kind = s.kind;
  if (kind.empty()) kind = s.file.empty() ? "" : "file";
  if (kind.empty()) throw UsageError("--state is required");
  params["state"] = kind;
  if (kind == "dicke") return dicke_state();
  if (kind == "product") {
    if (s.alpha2 < 0.0) throw UsageError("--state product needs --alpha2");
    params["alpha2"] = s.alpha2;
    return product_state(ProductStateParams(s.alpha2));
  }
  if (kind == "werner") {
    if (s.p < 0.0) throw UsageError("--state werner needs --p");
    params["p"] = s.p;
    return werner_state(WernerParam(s.p));
  }
  if (s.file.empty()) throw UsageError("--state file needs --file");
  params["file"] = s.file;
  return read_state_file(s.file);
}

inline OutputRecord state_record(const DensityMatrix& rho) {
  OutputRecord rec;
  rec.columns = {"row"};
  for (auto label : kBasisLabels) {
    rec.columns.push_back(std::string(label) + "_re");
    rec.columns.push_back(std::string(label) + "_im");
  }
  for (std::size_t r = 0; r < 4; ++r) {
    std::vector<Metric> row{static_cast<double>(r)};
    for (std::size_t c = 0; c < 4; ++c) {
      row.push_back(rho(r, c).real());
      row.push_back(rho(r, c).imag());
    }
    rec.rows.push_back(std::move(row));
  }
  return rec;
}

inline OutputRecord coherence_record(const DensityMatrix& rho, Subsystem measured) {
  OptimizerConfig cfg;
  cfg.measured = measured;
  const auto discord = quantum_discord(rho, cfg);
  const auto conc = concurrence(rho);
  const Matrix4& m = rho.matrix();

  OutputRecord rec;
  rec.columns = {"purity",      "entropy", "entropy_a", "entropy_b",  "mutual_information",
                 "classical_correlations", "discord",   "concurrence", "eof",
                 "visibility",  "dipole",  "theta_b",   "phi_b"};
  rec.rows.push_back({rho.purity(), von_neumann_entropy(m), von_neumann_entropy(partial_trace(m, Subsystem::A)),
                      von_neumann_entropy(partial_trace(m, Subsystem::B)), discord.mutual_information,
                      discord.classical_correlations, discord.discord, conc.concurrence, conc.eof,
                      visibility_or_null(rho), dipole_expectation(rho).magnitude(),
                      discord.optimal_direction.theta, discord.optimal_direction.phi});
  return rec;
}

inline void emit(const OutputRecord& rec, const Options& o, std::ostream& out) {
  std::ostringstream doc;
  if (o.format == "json")
    write_json(doc, rec);
  else
    write_csv(doc, rec);
  if (o.output.empty()) {
    out << doc.str();
    return;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) throw UsageError("cannot open output file: " + o.output);
  file << doc.str();
}

}  // namespace detail

/// Runs the tool on `args` (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Far-field interference and coherence of two two-level atoms", "twoatom"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  auto* state_cmd = app.add_subcommand("state", "construct, validate and print a density matrix");
  detail::add_state_flags(state_cmd, o.state);
  detail::add_output_flags(state_cmd, o);

  auto* intensity_cmd = app.add_subcommand("intensity", "scan G1 over detector phase");
  detail::add_state_flags(intensity_cmd, o.state);
  detail::add_output_flags(intensity_cmd, o);
  intensity_cmd->add_option("--points", o.points, "number of samples")->check(CLI::Range(2, 10000000));
  intensity_cmd->add_option("--delta-min", o.delta_min, "first phase (radians)");
  intensity_cmd->add_option("--delta-max", o.delta_max, "last phase (radians)");

  auto* coherence_cmd = app.add_subcommand("coherence", "classical and quantum coherence of one state");
  detail::add_state_flags(coherence_cmd, o.state);
  detail::add_output_flags(coherence_cmd, o);
  coherence_cmd->add_option("--measured", o.measured, "qubit measured for the discord: a | b")
      ->check(CLI::IsMember({"a", "b"}));

  auto* curve_cmd = app.add_subcommand("curve", "parameter sweeps");
  curve_cmd->require_subcommand(1);
  auto* product_cmd = curve_cmd->add_subcommand("product", "sweep alpha^2 of the product state");
  auto* werner_cmd = curve_cmd->add_subcommand("werner", "sweep p of the Werner state");
  for (auto* cmd : {product_cmd, werner_cmd}) {
    detail::add_output_flags(cmd, o);
    cmd->add_option("--points", o.points, "grid points over [0, 1]")->check(CLI::Range(2, 1000000));
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  OutputRecord rec;
  try {
    if (state_cmd->parsed()) {
      auto rho = detail::build_state(o.state, rec.params);
      OutputRecord body = detail::state_record(rho);
      rec.columns = body.columns;
      rec.rows = body.rows;
      rec.command = "state";
    } else if (intensity_cmd->parsed()) {
      auto rho = detail::build_state(o.state, rec.params);
      if (!(o.delta_min < o.delta_max)) throw UsageError("--delta-min must be below --delta-max");
      rec.params["points"] = o.points;
      rec.params["delta_min"] = o.delta_min;
      rec.params["delta_max"] = o.delta_max;
      set_payload(rec, intensity_scan(rho, o.delta_min, o.delta_max, o.points));
      rec.command = "intensity";
    } else if (coherence_cmd->parsed()) {
      auto rho = detail::build_state(o.state, rec.params);
      rec.params["measured"] = o.measured;
      OutputRecord body = detail::coherence_record(rho, o.measured == "b" ? Subsystem::B : Subsystem::A);
      rec.columns = body.columns;
      rec.rows = body.rows;
      rec.command = "coherence";
    } else if (product_cmd->parsed()) {
      rec.command = "curve product";
      rec.params["points"] = o.points;
      const auto grid = unit_grid(o.points);
      set_payload(rec, product_curve(grid));
    } else {
      rec.command = "curve werner";
      rec.params["points"] = o.points;
      const auto grid = werner_grid(o.points);
      set_payload(rec, werner_curve(grid));
    }
    detail::emit(rec, o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const StateFileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace twoatom::cli
