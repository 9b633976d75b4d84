#pragma once

// Parameter sweeps over the three benchmark configurations: the symmetric
// Dicke state, the synchronised product state and the Werner mixture.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twoatom/coherence.hpp"
#include "twoatom/errors.hpp"
#include "twoatom/farfield.hpp"
#include "twoatom/qstate.hpp"

namespace twoatom {

/// A missing value (std::nullopt) marks a metric that is undefined for that
/// row, e.g. the visibility of a state that does not radiate.
using Metric = std::optional<double>;

struct CurveRow {
  double parameter;
  std::vector<Metric> metrics;
};

/// Rows of (parameter, metrics), parameters strictly increasing, every row
/// carrying one value per metric name.
class CurveTable {
 public:
  CurveTable(std::string parameter_name, std::vector<std::string> metric_names)
      : parameter_name_(std::move(parameter_name)), metric_names_(std::move(metric_names)) {}

  void add_row(double parameter, std::vector<Metric> metrics) {
    if (metrics.size() != metric_names_.size()) throw DimensionError("CurveTable: metric count mismatch");
    if (!rows_.empty() && !(parameter > rows_.back().parameter))
      throw DomainError("CurveTable: parameters must be strictly increasing");
    rows_.push_back({parameter, std::move(metrics)});
  }

  const std::string& parameter_name() const { return parameter_name_; }
  const std::vector<std::string>& metric_names() const { return metric_names_; }
  const std::vector<CurveRow>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  std::size_t column(const std::string& name) const {
    const auto it = std::find(metric_names_.begin(), metric_names_.end(), name);
    if (it == metric_names_.end()) throw DomainError("CurveTable: unknown metric " + name);
    return static_cast<std::size_t>(it - metric_names_.begin());
  }
  Metric value(std::size_t row, const std::string& name) const { return rows_.at(row).metrics[column(name)]; }

 private:
  std::string parameter_name_;
  std::vector<std::string> metric_names_;
  std::vector<CurveRow> rows_;
};

/// n uniform points over [0, 1] with exact endpoints.
inline std::vector<double> unit_grid(std::size_t n) {
  if (n < 2) throw DomainError("grid needs at least two points");
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = static_cast<double>(i) / static_cast<double>(n - 1);
  return g;
}

inline constexpr double kWernerThreshold = 1.0 / 3.0;

/// unit_grid(n) with the entanglement threshold p = 1/3 inserted in order,
/// unless a grid point already sits on it.
inline std::vector<double> werner_grid(std::size_t n) {
  auto g = unit_grid(n);
  const bool present = std::any_of(g.begin(), g.end(), [](double p) { return std::abs(p - kWernerThreshold) < 1e-15; });
  if (!present) g.insert(std::upper_bound(g.begin(), g.end(), kWernerThreshold), kWernerThreshold);
  return g;
}

/// Closed-form discord of the Werner state, in bits.
inline double werner_discord_closed_form(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("Werner weight p must lie in [0, 1]");
  // x log2 x with 0 log 0 = 0 handles the p = 1 endpoint
  auto xlog = [](double x) { return x > 0.0 ? x * std::log2(x) : 0.0; };
  return xlog(1 - p) / 4 - xlog(1 + p) / 2 + xlog(1 + 3 * p) / 4;
}

/// Visibility, or nullopt for a state that does not radiate.
inline Metric visibility_or_null(const DensityMatrix& rho) {
  try {
    return visibility_analytic(rho);
  } catch (const ZeroEmissionError&) {
    return std::nullopt;
  }
}

inline CurveTable product_curve(std::span<const double> alpha_sq_grid, const OptimizerConfig& cfg = {}) {
  CurveTable table("alpha2", {"visibility", "dipole", "concurrence", "discord"});
  for (double a2 : alpha_sq_grid) {
    const auto rho = product_state(ProductStateParams(a2));
    table.add_row(a2, {visibility_or_null(rho), dipole_expectation(rho).coeff_eg.real(),
                       concurrence(rho).concurrence, quantum_discord(rho, cfg).discord});
  }
  return table;
}

inline CurveTable werner_curve(std::span<const double> p_grid, const OptimizerConfig& cfg = {}) {
  CurveTable table("p", {"visibility", "concurrence", "discord", "discord_closed_form", "dipole"});
  for (double p : p_grid) {
    const auto rho = werner_state(WernerParam(p));
    table.add_row(p, {visibility_or_null(rho), concurrence(rho).concurrence, quantum_discord(rho, cfg).discord,
                      werner_discord_closed_form(p), dipole_expectation(rho).coeff_eg.real()});
  }
  return table;
}

/// n uniform samples of G1 over [delta_min, delta_max], both ends included.
inline CurveTable intensity_scan(const DensityMatrix& rho, double delta_min, double delta_max, std::size_t n) {
  if (n < 2) throw DomainError("intensity_scan needs at least two samples");
  if (!(delta_min < delta_max)) throw DomainError("intensity_scan needs delta_min < delta_max");
  CurveTable table("delta", {"intensity"});
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n - 1);
    const double delta = i + 1 == n ? delta_max : delta_min + t * (delta_max - delta_min);
    table.add_row(delta, {g1(rho, delta)});
  }
  return table;
}

}  // namespace twoatom
