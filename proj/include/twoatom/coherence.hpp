#pragma once

// Quantum-coherence measures of a two-qubit state: von Neumann entropies,
// mutual information, classical correlations J(B|A), quantum discord,
// concurrence and entanglement of formation. All entropies are in bits.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>

#include "twoatom/errors.hpp"
#include "twoatom/linalg.hpp"
#include "twoatom/qstate.hpp"

namespace twoatom {

/// -x log2 x with the continuous extension 0 log 0 = 0.
inline double entropy_term(double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; }

template <std::size_t N>
double von_neumann_entropy(const SquareMatrix<N>& state) {
  const auto values = clamp_psd_spectrum(hermitian_eig(state).eigenvalues);
  double s = 0.0;
  for (double x : values) s += entropy_term(x);
  return s;
}

inline double von_neumann_entropy(const DensityMatrix& rho) { return von_neumann_entropy(rho.matrix()); }

inline double binary_entropy(double x) {
  constexpr double slack = 1e-12;
  if (!(x >= -slack && x <= 1.0 + slack)) throw DomainError("binary_entropy: argument outside [0, 1]");
  x = std::clamp(x, 0.0, 1.0);
  return entropy_term(x) + entropy_term(1.0 - x);
}

/// S(A) + S(B) - S(AB)
inline double mutual_information(const DensityMatrix& rho) {
  const Matrix4& m = rho.matrix();
  return von_neumann_entropy(partial_trace(m, Subsystem::A)) +
         von_neumann_entropy(partial_trace(m, Subsystem::B)) - von_neumann_entropy(m);
}

// ---------------------------------------------------------------------------
// Measurements

enum class Outcome { plus, minus };

/// Bloch direction n(theta, phi) of a rank-1 projective qubit measurement
/// {E+, E-} with E+- = (I +- n.sigma) / 2.
///
/// The Bloch sphere uses the atomic convention: the north pole (theta = 0) is
/// |e>, i.e. sigma_z = |e><e| - |g><g| and sigma_x = s+ + s-. Angles are
/// stored as given; every real pair is a valid direction.
struct MeasurementDirection {
  double theta = 0.0;
  double phi = 0.0;

  std::array<double, 3> bloch_vector() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
  }

  Matrix2 projector(Outcome outcome) const {
    const auto n = bloch_vector();
    const double sign = outcome == Outcome::plus ? 1.0 : -1.0;
    // pauli:: matrices are laid out in (g, e) order, so y and z flip sign
    const Matrix2 n_sigma = n[0] * pauli::x() - n[1] * pauli::y() - n[2] * pauli::z();
    Matrix2 out = Matrix2::identity() + sign * n_sigma;
    return out * 0.5;
  }

  /// Same measurement with theta in [0, pi] and phi in [0, 2 pi).
  MeasurementDirection canonical() const {
    const auto n = bloch_vector();
    MeasurementDirection out;
    out.theta = std::acos(std::clamp(n[2], -1.0, 1.0));
    double ph = std::atan2(n[1], n[0]);
    if (ph < 0.0) ph += 2.0 * std::numbers::pi;
    if (ph >= 2.0 * std::numbers::pi) ph = 0.0;
    out.phi = ph;
    return out;
  }
};

inline constexpr double kNegligibleProbability = 1e-14;

struct ConditionalState {
  double probability = 0.0;
  std::optional<Matrix2> state;  // empty when the outcome is (numerically) impossible
};

/// Outcome probability and post-measurement state of qubit B after measuring
/// E_outcome (x) I on qubit A.
inline ConditionalState conditional_state(const DensityMatrix& rho, const MeasurementDirection& dir,
                                          Outcome outcome) {
  const Matrix4 measured = tensor_product(dir.projector(outcome), Matrix2::identity()) * rho.matrix();
  const Matrix2 unnormalised = partial_trace(measured, Subsystem::B);
  ConditionalState out;
  out.probability = unnormalised.trace().real();
  if (out.probability >= kNegligibleProbability) {
    Matrix2 s = unnormalised * (1.0 / out.probability);
    out.state = (s + s.adjoint()) * 0.5;  // Hermitian up to rounding
  }
  return out;
}

/// S(B) - sum_a p_a S(rho_{B|a}) for one measurement direction on A.
inline double measured_information(const DensityMatrix& rho, const MeasurementDirection& dir,
                                   double entropy_b) {
  double conditional = 0.0;
  for (auto outcome : {Outcome::plus, Outcome::minus}) {
    const auto cs = conditional_state(rho, dir, outcome);
    if (cs.state) conditional += cs.probability * von_neumann_entropy(*cs.state);
  }
  return entropy_b - conditional;
}

struct OptimizerConfig {
  int grid_theta = 32;
  int grid_phi = 64;
  double tolerance = 1e-10;      // simplex value spread at convergence
  double size_tolerance = 1e-7;  // simplex diameter in radians at convergence
  int max_iterations = 500;
  Subsystem measured = Subsystem::A;
};

struct ClassicalCorrelationResult {
  double value = 0.0;
  MeasurementDirection direction;
  int iterations = 0;
};

namespace detail {

struct SimplexResult {
  std::array<double, 2> point;
  double value;
  int iterations;
  bool converged;
};

/// Nelder-Mead maximisation in two variables. Stops once the spread of the
/// simplex values is at most `tolerance` and the simplex diameter is at most
/// `size_tolerance`.
template <class F>
SimplexResult nelder_mead_max(F&& f, std::array<double, 2> start, std::array<double, 2> step,
                              double tolerance, double size_tolerance, int max_iterations) {
  using Point = std::array<double, 2>;
  std::array<Point, 3> x{start, Point{start[0] + step[0], start[1]}, Point{start[0], start[1] + step[1]}};
  std::array<double, 3> fx{f(x[0]), f(x[1]), f(x[2])};

  auto order = [&] {
    // descending by value; stable so the earlier vertex wins ties
    std::array<std::size_t, 3> idx{0, 1, 2};
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return fx[a] > fx[b]; });
    std::array<Point, 3> xs{x[idx[0]], x[idx[1]], x[idx[2]]};
    std::array<double, 3> fs{fx[idx[0]], fx[idx[1]], fx[idx[2]]};
    x = xs;
    fx = fs;
  };
  auto lerp = [](const Point& a, const Point& b, double t) {
    return Point{a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
  };

  auto shrink = [&] {
    for (std::size_t k = 1; k < 3; ++k) {
      x[k] = lerp(x[0], x[k], 0.5);
      fx[k] = f(x[k]);
    }
  };

  auto diameter = [&] {
    double d = 0.0;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b)
        d = std::max(d, std::hypot(x[a][0] - x[b][0], x[a][1] - x[b][1]));
    return d;
  };

  int it = 0;
  order();
  while (fx[0] - fx[2] > tolerance || diameter() > size_tolerance) {
    if (it >= max_iterations) return {x[0], fx[0], it, false};
    ++it;
    const Point centroid{(x[0][0] + x[1][0]) / 2, (x[0][1] + x[1][1]) / 2};
    const Point reflected = lerp(centroid, x[2], -1.0);
    const double fr = f(reflected);
    if (fr > fx[0]) {
      const Point expanded = lerp(centroid, x[2], -2.0);
      const double fe = f(expanded);
      if (fe > fr) {
        x[2] = expanded;
        fx[2] = fe;
      } else {
        x[2] = reflected;
        fx[2] = fr;
      }
    } else if (fr > fx[1]) {
      x[2] = reflected;
      fx[2] = fr;
    } else if (fr > fx[2]) {
      const Point contracted = lerp(centroid, reflected, 0.5);
      const double fc = f(contracted);
      if (fc >= fr) {
        x[2] = contracted;
        fx[2] = fc;
      } else {
        shrink();
      }
    } else {
      const Point contracted = lerp(centroid, x[2], 0.5);
      const double fc = f(contracted);
      if (fc > fx[2]) {
        x[2] = contracted;
        fx[2] = fc;
      } else {
        shrink();
      }
    }
    order();
  }
  return {x[0], fx[0], it, true};
}

}  // namespace detail

/// J(B|A): maximum over projective measurements on the measured qubit of the
/// information gained about the other one.
///
/// A (grid_theta x grid_phi) scan over theta in [0, pi], phi in [0, 2 pi)
/// seeds a Nelder-Mead refinement. Grid ties go to the smallest (theta, phi).
inline ClassicalCorrelationResult classical_correlations(const DensityMatrix& rho,
                                                         const OptimizerConfig& cfg = {}) {
  if (cfg.measured == Subsystem::B) {
    OptimizerConfig swapped = cfg;
    swapped.measured = Subsystem::A;
    return classical_correlations(validate(swap_qubits(rho.matrix())), swapped);
  }
  if (cfg.grid_theta < 2 || cfg.grid_phi < 1) throw DomainError("optimizer grid too small");

  const double entropy_b = von_neumann_entropy(partial_trace(rho.matrix(), Subsystem::B));
  auto objective = [&](const std::array<double, 2>& v) {
    return measured_information(rho, MeasurementDirection{v[0], v[1]}, entropy_b);
  };

  const double dtheta = std::numbers::pi / (cfg.grid_theta - 1);
  const double dphi = 2.0 * std::numbers::pi / cfg.grid_phi;
  std::array<double, 2> best{0.0, 0.0};
  double best_value = objective(best);
  for (int i = 0; i < cfg.grid_theta; ++i)
    for (int j = 0; j < cfg.grid_phi; ++j) {
      const std::array<double, 2> v{i * dtheta, j * dphi};
      const double value = objective(v);
      if (value > best_value) {
        best_value = value;
        best = v;
      }
    }

  const auto refined = detail::nelder_mead_max(objective, best, {dtheta, dphi}, cfg.tolerance,
                                                cfg.size_tolerance, cfg.max_iterations);
  if (!refined.converged)
    throw ConvergenceError("classical_correlations: simplex refinement hit the iteration cap", refined.value,
                           refined.iterations);

  ClassicalCorrelationResult out;
  out.value = std::max(refined.value, best_value);
  out.direction = MeasurementDirection{refined.point[0], refined.point[1]}.canonical();
  out.iterations = refined.iterations;
  return out;
}

struct DiscordResult {
  double discord = 0.0;
  double mutual_information = 0.0;
  double classical_correlations = 0.0;
  MeasurementDirection optimal_direction;
  int optimizer_iterations = 0;
};

/// D(B|A) = I(A:B) - J(B|A), or D(A|B) when cfg.measured is B.
inline DiscordResult quantum_discord(const DensityMatrix& rho, const OptimizerConfig& cfg = {}) {
  const auto j = classical_correlations(rho, cfg);
  DiscordResult out;
  out.mutual_information = mutual_information(rho);
  out.classical_correlations = j.value;
  out.discord = out.mutual_information - j.value;
  out.optimal_direction = j.direction;
  out.optimizer_iterations = j.iterations;
  return out;
}

// ---------------------------------------------------------------------------
// Entanglement

/// (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y)
inline Matrix4 spin_flip(const Matrix4& rho) {
  const Matrix4 yy = tensor_product(pauli::y(), pauli::y());
  return yy * rho.conjugate() * yy;
}

inline Matrix4 spin_flip(const DensityMatrix& rho) { return spin_flip(rho.matrix()); }

/// h((1 + sqrt(1 - c^2)) / 2)
inline double entanglement_of_formation(double concurrence) {
  const double c = std::clamp(concurrence, 0.0, 1.0);
  return binary_entropy((1.0 + std::sqrt(1.0 - c * c)) / 2.0);
}

struct ConcurrenceResult {
  double concurrence = 0.0;
  std::array<double, 4> sqrt_eigenvalues{};  // sqrt of the spectrum of rho * rho~, descending
  double eof = 0.0;
};

/// Eigenvalues of a unit-trace PSD operator at or below this are rounding
/// noise and are set to zero before square roots are taken.
inline constexpr double kSpectralNoiseFloor = 1e-15;

/// Wootters concurrence.
///
/// The spectrum of rho * rho~ equals that of the Hermitian PSD matrix
/// sqrt(rho) rho~ sqrt(rho). It is evaluated in the eigenbasis of rho,
/// diag(sqrt(mu)) V^dagger rho~ V diag(sqrt(mu)), so null directions of rho
/// give exactly zero rows and columns.
inline ConcurrenceResult concurrence(const DensityMatrix& rho) {
  auto snap = [](std::array<double, 4> values) {
    values = clamp_psd_spectrum(values);
    for (auto& x : values) x = x <= kSpectralNoiseFloor ? 0.0 : std::sqrt(x);
    return values;
  };
  const auto eig = hermitian_eig(rho.matrix());
  const Matrix4 scale = Matrix4::diagonal(snap(eig.eigenvalues));
  const Matrix4 inner = scale * eig.eigenvectors.adjoint() * spin_flip(rho) * eig.eigenvectors * scale;

  ConcurrenceResult out;
  out.sqrt_eigenvalues = snap(hermitian_eig(Matrix4((inner + inner.adjoint()) * 0.5)).eigenvalues);
  const auto& s = out.sqrt_eigenvalues;
  out.concurrence = std::max(0.0, s[0] - s[1] - s[2] - s[3]);
  out.eof = entanglement_of_formation(out.concurrence);
  return out;
}

}  // namespace twoatom
