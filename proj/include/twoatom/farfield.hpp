#pragma once

// Far-field intensity of two identical two-level emitters.
//
// Intensities are expressed in units where one fully excited atom contributes
// 1 at every angle. Atom l carries the phase e^{-i l delta} in the positive-
// frequency field, so only the relative phase delta = k d sin(theta) enters.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "twoatom/errors.hpp"
#include "twoatom/linalg.hpp"
#include "twoatom/qstate.hpp"

namespace twoatom {

class DetectorGeometry {
 public:
  /// Wavelength and atom separation in the same length unit, angle in radians
  /// measured from the normal of the atom axis.
  DetectorGeometry(double wavelength, double separation, double angle)
      : wavelength_(wavelength), separation_(separation), angle_(angle) {
    if (!(wavelength > 0.0)) throw DomainError("wavelength must be positive");
    if (!(separation > 0.0)) throw DomainError("atom separation must be positive");
    if (!std::isfinite(angle)) throw DomainError("observation angle must be finite");
  }

  double wavelength() const { return wavelength_; }
  double separation() const { return separation_; }
  double angle() const { return angle_; }
  double wavenumber() const { return 2.0 * std::numbers::pi / wavelength_; }

  /// Dipole-dipole coupling is negligible only for d >> lambda; below ten
  /// wavelengths the free-emitter model is questionable.
  bool in_far_separation_regime() const { return separation_ >= 10.0 * wavelength_; }

 private:
  double wavelength_;
  double separation_;
  double angle_;
};

inline double optical_phase(const DetectorGeometry& g) {
  return g.wavenumber() * g.separation() * std::sin(g.angle());
}

/// G1(delta) = constant_term + 2 Re[interference_amplitude e^{-i delta}]
struct IntensityPattern {
  double constant_term = 0.0;
  Complex interference_amplitude{};  // <s+^(1) s-^(2)> = <ge|rho|eg>
  std::vector<std::pair<double, double>> samples;

  double at(double delta) const {
    return constant_term +
           2.0 * (interference_amplitude * std::polar(1.0, -delta)).real();
  }
};

namespace detail {
inline Matrix2 lowering() { return {0.0, 1.0, 0.0, 0.0}; }  // |g><e|

/// E(+)(delta) = sum_l e^{-i l delta} s-^(l)
inline Matrix4 positive_field(double delta) {
  const Matrix2 id = Matrix2::identity();
  return std::polar(1.0, -delta) * tensor_product(lowering(), id) +
         std::polar(1.0, -2.0 * delta) * tensor_product(id, lowering());
}
}  // namespace detail

/// <E(-) E(+)> evaluated as an operator expectation value.
inline double g1(const DensityMatrix& rho, double delta) {
  const Matrix4 e_plus = detail::positive_field(delta);
  return (rho.matrix() * e_plus.adjoint() * e_plus).trace().real();
}

/// Constant and interference terms read off the matrix entries.
inline IntensityPattern g1_terms(const DensityMatrix& rho) {
  IntensityPattern out;
  out.constant_term =
      (rho(Basis::eg, Basis::eg) + rho(Basis::ge, Basis::ge) + 2.0 * rho(Basis::ee, Basis::ee)).real();
  out.interference_amplitude = rho(Basis::ge, Basis::eg);
  return out;
}

inline constexpr double kZeroEmission = 1e-15;

/// 2 |interference_amplitude| / constant_term
inline double visibility_analytic(const DensityMatrix& rho) {
  const auto terms = g1_terms(rho);
  if (terms.constant_term <= kZeroEmission) throw ZeroEmissionError(terms.constant_term);
  return 2.0 * std::abs(terms.interference_amplitude) / terms.constant_term;
}

/// (max - min) / (max + min) of G1 sampled at n uniform phases in [0, 2 pi)
/// plus the two phases where the cosine modulation peaks.
inline double visibility_numeric(const DensityMatrix& rho, int n) {
  if (n < 16) throw DomainError("visibility_numeric needs at least 16 samples");
  const auto terms = g1_terms(rho);
  if (terms.constant_term <= kZeroEmission) throw ZeroEmissionError(terms.constant_term);

  std::vector<double> phases;
  phases.reserve(static_cast<std::size_t>(n) + 2);
  for (int i = 0; i < n; ++i) phases.push_back(2.0 * std::numbers::pi * i / n);
  const double peak = std::arg(terms.interference_amplitude);
  phases.push_back(peak);
  phases.push_back(peak + std::numbers::pi);

  double lo = g1(rho, phases.front());
  double hi = lo;
  for (double d : phases) {
    const double v = g1(rho, d);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return (hi - lo) / (hi + lo);
}

/// <D> = coeff_eg d_eg + coeff_ge d_ge. The dipole matrix element itself is
/// left symbolic.
struct DipoleExpectation {
  Complex coeff_eg{};
  Complex coeff_ge{};

  /// |coeff_eg|; equals the real coefficient D_P for real-amplitude states.
  double magnitude() const { return std::abs(coeff_eg); }
};

inline DipoleExpectation dipole_expectation(const DensityMatrix& rho) {
  using enum Basis;
  DipoleExpectation out;
  out.coeff_eg = rho(gg, eg) + rho(ge, ee) + rho(gg, ge) + rho(eg, ee);
  out.coeff_ge = rho(eg, gg) + rho(ee, ge) + rho(ge, gg) + rho(ee, eg);
  return out;
}

}  // namespace twoatom
