#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string_view>
#include <vector>

#include "twoatom/errors.hpp"
#include "twoatom/linalg.hpp"

namespace twoatom {

/// Two-atom basis labels; the first letter is atom 1 (qubit A).
enum class Basis : std::size_t { gg = 0, eg = 1, ge = 2, ee = 3 };

inline constexpr std::array<std::string_view, 4> kBasisLabels{"gg", "eg", "ge", "ee"};

inline constexpr double kTraceTolerance = 1e-12;

/// Every invariant violated by `m`, empty when `m` is a valid density matrix.
inline std::vector<StateDefect> state_defects(const Matrix4& m) {
  std::vector<StateDefect> defects;
  if (!m.all_finite()) {
    defects.push_back({DefectKind::non_finite, 0.0});
    return defects;
  }
  const double trace_dev = std::abs(m.trace() - 1.0);
  if (trace_dev > kTraceTolerance) defects.push_back({DefectKind::trace_deviation, trace_dev});

  const double herm = hermiticity_defect(m);
  if (herm > kHermiticityTolerance) defects.push_back({DefectKind::hermiticity_violation, herm});

  // negativity is judged on the Hermitian part
  const auto spectrum = hermitian_eig(Matrix4((m + m.adjoint()) * 0.5)).eigenvalues;
  const double min_eig = spectrum.back();
  if (min_eig < -kNegativeClamp) defects.push_back({DefectKind::negativity, min_eig});
  return defects;
}

/// A validated two-atom state: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  const Matrix4& matrix() const { return m_; }
  Complex operator()(Basis row, Basis col) const {
    return m_(static_cast<std::size_t>(row), static_cast<std::size_t>(col));
  }
  Complex operator()(std::size_t row, std::size_t col) const { return m_(row, col); }

  double purity() const { return (m_ * m_).trace().real(); }

  friend DensityMatrix validate(const Matrix4& m);

 private:
  explicit DensityMatrix(const Matrix4& m) : m_(m) {}
  Matrix4 m_;
};

/// Throws ValidationError listing every violated invariant.
inline DensityMatrix validate(const Matrix4& m) {
  auto defects = state_defects(m);
  if (!defects.empty()) throw ValidationError(std::move(defects));
  return DensityMatrix(m);
}

/// Ground-state population alpha^2 of each atom in the product state.
class ProductStateParams {
 public:
  explicit ProductStateParams(double alpha_sq) : alpha_sq_(alpha_sq) {
    if (!(alpha_sq >= 0.0 && alpha_sq <= 1.0))
      throw DomainError("alpha^2 must lie in [0, 1]");
  }
  double alpha_sq() const { return alpha_sq_; }
  double beta_sq() const { return 1.0 - alpha_sq_; }
  double alpha() const { return std::sqrt(alpha_sq_); }
  double beta() const { return std::sqrt(beta_sq()); }

 private:
  double alpha_sq_;
};

/// Weight p of the Dicke projector against white noise.
class WernerParam {
 public:
  explicit WernerParam(double p) : p_(p) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("Werner weight p must lie in [0, 1]");
  }
  double p() const { return p_; }

 private:
  double p_;
};

/// (|eg> + |ge>) / sqrt(2)
inline Ket<4> dicke_ket() {
  const double h = 1.0 / std::sqrt(2.0);
  return {0.0, h, h, 0.0};
}

inline DensityMatrix dicke_state() {
  Matrix4 m;
  for (auto r : {Basis::eg, Basis::ge})
    for (auto c : {Basis::eg, Basis::ge})
      m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = 0.5;
  return validate(m);
}

/// Both atoms in alpha|g> + beta|e> with real non-negative amplitudes.
inline DensityMatrix product_state(const ProductStateParams& params) {
  const Ket<2> atom{params.alpha(), params.beta()};
  return validate(Matrix4::outer(tensor_product(atom, atom)));
}

inline DensityMatrix werner_state(const WernerParam& param) {
  const double p = param.p();
  Matrix4 m = Matrix4::diagonal({(1 - p) / 4, (1 + p) / 4, (1 + p) / 4, (1 - p) / 4});
  m(1, 2) = p / 2;
  m(2, 1) = p / 2;
  return validate(m);
}

}  // namespace twoatom
