#pragma once

// Dense complex linear algebra for the 2x2 and 4x4 operators of a two-qubit
// system.
//
// Basis convention: a single qubit is ordered (g, e) = (0, 1). Two-qubit
// kets are ordered {gg, eg, ge, ee} where the first letter belongs to qubit A
// (atom 1). Qubit A is therefore the *low* bit of the flat index:
//
//     index(qA, qB) = qA + 2 * qB
//
// tensor_product(a, b) places `a` on qubit A and `b` on qubit B.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>

#include "twoatom/errors.hpp"

namespace twoatom {

using Complex = std::complex<double>;

template <std::size_t N>
using Ket = std::array<Complex, N>;

/// Fixed-size dense complex square matrix, row-major.
template <std::size_t N>
class SquareMatrix {
  static_assert(N == 2 || N == 4, "only single- and two-qubit operators are supported");

 public:
  static constexpr std::size_t dim = N;

  constexpr SquareMatrix() : data_{} {}

  /// Row-major entries, N*N of them.
  SquareMatrix(std::initializer_list<Complex> entries) : data_{} {
    if (entries.size() != N * N) throw DimensionError("SquareMatrix: wrong number of entries");
    std::copy(entries.begin(), entries.end(), data_.begin());
  }

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static SquareMatrix diagonal(const std::array<double, N>& d) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  /// |ket><ket|
  static SquareMatrix outer(const Ket<N>& ket) {
    SquareMatrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(r, c) = ket[r] * std::conj(ket[c]);
    return m;
  }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * N + c]; }

  const std::array<Complex, N * N>& entries() const { return data_; }

  SquareMatrix adjoint() const {
    SquareMatrix out;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) out(r, c) = std::conj((*this)(c, r));
    return out;
  }

  SquareMatrix conjugate() const {
    SquareMatrix out;
    for (std::size_t i = 0; i < N * N; ++i) out.data_[i] = std::conj(data_[i]);
    return out;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
  }

  bool all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
      return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data_[i] += o.data_[i];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data_[i] -= o.data_[i];
    return *this;
  }
  SquareMatrix& operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(SquareMatrix a, Complex s) { return a *= s; }
  friend SquareMatrix operator*(Complex s, SquareMatrix a) { return a *= s; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix out;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex ark = a(r, k);
        if (ark == Complex{}) continue;
        for (std::size_t c = 0; c < N; ++c) out(r, c) += ark * b(k, c);
      }
    return out;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::array<Complex, N * N> data_;
};

using Matrix2 = SquareMatrix<2>;
using Matrix4 = SquareMatrix<4>;

template <std::size_t N>
double max_abs_diff(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  return (a - b).max_abs();
}

/// max |M - M^dagger| entry-wise.
template <std::size_t N>
double hermiticity_defect(const SquareMatrix<N>& m) {
  return max_abs_diff(m, m.adjoint());
}

namespace pauli {
inline Matrix2 x() { return {0.0, 1.0, 1.0, 0.0}; }
inline Matrix2 y() { return {0.0, Complex{0, -1}, Complex{0, 1}, 0.0}; }
inline Matrix2 z() { return {1.0, 0.0, 0.0, -1.0}; }
}  // namespace pauli

/// Kronecker product with `a` on qubit A and `b` on qubit B.
inline Matrix4 tensor_product(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (std::size_t ra = 0; ra < 2; ++ra)
    for (std::size_t rb = 0; rb < 2; ++rb)
      for (std::size_t ca = 0; ca < 2; ++ca)
        for (std::size_t cb = 0; cb < 2; ++cb)
          out(ra + 2 * rb, ca + 2 * cb) = a(ra, ca) * b(rb, cb);
  return out;
}

inline Ket<4> tensor_product(const Ket<2>& a, const Ket<2>& b) {
  Ket<4> out{};
  for (std::size_t ia = 0; ia < 2; ++ia)
    for (std::size_t ib = 0; ib < 2; ++ib) out[ia + 2 * ib] = a[ia] * b[ib];
  return out;
}

enum class Subsystem { A, B };

/// Reduced operator on the kept qubit.
inline Matrix2 partial_trace(const Matrix4& rho, Subsystem keep) {
  Matrix2 out;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t k = 0; k < 2; ++k) {
        out(r, c) += keep == Subsystem::A ? rho(r + 2 * k, c + 2 * k) : rho(k + 2 * r, k + 2 * c);
      }
  return out;
}

/// Exchanges the two qubits (the permutation eg <-> ge).
inline Matrix4 swap_qubits(const Matrix4& rho) {
  constexpr std::array<std::size_t, 4> perm{0, 2, 1, 3};
  Matrix4 out;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out(r, c) = rho(perm[r], perm[c]);
  return out;
}

template <std::size_t N>
struct EigenDecomposition {
  std::array<double, N> eigenvalues;  // descending
  SquareMatrix<N> eigenvectors;       // column k belongs to eigenvalues[k]
  int sweeps = 0;

  SquareMatrix<N> reconstruct() const {
    return eigenvectors * SquareMatrix<N>::diagonal(eigenvalues) * eigenvectors.adjoint();
  }
};

inline constexpr double kHermiticityTolerance = 1e-10;
inline constexpr double kNegativeClamp = 1e-10;
inline constexpr double kJacobiThreshold = 1e-14;
inline constexpr int kJacobiMaxSweeps = 100;

/// Cyclic Jacobi diagonalisation of a Hermitian matrix.
///
/// Each rotation first removes the phase of the pivot a_pq = |a_pq| e^{i phi}
/// and then applies the real symmetric Jacobi rotation, so the diagonal stays
/// exactly real. Converges when the off-diagonal Frobenius norm drops below
/// kJacobiThreshold times the Frobenius norm of the input.
template <std::size_t N>
EigenDecomposition<N> hermitian_eig(const SquareMatrix<N>& m) {
  const double defect = hermiticity_defect(m);
  if (!(defect <= kHermiticityTolerance)) throw HermiticityError(defect);

  SquareMatrix<N> a = (m + m.adjoint()) * 0.5;
  SquareMatrix<N> v = SquareMatrix<N>::identity();

  auto off_norm = [&a] {
    double s = 0.0;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c)
        if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
  };
  double scale = 0.0;
  for (const auto& z : a.entries()) scale += std::norm(z);
  scale = std::sqrt(scale);

  int sweep = 0;
  for (; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_norm() <= kJacobiThreshold * scale) break;
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const Complex g = a(p, q);
        const double mag = std::abs(g);
        if (mag == 0.0) continue;
        const Complex phase = g / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // R restricted to (p, q): [[c, s], [-s conj(phase), c conj(phase)]]
        const Complex rqp = -s * std::conj(phase);
        const Complex rqq = c * std::conj(phase);
        for (std::size_t k = 0; k < N; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * c + akq * rqp;
          a(k, q) = akp * s + akq * rqq;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * c + vkq * rqp;
          v(k, q) = vkp * s + vkq * rqq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk + std::conj(rqp) * aqk;
          a(q, k) = s * apk + std::conj(rqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
      }
    }
  }
  if (off_norm() > kJacobiThreshold * scale)
    throw ConvergenceError("hermitian_eig: Jacobi iteration did not converge", off_norm(), sweep);

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&a](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  EigenDecomposition<N> out;
  out.sweeps = sweep;
  for (std::size_t k = 0; k < N; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < N; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  return out;
}

/// Eigenvalues of a Hermitian PSD matrix with rounding noise in
/// [-kNegativeClamp, 0) set to zero.
template <std::size_t N>
std::array<double, N> clamp_psd_spectrum(std::array<double, N> values) {
  for (auto& x : values) {
    if (x < -kNegativeClamp) throw NotPsdError(x);
    if (x < 0.0) x = 0.0;
  }
  return values;
}

template <std::size_t N>
SquareMatrix<N> matrix_sqrt_psd(const SquareMatrix<N>& m) {
  auto eig = hermitian_eig(m);
  auto values = clamp_psd_spectrum(eig.eigenvalues);
  for (auto& x : values) x = std::sqrt(x);
  return eig.eigenvectors * SquareMatrix<N>::diagonal(values) * eig.eigenvectors.adjoint();
}

}  // namespace twoatom
