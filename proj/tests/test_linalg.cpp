#include <catch_amalgamated.hpp>

#include "test_support.hpp"
#include "twoatom/linalg.hpp"
#include "twoatom/qstate.hpp"

using namespace twoatom;
using Catch::Matchers::WithinAbs;

namespace {

template <std::size_t N>
double orthonormality_defect(const SquareMatrix<N>& v) {
  return max_abs_diff(v.adjoint() * v, SquareMatrix<N>::identity());
}

const Matrix2 ket_e_bra_e{0.0, 0.0, 0.0, 1.0};
const Matrix2 ket_g_bra_g{1.0, 0.0, 0.0, 0.0};

}  // namespace

TEST_CASE("tensor_product of identities is the identity", "[linalg]") {
  CHECK(tensor_product(Matrix2::identity(), Matrix2::identity()) == Matrix4::identity());
}

TEST_CASE("sigma_y (x) sigma_y has the -1,+1,+1,-1 anti-diagonal", "[linalg]") {
  const Matrix4 yy = tensor_product(pauli::y(), pauli::y());
  Matrix4 expected;
  expected(0, 3) = -1.0;
  expected(1, 2) = 1.0;
  expected(2, 1) = 1.0;
  expected(3, 0) = -1.0;
  CHECK(max_abs_diff(yy, expected) == 0.0);
}

TEST_CASE("tensor_product fixes the {gg, eg, ge, ee} ordering", "[linalg]") {
  CHECK(tensor_product(ket_e_bra_e, ket_g_bra_g) == Matrix4::diagonal({0, 1, 0, 0}));
  CHECK(tensor_product(ket_g_bra_g, ket_e_bra_e) == Matrix4::diagonal({0, 0, 1, 0}));
}

TEST_CASE("hermitian_eig on the benchmark states", "[linalg][eig]") {
  SECTION("Dicke projector is rank one") {
    const auto eig = hermitian_eig(dicke_state().matrix());
    const std::array<double, 4> expected{1, 0, 0, 0};
    for (std::size_t i = 0; i < 4; ++i) CHECK_THAT(eig.eigenvalues[i], WithinAbs(expected[i], 1e-15));
  }
  SECTION("maximally mixed state") {
    const auto eig = hermitian_eig(Matrix4::identity() * 0.25);
    for (double x : eig.eigenvalues) CHECK_THAT(x, WithinAbs(0.25, 1e-16));
  }
  SECTION("Werner state at p = 1/3") {
    // central block [[1/3, 1/6], [1/6, 1/3]] has eigenvalues 1/2 and 1/6
    const auto eig = hermitian_eig(werner_state(WernerParam(1.0 / 3.0)).matrix());
    const std::array<double, 4> expected{0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6};
    for (std::size_t i = 0; i < 4; ++i) CHECK_THAT(eig.eigenvalues[i], WithinAbs(expected[i], 1e-15));
  }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input with the defect norm", "[linalg][eig]") {
  Matrix4 m = Matrix4::identity();
  m(0, 1) = 1e-3;
  try {
    (void)hermitian_eig(m);
    FAIL("expected HermiticityError");
  } catch (const HermiticityError& e) {
    CHECK_THAT(e.defect(), WithinAbs(1e-3, 1e-18));
  }
  m(0, 1) = 1e-12;  // below the tolerance
  CHECK_NOTHROW(hermitian_eig(m));
}

TEST_CASE("hermitian_eig reconstructs random Hermitian matrices", "[linalg][eig][property]") {
  testing::StateSampler sampler(0x5eed01);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix4 m = sampler.hermitian<4>();
    const auto eig = hermitian_eig(m);
    CHECK(max_abs_diff(eig.reconstruct(), m) <= 1e-12);
    CHECK(orthonormality_defect(eig.eigenvectors) <= 1e-12);
    CHECK(std::is_sorted(eig.eigenvalues.rbegin(), eig.eigenvalues.rend()));
    CHECK(eig.sweeps <= kJacobiMaxSweeps);
  }
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix2 m = sampler.hermitian<2>();
    const auto eig = hermitian_eig(m);
    const auto closed = testing::eigenvalues2(m);
    CHECK_THAT(eig.eigenvalues[0], WithinAbs(closed[0], 1e-12));
    CHECK_THAT(eig.eigenvalues[1], WithinAbs(closed[1], 1e-12));
    CHECK(max_abs_diff(eig.reconstruct(), m) <= 1e-12);
  }
}

TEST_CASE("hermitian_eig handles degenerate and already diagonal input", "[linalg][eig]") {
  const auto diag = hermitian_eig(Matrix4::diagonal({0.1, 0.4, 0.2, 0.3}));
  CHECK(diag.eigenvalues == std::array<double, 4>{0.4, 0.3, 0.2, 0.1});
  CHECK(diag.sweeps == 0);

  const Matrix4 zero;
  CHECK(hermitian_eig(zero).eigenvalues == std::array<double, 4>{0, 0, 0, 0});
}

TEST_CASE("matrix_sqrt_psd", "[linalg][sqrt]") {
  CHECK(max_abs_diff(matrix_sqrt_psd(Matrix4::identity()), Matrix4::identity()) <= 1e-15);
  CHECK(max_abs_diff(matrix_sqrt_psd(Matrix4::diagonal({4, 1, 0, 0})), Matrix4::diagonal({2, 1, 0, 0})) <= 1e-15);

  const Matrix4 dicke = dicke_state().matrix();
  CHECK(max_abs_diff(matrix_sqrt_psd(dicke), dicke) <= 1e-15);

  SECTION("clamps rounding noise but rejects real negativity") {
    CHECK(matrix_sqrt_psd(Matrix2::diagonal({1.0, -1e-11}))(1, 1) == Complex{0.0});
    CHECK_THROWS_AS(matrix_sqrt_psd(Matrix2::diagonal({1.0, -1e-9})), NotPsdError);
  }

  SECTION("squares back on random X^dagger X") {
    testing::StateSampler sampler(0x5eed02);
    for (int trial = 0; trial < 100; ++trial) {
      const Matrix4 x = sampler.ginibre<4>();
      const Matrix4 psd = x.adjoint() * x;
      const Matrix4 root = matrix_sqrt_psd(psd);
      CHECK(max_abs_diff(root * root, psd) <= 1e-10);
      CHECK(hermiticity_defect(root) <= 1e-12);
      CHECK(hermitian_eig(root).eigenvalues.back() >= -1e-12);
    }
  }
}

TEST_CASE("partial_trace on the benchmark states", "[linalg][ptrace]") {
  const Matrix2 half = Matrix2::identity() * 0.5;
  CHECK(max_abs_diff(partial_trace(dicke_state().matrix(), Subsystem::B), half) <= 1e-15);
  CHECK(max_abs_diff(partial_trace(product_state(ProductStateParams(1.0)).matrix(), Subsystem::A),
                     ket_g_bra_g) <= 1e-15);
  for (double p : {0.0, 0.2, 1.0 / 3, 0.75, 1.0}) {
    const Matrix4 w = werner_state(WernerParam(p)).matrix();
    CHECK(max_abs_diff(partial_trace(w, Subsystem::A), half) <= 1e-15);
    CHECK(max_abs_diff(partial_trace(w, Subsystem::B), half) <= 1e-15);
  }
}

TEST_CASE("partial_trace is linear, trace preserving and inverts tensor_product", "[linalg][ptrace][property]") {
  testing::StateSampler sampler(0x5eed03);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix4 m = sampler.ginibre<4>();
    const Matrix4 n = sampler.ginibre<4>();
    const Complex s = sampler.gaussian();
    for (auto keep : {Subsystem::A, Subsystem::B}) {
      CHECK(std::abs(partial_trace(m, keep).trace() - m.trace()) <= 1e-12);
      CHECK(max_abs_diff(partial_trace(m + s * n, keep), partial_trace(m, keep) + s * partial_trace(n, keep)) <=
            1e-12);
    }
    const Matrix4 h = sampler.hermitian<4>();
    CHECK(hermiticity_defect(partial_trace(h, Subsystem::A)) <= 1e-12);

    const Matrix2 a = sampler.ginibre<2>();
    const Matrix2 b = sampler.ginibre<2>();
    const Matrix4 ab = tensor_product(a, b);
    CHECK(max_abs_diff(partial_trace(ab, Subsystem::A), a * b.trace()) <= 1e-12);
    CHECK(max_abs_diff(partial_trace(ab, Subsystem::B), b * a.trace()) <= 1e-12);
  }
}

TEST_CASE("swap_qubits exchanges the tensor factors", "[linalg]") {
  testing::StateSampler sampler(0x5eed04);
  const Matrix2 a = sampler.ginibre<2>();
  const Matrix2 b = sampler.ginibre<2>();
  CHECK(max_abs_diff(swap_qubits(tensor_product(a, b)), tensor_product(b, a)) <= 1e-15);
}
