#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "test_support.hpp"
#include "twoatom/farfield.hpp"

using namespace twoatom;
using Catch::Matchers::WithinAbs;
using std::numbers::pi;

TEST_CASE("optical_phase", "[farfield]") {
  CHECK(optical_phase(DetectorGeometry(0.5, 20.0, 0.0)) == 0.0);
  CHECK_THAT(optical_phase(DetectorGeometry(1.0, 1.0, pi / 2)), WithinAbs(2 * pi, 1e-15));
  for (double theta : {0.1, 0.7, 1.3}) {
    const double plus = optical_phase(DetectorGeometry(0.8, 12.0, theta));
    const double minus = optical_phase(DetectorGeometry(0.8, 12.0, -theta));
    CHECK(plus == -minus);
  }
  CHECK_THROWS_AS(DetectorGeometry(0.0, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(DetectorGeometry(1.0, -1.0, 0.0), DomainError);
  CHECK(DetectorGeometry(1.0, 10.0, 0.0).in_far_separation_regime());
  CHECK_FALSE(DetectorGeometry(1.0, 9.0, 0.0).in_far_separation_regime());
}

TEST_CASE("g1 of the benchmark states", "[farfield]") {
  CHECK_THAT(g1(dicke_state(), 0.0), WithinAbs(2.0, 1e-15));
  CHECK_THAT(g1(dicke_state(), pi), WithinAbs(0.0, 1e-15));
  const auto excited = product_state(ProductStateParams(0.0));
  for (double d : {0.0, 0.4, 2.0, 5.5}) CHECK_THAT(g1(excited, d), WithinAbs(2.0, 1e-15));
  const auto ground = product_state(ProductStateParams(1.0));
  CHECK_THAT(g1(ground, 1.0), WithinAbs(0.0, 1e-15));
}

TEST_CASE("g1_terms reproduce the closed-form decompositions", "[farfield]") {
  const auto dicke = g1_terms(dicke_state());
  CHECK_THAT(dicke.constant_term, WithinAbs(1.0, 1e-15));
  CHECK(std::abs(dicke.interference_amplitude - 0.5) <= 1e-15);

  for (double p : {0.0, 0.3, 0.8, 1.0}) {
    const auto w = g1_terms(werner_state(WernerParam(p)));
    CHECK_THAT(w.constant_term, WithinAbs(1.0, 1e-15));
    CHECK(std::abs(w.interference_amplitude - p / 2) <= 1e-15);
    for (double d : {0.0, 1.0, 2.5}) CHECK_THAT(w.at(d), WithinAbs(1 + p * std::cos(d), 1e-15));
  }
  for (double a2 : {0.0, 0.25, 0.6, 1.0}) {
    const double b2 = 1 - a2;
    const auto t = g1_terms(product_state(ProductStateParams(a2)));
    CHECK_THAT(t.constant_term, WithinAbs(2 * b2, 1e-15));
    CHECK(std::abs(t.interference_amplitude - a2 * b2) <= 1e-15);
    for (double d : {0.0, 1.0, 2.5}) CHECK_THAT(t.at(d), WithinAbs(2 * b2 * (1 + a2 * std::cos(d)), 1e-15));
  }
}

TEST_CASE("visibility of the benchmark states", "[farfield]") {
  CHECK_THAT(visibility_analytic(dicke_state()), WithinAbs(1.0, 1e-15));
  for (double a2 : {0.0, 0.2, 0.5, 0.9, 0.999})
    CHECK_THAT(visibility_analytic(product_state(ProductStateParams(a2))), WithinAbs(a2, 1e-14));
  for (double p : {0.0, 0.2, 0.5, 1.0}) CHECK_THAT(visibility_analytic(werner_state(WernerParam(p))), WithinAbs(p, 1e-15));

  CHECK_THAT(visibility_numeric(dicke_state(), 1024), WithinAbs(1.0, 1e-9));
  CHECK_THAT(visibility_numeric(werner_state(WernerParam(0.5)), 1024), WithinAbs(0.5, 1e-9));
  CHECK_THAT(visibility_numeric(product_state(ProductStateParams(0.0)), 1024), WithinAbs(0.0, 1e-15));
}

TEST_CASE("zero-emission state has no visibility", "[farfield]") {
  const auto ground = product_state(ProductStateParams(1.0));
  CHECK_THROWS_AS(visibility_analytic(ground), ZeroEmissionError);
  CHECK_THROWS_AS(visibility_numeric(ground, 64), ZeroEmissionError);
  CHECK_THROWS_AS(visibility_numeric(dicke_state(), 8), DomainError);
}

TEST_CASE("dipole_expectation of the benchmark states", "[farfield]") {
  const auto d = dipole_expectation(dicke_state());
  CHECK(std::abs(d.coeff_eg) == 0.0);
  CHECK(std::abs(d.coeff_ge) == 0.0);
  for (double p : {0.0, 0.4, 1.0}) CHECK(dipole_expectation(werner_state(WernerParam(p))).magnitude() == 0.0);
  for (double a2 : {0.0, 0.1, 0.5, 0.8, 1.0}) {
    const auto dp = dipole_expectation(product_state(ProductStateParams(a2)));
    const double expected = 2 * std::sqrt(a2) * std::sqrt(1 - a2);
    CHECK_THAT(dp.coeff_eg.real(), WithinAbs(expected, 1e-15));
    CHECK(std::abs(dp.coeff_eg.imag()) <= 1e-15);
    CHECK(dp.coeff_ge == std::conj(dp.coeff_eg));
  }
}

TEST_CASE("dipole_expectation equals Tr(rho sum_l s+^(l))", "[farfield][property]") {
  const Matrix2 raising{0.0, 0.0, 1.0, 0.0};  // |e><g|
  const Matrix4 total = tensor_product(raising, Matrix2::identity()) + tensor_product(Matrix2::identity(), raising);
  testing::StateSampler sampler(0xfa01);
  for (int i = 0; i < 50; ++i) {
    const auto rho = sampler.any(i);
    const auto d = dipole_expectation(rho);
    CHECK(std::abs(d.coeff_eg - (rho.matrix() * total).trace()) <= 1e-14);
    CHECK(std::abs(d.coeff_ge - (rho.matrix() * total.adjoint()).trace()) <= 1e-14);
    CHECK(std::abs(d.coeff_ge - std::conj(d.coeff_eg)) <= 1e-14);
  }
}

TEST_CASE("only the relative phase between the atoms matters", "[farfield][property]") {
  // dropping the common factor e^{-i delta} from the field leaves G1 unchanged
  const Matrix2 lowering{0.0, 1.0, 0.0, 0.0};
  testing::StateSampler sampler(0xfa02);
  for (int i = 0; i < 20; ++i) {
    const auto rho = sampler.any(i);
    const double delta = sampler.uniform(-pi, 3 * pi);
    const Matrix4 shifted = tensor_product(lowering, Matrix2::identity()) +
                            std::polar(1.0, -delta) * tensor_product(Matrix2::identity(), lowering);
    const double reference = (rho.matrix() * shifted.adjoint() * shifted).trace().real();
    CHECK_THAT(g1(rho, delta), WithinAbs(reference, 1e-14));
  }
}

TEST_CASE("intensity invariants on random states", "[farfield][property]") {
  testing::StateSampler sampler(0xfa03);
  for (int i = 0; i < 100; ++i) {
    const auto rho = sampler.any(i);
    const auto terms = g1_terms(rho);
    for (int k = 0; k < 100; ++k) {
      const double delta = sampler.uniform(0.0, 2 * pi);
      const double value = g1(rho, delta);
      CHECK(value >= -1e-12);
      CHECK_THAT(value, WithinAbs(terms.at(delta), 1e-12));
    }
    const double v = visibility_analytic(rho);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0 + 1e-12);
    CHECK_THAT(visibility_numeric(rho, 4096), WithinAbs(v, 1e-9));

    // angular average by the trapezoid rule, exact for a first harmonic
    constexpr int n = 64;
    double mean = 0.0;
    for (int k = 0; k < n; ++k) mean += g1(rho, 2 * pi * k / n) / n;
    CHECK_THAT(mean, WithinAbs(terms.constant_term, 1e-9));
  }
}
