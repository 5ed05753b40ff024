// Copyright 2026 The SOI Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "soi/fidelity.hpp"
#include "soi/purification.hpp"
#include "test_util.hpp"

namespace soi {
namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

RotatedState random_state(std::size_t n, std::mt19937_64& rng) {
  const auto chart = UnitaryFamily::unitary(n);
  return RotatedState(testing::random_spectrum(n, rng), chart, testing::random_xi(chart, rng));
}

TEST(Fidelity, RotatedStateInvariants) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const RotatedState r = random_state(3, rng);
    const Eigen::MatrixXcd rho = r.density_matrix();
    EXPECT_LT(max_abs(rho - rho.adjoint()), 1e-12);
    EXPECT_NEAR(std::abs(rho.trace() - 1.0), 0.0, 1e-12);
    EXPECT_GT(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(rho).eigenvalues().minCoeff(),
              -1e-12);
    EXPECT_LT(max_abs(r.sqrt_density() * r.sqrt_density() - rho), 1e-12);
  }
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(2, 2);
  bad(0, 1) = 1.0;
  EXPECT_THROW(RotatedState(Spectrum{0.5, 0.5}, bad), std::invalid_argument);
}

TEST(Fidelity, PurifyRotated) {
  std::mt19937_64 rng(2);
  const auto env = UnitaryFamily::unitary(2);
  for (int t = 0; t < 100; ++t) {
    const RotatedState r = random_state(2, rng);
    const StateVector v = purify_rotated(r, env, testing::random_xi(env, rng));
    EXPECT_NEAR(v.norm(), 1.0, 1e-12);
    EXPECT_LT(max_abs(partial_trace_environment(v, 2) - r.density_matrix()), 1e-12);
  }
  const Spectrum s{0.8, 0.2};
  const auto xi = testing::random_xi(env, rng);
  EXPECT_LT((purify_rotated(RotatedState(s), env, xi) - purify(s, env, xi).state).norm(),
            1e-14);
}

TEST(Fidelity, ClosedFormExamples) {
  std::mt19937_64 rng(3);
  const RotatedState a = random_state(3, rng);
  EXPECT_NEAR(fidelity_closed(a, a), 1.0, 1e-12);

  Eigen::MatrixXcd flip(2, 2);
  flip << 0, 1, -1, 0;
  EXPECT_NEAR(fidelity_closed(RotatedState(Spectrum{1.0, 0.0}),
                              RotatedState(Spectrum{1.0, 0.0}, flip)),
              0.0, 1e-15);

  // Commuting pair reduces to the classical fidelity (sum sqrt(p q))^2.
  const double classical = std::pow(std::sqrt(0.7 * 0.4) + std::sqrt(0.3 * 0.6), 2);
  EXPECT_NEAR(fidelity_closed(RotatedState(Spectrum{0.7, 0.3}),
                              RotatedState(Spectrum{0.4, 0.6})),
              classical, 1e-14);
  EXPECT_NEAR(classical, 0.908998886412873, 1e-14);
  EXPECT_THROW(fidelity_closed(RotatedState(Spectrum{0.5, 0.5}),
                               RotatedState(Spectrum::maximally_mixed(3))),
               std::invalid_argument);
}

TEST(Fidelity, SymmetricAndCovariant) {
  std::mt19937_64 rng(4);
  const auto chart = UnitaryFamily::unitary(3);
  for (int t = 0; t < 50; ++t) {
    const Eigen::MatrixXcd rho = random_state(3, rng).density_matrix();
    const Eigen::MatrixXcd sigma = random_state(3, rng).density_matrix();
    const Eigen::MatrixXcd u = chart.realize(testing::random_xi(chart, rng));
    const double f = fidelity_closed(rho, sigma);
    EXPECT_NEAR(f, fidelity_closed(sigma, rho), 1e-12);
    EXPECT_NEAR(f, fidelity_closed(u * rho * u.adjoint(), u * sigma * u.adjoint()), 1e-12);
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0 + 1e-12);
  }
}

TEST(Fidelity, PsdSqrt) {
  Eigen::MatrixXcd m(2, 2);
  m << 2, 0, 0, -1e-13;
  EXPECT_NEAR(std::abs(psd_sqrt(m)(0, 0) - std::sqrt(2.0)), 0.0, 1e-15);
  m(1, 1) = -1e-6;
  EXPECT_THROW(psd_sqrt(m), std::invalid_argument);
}

TEST(Fidelity, IdenticalStatesReachOne) {
  std::mt19937_64 rng(5);
  const RotatedState r = random_state(2, rng);
  const auto env = UnitaryFamily::unitary(2);
  const auto xi = testing::random_xi(env, rng);
  EXPECT_NEAR(purification_overlap(r, r, env, xi, xi), 1.0, 1e-12);
  FidelitySearchOptions opt;
  opt.seed = 3;
  EXPECT_NEAR(fidelity_soi_maximize(r, r, opt).value, 1.0, 1e-9);
}

TEST(Fidelity, SoiMatchesClosedForm) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 50; ++t) {
    const RotatedState rho = random_state(2, rng);
    const RotatedState sigma = random_state(2, rng);
    FidelitySearchOptions opt;
    opt.seed = static_cast<std::uint64_t>(t);
    const double closed = fidelity_closed(rho, sigma);
    const auto r = fidelity_soi_maximize(rho, sigma, opt);
    EXPECT_LE(r.value, closed + 1e-9);
    EXPECT_GE(r.value, closed - 1e-3);
    EXPECT_NEAR(purification_overlap(rho, sigma, UnitaryFamily::unitary(2), r.xi_rho,
                                     r.xi_sigma),
                r.value, 1e-14);
  }
}

TEST(Fidelity, OneSidedSearchIsEquivalent) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    const RotatedState rho = random_state(2, rng);
    const RotatedState sigma = random_state(2, rng);
    FidelitySearchOptions both;
    both.seed = 1;
    FidelitySearchOptions one = both;
    one.freeze_rho = true;
    const auto a = fidelity_soi_maximize(rho, sigma, both);
    const auto b = fidelity_soi_maximize(rho, sigma, one);
    EXPECT_NEAR(a.value, b.value, 1e-6);
    for (double x : b.xi_rho) EXPECT_EQ(x, 0.0);
  }
}

TEST(Fidelity, RealChartUndershoots) {
  // sigma rotated by a complex phase relative to rho.
  const double h = std::sqrt(0.5);
  Eigen::MatrixXcd u(2, 2);
  u << h, std::complex<double>(0, h), std::complex<double>(0, h), h;
  const RotatedState rho(Spectrum{0.9, 0.1});
  const RotatedState sigma(Spectrum{0.8, 0.2}, u);
  FidelitySearchOptions opt;
  opt.seed = 2;
  opt.environment = UnitaryFamily::special_orthogonal(2);
  const double closed = fidelity_closed(rho, sigma);
  EXPECT_LT(fidelity_soi_maximize(rho, sigma, opt).value, closed - 1e-3);
  opt.environment.reset();
  EXPECT_NEAR(fidelity_soi_maximize(rho, sigma, opt).value, closed, 1e-3);
}

TEST(Fidelity, SearchIsThreadIndependent) {
  std::mt19937_64 rng(8);
  const RotatedState rho = random_state(2, rng);
  const RotatedState sigma = random_state(2, rng);
  FidelitySearchOptions a;
  a.seed = 4;
  a.workers = 1;
  FidelitySearchOptions b = a;
  b.workers = 3;
  const auto ra = fidelity_soi_maximize(rho, sigma, a);
  const auto rb = fidelity_soi_maximize(rho, sigma, b);
  EXPECT_EQ(ra.value, rb.value);
  EXPECT_EQ(ra.best_start, rb.best_start);
  EXPECT_EQ(ra.xi_sigma, rb.xi_sigma);
}

}  // namespace
}  // namespace soi
