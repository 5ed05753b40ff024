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

#include "soi/errors.hpp"
#include "soi/purification.hpp"
#include "test_util.hpp"

namespace soi {
namespace {

Eigen::MatrixXcd diag_of(const Spectrum& s) {
  Eigen::VectorXcd d(static_cast<Eigen::Index>(s.dim()));
  for (std::size_t i = 0; i < s.dim(); ++i) d(static_cast<Eigen::Index>(i)) = s[i];
  return d.asDiagonal();
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

TEST(Purification, BellState) {
  const StateVector b2 = bell_state(2);
  ASSERT_EQ(b2.size(), 4);
  EXPECT_EQ(b2(0), 1.0);
  EXPECT_EQ(b2(1), 0.0);
  EXPECT_EQ(b2(2), 0.0);
  EXPECT_EQ(b2(3), 1.0);
  EXPECT_DOUBLE_EQ(bell_state(3).squaredNorm(), 3.0);
  const Eigen::MatrixXcd r = partial_trace_environment(bell_state(2) / std::sqrt(2.0), 2);
  EXPECT_LT(max_abs(r - 0.5 * Eigen::MatrixXcd::Identity(2, 2)), 1e-15);
}

TEST(Purification, CanonicalAtOrigin) {
  const Spectrum s{0.7, 0.3};
  const auto p = purify(s, UnitaryFamily::su2(), std::vector<double>{0, 0, 0});
  EXPECT_NEAR(std::abs(p.state(0) - std::sqrt(0.7)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(p.state(3) - std::sqrt(0.3)), 0.0, 1e-15);
  EXPECT_LT(max_abs(partial_trace_environment(p.state, 2) - diag_of(s)), 1e-15);
}

TEST(Purification, PureSpectrumGivesProductState) {
  std::mt19937_64 rng(1);
  const auto f = UnitaryFamily::su2();
  for (int t = 0; t < 20; ++t) {
    const auto p = purify(Spectrum{1.0, 0.0}, f, testing::random_xi(f, rng));
    EXPECT_NEAR(p.state.norm(), 1.0, 1e-14);
    // Reduced environment state is pure: rank one.
    Eigen::MatrixXcd a(2, 2);
    for (int e = 0; e < 2; ++e)
      for (int s = 0; s < 2; ++s) a(e, s) = p.state(e * 2 + s);
    const Eigen::MatrixXcd env = a * a.adjoint();
    EXPECT_NEAR(std::abs((env * env).trace() - 1.0), 0.0, 1e-14);
  }
}

TEST(Purification, PartialTraceInvariance) {
  std::mt19937_64 rng(2);
  const std::vector<UnitaryFamily> families = {UnitaryFamily::su2(),
                                               UnitaryFamily::special_orthogonal(3),
                                               UnitaryFamily::special_orthogonal(4)};
  for (int t = 0; t < 1000; ++t) {
    const auto& f = families[static_cast<std::size_t>(t) % 3];
    const Spectrum s = testing::random_spectrum(f.dim(), rng);
    const auto p = purify(s, f, testing::random_xi(f, rng));
    EXPECT_NEAR(p.state.norm(), 1.0, 1e-12);
    EXPECT_LT(max_abs(partial_trace_environment(p.state, f.dim()) - diag_of(s)), 1e-12);
  }
}

TEST(Purification, Embedding) {
  std::mt19937_64 rng(3);
  const auto f = UnitaryFamily::su2();
  const Spectrum s{0.6, 0.4};
  const auto p = purify(s, f, testing::random_xi(f, rng));
  EXPECT_LT((embed_environment(p, 2) - p.state).norm(), 1e-15);
  const StateVector big = embed_environment(p, 3);
  ASSERT_EQ(big.size(), 6);
  EXPECT_NEAR(big.norm(), 1.0, 1e-14);
  EXPECT_EQ(big(4), 0.0);
  EXPECT_EQ(big(5), 0.0);
  EXPECT_LT(max_abs(partial_trace_environment(big, 2) - diag_of(s)), 1e-14);
  EXPECT_THROW(embed_environment(p, 1), std::invalid_argument);
}

TEST(Purification, TangentFrameMatchesFiniteDifferences) {
  std::mt19937_64 rng(4);
  const double h = 1e-6;
  for (const auto& f : {UnitaryFamily::su2(), UnitaryFamily::special_orthogonal(3),
                        UnitaryFamily::unitary(3)}) {
    const Spectrum s = testing::random_spectrum(f.dim(), rng);
    const auto xi = testing::interior_xi(f, rng);
    const auto frame = tangent_frame(s, f, xi);
    ASSERT_EQ(frame.size(), f.parameter_count());
    for (std::size_t k = 0; k < frame.size(); ++k) {
      auto up = xi, dn = xi;
      up[k] += h;
      dn[k] -= h;
      const StateVector fd = (purify(s, f, up).state - purify(s, f, dn).state) / (2 * h);
      EXPECT_LT((frame[k] - fd).cwiseAbs().maxCoeff(), 1e-8) << f.name() << " k=" << k;
    }
  }
}

TEST(Purification, GramMatchesTraceContraction) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto f = t % 2 ? UnitaryFamily::unitary(3) : UnitaryFamily::special_orthogonal(4);
    const Spectrum s = testing::random_spectrum(f.dim(), rng);
    const auto xi = testing::random_xi(f, rng);
    const GramMetric m = gram_metric(s, f, xi);
    const Eigen::MatrixXcd rho = diag_of(s);
    const std::size_t n = f.parameter_count();
    std::vector<Eigen::MatrixXcd> d;
    for (std::size_t k = 0; k < n; ++k) d.push_back(f.derivative(xi, k));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const std::complex<double> want =
            (d[i].adjoint() * d[j]).transpose().cwiseProduct(rho).sum();
        EXPECT_LT(std::abs(m.g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) -
                           want),
                  1e-10);
      }
    }
    EXPECT_LT(max_abs(m.g - m.g.adjoint()), 1e-14);
  }
}

TEST(Purification, SU2MetricEntries) {
  std::mt19937_64 rng(6);
  const auto f = UnitaryFamily::su2();
  for (int t = 0; t < 100; ++t) {
    const double l1 = std::uniform_real_distribution<double>(0, 1)(rng);
    const Spectrum s{l1, 1 - l1};
    const auto xi = testing::random_xi(f, rng);
    const double c = std::cos(xi[0]), sn = std::sin(xi[0]);
    const GramMetric m = gram_metric(s, f, xi);
    EXPECT_NEAR(std::abs(m.g(0, 0) - 1.0), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(m.g(1, 1) - c * c), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(m.g(2, 2) - sn * sn), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(m.g(1, 2)), 0.0, 1e-14);
    // Row index is the conjugated side, so the off-diagonal phase is -i.
    const std::complex<double> off{0.0, -(2 * l1 - 1) * c * sn};
    EXPECT_NEAR(std::abs(m.g(0, 1) - off), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(m.g(0, 2) - off), 0.0, 1e-14);
    EXPECT_NEAR(m.sqrt_det, std::sqrt(l1 * (1 - l1)) * std::sin(2 * xi[0]), 1e-10);
  }
}

TEST(Purification, SO3MetricEntries) {
  std::mt19937_64 rng(7);
  const auto f = UnitaryFamily::special_orthogonal(3);
  for (int t = 0; t < 100; ++t) {
    const Spectrum s = testing::random_spectrum(3, rng);
    const double l1 = s[0], l2 = s[1], l3 = s[2];
    const auto xi = testing::random_xi(f, rng);
    const double c13 = std::cos(xi[1]), s13 = std::sin(xi[1]);
    const double c23 = std::cos(xi[2]), s23 = std::sin(xi[2]);
    Eigen::Matrix3d want;
    want(0, 0) = l1 + l3 + (l2 - l1) * c23 * c23 + (l1 - l3) * c13 * c13 * c23 * c23;
    want(0, 1) = (l1 + l3) * s23;
    want(0, 2) = 0.5 * (l1 - l3) * std::sin(2 * xi[1]) * c23;
    want(1, 1) = l1 + l3;
    want(1, 2) = 0.0;
    want(2, 2) = l2 + l3 + (l1 - l3) * s13 * s13;
    want(1, 0) = want(0, 1);
    want(2, 0) = want(0, 2);
    want(2, 1) = want(1, 2);
    const GramMetric m = gram_metric(s, f, xi);
    EXPECT_LT(max_abs(m.g - want.cast<std::complex<double>>()), 1e-14);
    const double root = std::sqrt((l1 + l2) * (l1 + l3) * (l2 + l3)) * c23;
    EXPECT_NEAR(m.sqrt_det, root, 1e-10);
  }
}

TEST(Purification, PureSpectrumHasZeroVolumeElement) {
  std::mt19937_64 rng(8);
  for (const auto& f : {UnitaryFamily::su2(), UnitaryFamily::special_orthogonal(3)}) {
    std::vector<double> v(f.dim(), 0.0);
    v[0] = 1.0;
    const Spectrum s(v);
    for (int t = 0; t < 50; ++t) {
      EXPECT_LT(gram_metric(s, f, testing::random_xi(f, rng)).sqrt_det, 1e-10);
    }
  }
}

TEST(Purification, EvaluatorPathsAgree) {
  std::mt19937_64 rng(9);
  const auto f = UnitaryFamily::special_orthogonal(4);
  const Spectrum s = testing::random_spectrum(4, rng);
  MetricEvaluator eval(s, f);
  for (int t = 0; t < 50; ++t) {
    const auto xi = testing::random_xi(f, rng);
    EXPECT_NEAR(eval.volume_element(xi), gram_metric(s, f, xi).sqrt_det, 1e-12);
  }
}

TEST(Purification, DeterminantGuards) {
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(2, 2);
  g(1, 1) = -1.0;
  EXPECT_THROW(checked_metric_determinant(g), NumericError);
  g(1, 1) = -1e-13;
  EXPECT_EQ(checked_metric_determinant(g), 0.0);
  EXPECT_THROW(purify(Spectrum{0.5, 0.5}, UnitaryFamily::special_orthogonal(3),
                      std::vector<double>{0, 0, 0}),
               std::invalid_argument);
}

}  // namespace
}  // namespace soi
