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
#include <numbers>

#include "soi/errors.hpp"
#include "soi/quadrature.hpp"

namespace soi::quadrature {
namespace {

TEST(GaussLegendre, WeightsAndSymmetry) {
  for (std::size_t n : {1u, 2u, 5u, 16u, 32u, 33u}) {
    const auto r = gauss_legendre(n);
    ASSERT_EQ(r.nodes.size(), n);
    double w = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      w += r.weights[i];
      EXPECT_NEAR(r.nodes[i], -r.nodes[n - 1 - i], 1e-15);
    }
    EXPECT_NEAR(w, 2.0, 1e-14);
  }
  EXPECT_THROW(gauss_legendre(0), std::invalid_argument);
}

TEST(GaussLegendre, PolynomialExactness) {
  // An n-point rule integrates degree 2n-1 exactly.
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto r = gauss_legendre(n);
    for (std::size_t d = 0; d <= 2 * n - 1; ++d) {
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        sum += r.weights[i] * std::pow(r.nodes[i], static_cast<double>(d));
      }
      const double exact = d % 2 ? 0.0 : 2.0 / static_cast<double>(d + 1);
      EXPECT_NEAR(sum, exact, 1e-13) << "n=" << n << " d=" << d;
    }
  }
}

TEST(GaussLegendre, TensorProduct) {
  const auto f = [](const std::vector<double>& x) {
    return std::sin(x[0]) * std::cos(x[1]) * x[2] * x[2];
  };
  const double pi = std::numbers::pi;
  const double got = tensor_gauss_legendre(f, {0, 0, 0}, {pi, pi / 2, 1}, 24);
  EXPECT_NEAR(got, 2.0 * 1.0 / 3.0, 1e-13);
  EXPECT_THROW(tensor_gauss_legendre(f, {0, 0}, {1}, 4), std::invalid_argument);
}

TEST(AdaptiveSimpson, Convergence) {
  EXPECT_NEAR(adaptive_simpson([](double x) { return std::exp(x); }, 0, 1),
              std::numbers::e - 1, 1e-10);
  const double sharp = adaptive_simpson([](double x) { return std::pow(1 - x, 40.0); }, 0, 1);
  EXPECT_NEAR(sharp, 1.0 / 41.0, 1e-11);
  EXPECT_EQ(adaptive_simpson([](double) { return 0.0; }, 0, 1), 0.0);
}

}  // namespace
}  // namespace soi::quadrature
