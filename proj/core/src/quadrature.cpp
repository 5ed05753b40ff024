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

#include "soi/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/legendre.hpp>

#include "soi/errors.hpp"
#include "soi/random.hpp"

namespace soi::quadrature {

GaussLegendreRule gauss_legendre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Gauss-Legendre rule needs n >= 1");
  const int order = static_cast<int>(n);
  // Non-negative roots, ascending; zero is included for odd n.
  const std::vector<double> positive = boost::math::legendre_p_zeros<double>(order);
  GaussLegendreRule rule;
  for (auto it = positive.rbegin(); it != positive.rend(); ++it) {
    if (*it != 0.0) rule.nodes.push_back(-*it);
  }
  for (double x : positive) rule.nodes.push_back(x);
  rule.weights.reserve(n);
  for (double x : rule.nodes) {
    const double dp = boost::math::legendre_p_prime(order, x);
    rule.weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
  }
  return rule;
}

double tensor_gauss_legendre(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& lower, const std::vector<double>& upper,
    std::size_t nodes_per_axis) {
  if (lower.size() != upper.size() || lower.empty()) {
    throw std::invalid_argument("box bounds must be non-empty and equal length");
  }
  const std::size_t dims = lower.size();
  const GaussLegendreRule rule = gauss_legendre(nodes_per_axis);
  std::vector<double> half(dims), mid(dims);
  double jacobian = 1.0;
  for (std::size_t d = 0; d < dims; ++d) {
    half[d] = 0.5 * (upper[d] - lower[d]);
    mid[d] = 0.5 * (upper[d] + lower[d]);
    jacobian *= half[d];
  }
  std::size_t total = 1;
  for (std::size_t d = 0; d < dims; ++d) total *= nodes_per_axis;

  std::vector<double> terms(total);
  std::vector<std::size_t> index(dims, 0);
  std::vector<double> x(dims);
  for (std::size_t t = 0; t < total; ++t) {
    double w = 1.0;
    for (std::size_t d = 0; d < dims; ++d) {
      x[d] = mid[d] + half[d] * rule.nodes[index[d]];
      w *= rule.weights[index[d]];
    }
    terms[t] = w * f(x);
    for (std::size_t d = dims; d-- > 0;) {
      if (++index[d] < nodes_per_axis) break;
      index[d] = 0;
    }
  }
  return jacobian * pairwise_sum(terms);
}

namespace {

struct SimpsonPanel {
  double a, b, fa, fm, fb, whole;
};

double simpson_recurse(const std::function<double(double)>& f,
                       const SimpsonPanel& p, double tol, int depth,
                       int level) {
  const double m = 0.5 * (p.a + p.b);
  const double lm = 0.5 * (p.a + m);
  const double rm = 0.5 * (m + p.b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - p.a) / 6.0 * (p.fa + 4.0 * flm + p.fm);
  const double right = (p.b - m) / 6.0 * (p.fm + 4.0 * frm + p.fb);
  const double delta = left + right - p.whole;
  constexpr int kMinLevel = 5;
  if (level >= kMinLevel && std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  if (depth <= 0) {
    throw NumericError("adaptive Simpson did not converge on [" +
                       std::to_string(p.a) + ", " + std::to_string(p.b) + "]");
  }
  return simpson_recurse(f, {p.a, m, p.fa, flm, p.fm, left}, 0.5 * tol,
                         depth - 1, level + 1) +
         simpson_recurse(f, {m, p.b, p.fm, frm, p.fb, right}, 0.5 * tol,
                         depth - 1, level + 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double rel_tol, int max_depth,
                        double abs_floor) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);

  // Scale estimate from a coarse composite rule so a near-zero first panel
  // does not make the tolerance vanish.
  constexpr int kProbe = 64;
  double scale = 0.0;
  for (int i = 0; i <= kProbe; ++i) {
    scale += std::abs(f(a + (b - a) * i / kProbe));
  }
  scale *= std::abs(b - a) / (kProbe + 1);
  const double tol = std::max(rel_tol * scale, abs_floor);
  return simpson_recurse(f, {a, b, fa, fm, fb, whole}, tol, max_depth, 0);
}

}  // namespace soi::quadrature
