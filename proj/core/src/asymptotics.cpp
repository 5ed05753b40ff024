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

#include "soi/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "soi/errors.hpp"
#include "soi/quadrature.hpp"

namespace soi {
namespace {

constexpr double kIntegralTolerance = 1e-10;

void check_marginal(std::size_t n, double lambda1) {
  if (n < 3) throw std::invalid_argument("marginal family needs N >= 3");
  const double lo = 1.0 / static_cast<double>(n);
  // Allow the rounding of 1/N itself.
  if (!(lambda1 >= lo - 1e-15 && lambda1 <= 1.0)) {
    throw std::invalid_argument("lambda1 = " + std::to_string(lambda1) +
                                " outside [1/N, 1]");
  }
}

}  // namespace

Spectrum marginal_spectrum(std::size_t n, double lambda1) {
  check_marginal(n, lambda1);
  std::vector<double> v(n, (1.0 - lambda1) / static_cast<double>(n - 1));
  v[0] = lambda1;
  return Spectrum(std::move(v));
}

double vnorm_marginal(std::size_t n, double lambda1) {
  check_marginal(n, lambda1);
  if (lambda1 >= 1.0) return 0.0;
  const auto nn = static_cast<double>(n);
  const double rest = (1.0 - lambda1) / (nn - 1.0);
  const double log_v = 0.5 * (nn - 1.0) * std::log(lambda1 + rest) +
                       0.25 * (nn - 1.0) * (nn - 2.0) * std::log(2.0 * rest) -
                       0.25 * nn * (nn - 1.0) * std::log(2.0 / nn);
  return std::min(std::exp(log_v), 1.0);
}

double svn_norm_marginal(std::size_t n, double lambda1) {
  check_marginal(n, lambda1);
  const auto nn = static_cast<double>(n);
  const double rest = (1.0 - lambda1) / (nn - 1.0);
  double h = 0.0;
  if (lambda1 > 0.0) h -= lambda1 * std::log(lambda1);
  if (rest > 0.0) h -= (1.0 - lambda1) * std::log(rest);
  return std::clamp(h / std::log(nn), 0.0, 1.0);
}

void verify_marginal_monotone(std::size_t n, std::size_t points) {
  const double lo = 1.0 / static_cast<double>(n);
  double prev = vnorm_marginal(n, lo);
  for (std::size_t i = 1; i < points; ++i) {
    const double x = lo + (1.0 - lo) * static_cast<double>(i) /
                              static_cast<double>(points - 1);
    const double v = vnorm_marginal(n, std::min(x, 1.0));
    if (v > prev * (1.0 + 1e-12) + 1e-300) {
      throw NumericError("normalized marginal volume increases near lambda1 = " +
                         std::to_string(x) + " for N = " + std::to_string(n));
    }
    prev = v;
  }
}

double find_lambda1_star(std::size_t n, double level) {
  verify_marginal_monotone(n);
  double lo = 1.0 / static_cast<double>(n);
  double hi = 1.0;
  if (!(vnorm_marginal(n, lo) >= level && vnorm_marginal(n, hi) <= level)) {
    throw NumericError("level " + std::to_string(level) +
                       " is not bracketed by the marginal volume curve");
  }
  // Bisect until the interval stops shrinking (well below 1e-12).
  while (hi - lo > 1e-15) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (vnorm_marginal(n, mid) > level) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double mass_ratio(std::size_t n, double lambda1_star) {
  check_marginal(n, lambda1_star);
  const double lo = 1.0 / static_cast<double>(n);
  if (lambda1_star >= 1.0) return 1.0;
  const auto v = [n](double x) { return vnorm_marginal(n, std::min(x, 1.0)); };
  const double head = quadrature::adaptive_simpson(v, lo, lambda1_star, kIntegralTolerance);
  const double tail = quadrature::adaptive_simpson(v, lambda1_star, 1.0, kIntegralTolerance);
  return head / (head + tail);
}

std::string to_string(TailWeighting w) {
  return w == TailWeighting::kUniform ? "uniform" : "volume";
}

TailWeighting parse_weighting(const std::string& name) {
  if (name == "uniform") return TailWeighting::kUniform;
  if (name == "volume") return TailWeighting::kVolume;
  throw std::invalid_argument("unknown weighting '" + name +
                              "' (expected uniform or volume)");
}

double avg_svn_tail(std::size_t n, double lambda1_star, TailWeighting w) {
  check_marginal(n, lambda1_star);
  const double lo = 1.0 / static_cast<double>(n);
  if (lambda1_star - lo <= 0.0) return 1.0;
  const auto s = [n](double x) { return svn_norm_marginal(n, std::min(x, 1.0)); };
  if (w == TailWeighting::kUniform) {
    return quadrature::adaptive_simpson(s, lo, lambda1_star, kIntegralTolerance) /
           (lambda1_star - lo);
  }
  const auto v = [n](double x) { return vnorm_marginal(n, std::min(x, 1.0)); };
  const auto sv = [&](double x) { return s(x) * v(x); };
  return quadrature::adaptive_simpson(sv, lo, lambda1_star, kIntegralTolerance) /
         quadrature::adaptive_simpson(v, lo, lambda1_star, kIntegralTolerance);
}

double marginal_centroid(std::size_t n) {
  const double lo = 1.0 / static_cast<double>(n);
  const auto v = [n](double x) { return vnorm_marginal(n, std::min(x, 1.0)); };
  const auto xv = [&](double x) { return x * v(x); };
  return quadrature::adaptive_simpson(xv, lo, 1.0, kIntegralTolerance) /
         quadrature::adaptive_simpson(v, lo, 1.0, kIntegralTolerance);
}

AsymptoticsReport analyze_marginal(std::size_t n, double level) {
  AsymptoticsReport r;
  r.n = n;
  r.lambda1_star = find_lambda1_star(n, level);
  r.mass_ratio = mass_ratio(n, r.lambda1_star);
  r.avg_svn_uniform = avg_svn_tail(n, r.lambda1_star, TailWeighting::kUniform);
  r.avg_svn_volume_weighted = avg_svn_tail(n, r.lambda1_star, TailWeighting::kVolume);
  return r;
}

}  // namespace soi
