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

#pragma once

#include <cstddef>
#include <string>

#include "soi/spectrum.hpp"

namespace soi {

/// rho_S(l1) = l1 |1><1| + (1 - l1)/(N - 1) (identity on the rest).
Spectrum marginal_spectrum(std::size_t n, double lambda1);

/// Normalized SO(N) pairwise-product volume along the marginal family,
/// evaluated in log space. Requires N >= 3 and l1 in [1/N, 1].
double vnorm_marginal(std::size_t n, double lambda1);

/// Normalized von Neumann entropy along the marginal family.
double svn_norm_marginal(std::size_t n, double lambda1);

/// Checks vnorm_marginal is nonincreasing on a uniform scan of [1/N, 1];
/// throws NumericError otherwise.
void verify_marginal_monotone(std::size_t n, std::size_t points = 1000);

/// Bisection root of vnorm_marginal(n, l1) = level on [1/N, 1], gated on
/// verify_marginal_monotone. Throws NumericError if the level is not
/// bracketed.
double find_lambda1_star(std::size_t n, double level = 1e-4);

/// int_{1/N}^{l*} V dl / int_{1/N}^{1} V dl via adaptive Simpson.
double mass_ratio(std::size_t n, double lambda1_star);

enum class TailWeighting { kUniform, kVolume };

std::string to_string(TailWeighting w);
TailWeighting parse_weighting(const std::string& name);

/// Average of svn_norm_marginal over [1/N, l*], uniform in l1 or weighted
/// by vnorm_marginal. Returns 1 when l* == 1/N.
double avg_svn_tail(std::size_t n, double lambda1_star, TailWeighting w);

/// int l1 V dl1 / int V dl1 over [1/N, 1].
double marginal_centroid(std::size_t n);

struct AsymptoticsReport {
  std::size_t n = 0;
  double lambda1_star = 0.0;
  double mass_ratio = 0.0;
  double avg_svn_uniform = 0.0;
  double avg_svn_volume_weighted = 0.0;
};

AsymptoticsReport analyze_marginal(std::size_t n, double level = 1e-4);

}  // namespace soi
