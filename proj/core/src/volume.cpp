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

#include "soi/volume.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "soi/parallel.hpp"
#include "soi/purification.hpp"
#include "soi/quadrature.hpp"
#include "soi/random.hpp"

namespace soi {
namespace {

constexpr double kPi = std::numbers::pi;

void expect_dim(const Spectrum& s, std::size_t dim, const char* group) {
  if (s.dim() != dim) {
    throw std::invalid_argument(std::string(group) + " volume needs a spectrum of dimension " +
                                std::to_string(dim) + ", got " +
                                std::to_string(s.dim()));
  }
}

double pairwise_product(const Spectrum& s) {
  // Accumulate in log space so large N does not underflow prematurely.
  double log_sum = 0.0;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = i + 1; j < s.dim(); ++j) {
      const double pair = s[i] + s[j];
      if (pair <= 0.0) return 0.0;
      log_sum += 0.5 * std::log(pair);
    }
  }
  return std::exp(log_sum);
}

double closed_value(ClosedFormGroup group, const Spectrum& s) {
  switch (group) {
    case ClosedFormGroup::kSU2:
      expect_dim(s, 2, "SU(2)");
      return 4.0 * kPi * kPi * std::sqrt(s[0] * s[1]);
    case ClosedFormGroup::kSO2:
      expect_dim(s, 2, "SO(2)");
      return 0.5 * kPi * std::sqrt(s[0] + s[1]);
    case ClosedFormGroup::kSO3:
      expect_dim(s, 3, "SO(3)");
      return 0.25 * kPi * kPi *
             std::sqrt((s[0] + s[1]) * (s[0] + s[2]) * (s[1] + s[2]));
    case ClosedFormGroup::kSONProduct:
      return pairwise_product(s);
  }
  throw std::invalid_argument("unknown closed-form group");
}

}  // namespace

std::string to_string(VolumeMethod m) {
  switch (m) {
    case VolumeMethod::kClosedForm:
      return "closed_form";
    case VolumeMethod::kQuadrature:
      return "quadrature";
    case VolumeMethod::kMonteCarlo:
      return "monte_carlo";
  }
  return "?";
}

VolumeResult closed_form_volume(ClosedFormGroup group, const Spectrum& s) {
  VolumeResult r;
  r.value = closed_value(group, s);
  r.method = VolumeMethod::kClosedForm;
  return r;
}

double normalized_volume(ClosedFormGroup group, const Spectrum& s) {
  const double top = closed_value(group, Spectrum::maximally_mixed(s.dim()));
  return std::min(closed_value(group, s) / top, 1.0);
}

VolumeResult quadrature_volume(const Spectrum& s, const UnitaryFamily& f,
                               std::size_t nodes_per_axis) {
  const std::size_t params = f.parameter_count();
  if (params > 4) {
    throw std::invalid_argument(f.name() + " has " + std::to_string(params) +
                                " parameters; use monte_carlo_volume");
  }
  std::vector<double> lower, upper;
  for (const auto& p : f.parameter_domain()) {
    lower.push_back(p.lower);
    upper.push_back(p.upper);
  }
  MetricEvaluator eval(s, f);
  VolumeResult r;
  r.value = quadrature::tensor_gauss_legendre(
      [&eval](const std::vector<double>& xi) { return eval.volume_element(xi); },
      lower, upper, nodes_per_axis);
  r.method = VolumeMethod::kQuadrature;
  std::uint64_t total = 1;
  for (std::size_t d = 0; d < params; ++d) total *= nodes_per_axis;
  r.samples_or_nodes = total;
  return r;
}

VolumeResult monte_carlo_volume(const Spectrum& s, const UnitaryFamily& f,
                                std::uint64_t samples, std::uint64_t seed,
                                unsigned workers) {
  if (samples == 0) throw std::invalid_argument("Monte Carlo needs samples >= 1");
  const auto domain = f.parameter_domain();
  std::vector<double> values(samples);

  parallel_chunks(
      samples,
      [&](std::size_t begin, std::size_t end) {
        MetricEvaluator eval(s, f);
        std::vector<double> xi(domain.size());
        for (std::size_t i = begin; i < end; ++i) {
          CounterStream stream(seed, i);
          for (std::size_t d = 0; d < xi.size(); ++d) {
            xi[d] = stream.uniform(domain[d].lower, domain[d].upper);
          }
          values[i] = eval.volume_element(xi);
        }
      },
      workers);

  const double n = static_cast<double>(samples);
  const double mean = pairwise_sum(values) / n;
  std::vector<double> sq(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double d = values[i] - mean;
    sq[i] = d * d;
  }
  const double var = samples > 1 ? pairwise_sum(sq) / (n - 1.0) : 0.0;
  const double box = f.box_volume();

  VolumeResult r;
  r.value = box * mean;
  r.std_error = box * std::sqrt(var / n);
  r.method = VolumeMethod::kMonteCarlo;
  r.samples_or_nodes = samples;
  r.seed = seed;
  return r;
}

}  // namespace soi
