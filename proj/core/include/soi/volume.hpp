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
#include <cstdint>
#include <string>

#include "soi/spectrum.hpp"
#include "soi/unitary.hpp"

namespace soi {

enum class VolumeMethod { kClosedForm, kQuadrature, kMonteCarlo };

std::string to_string(VolumeMethod m);

struct VolumeResult {
  double value = 0.0;
  VolumeMethod method = VolumeMethod::kClosedForm;
  double std_error = 0.0;
  std::uint64_t samples_or_nodes = 0;
  std::uint64_t seed = 0;
};

/// Groups with a closed-form volume. kSONProduct is the pairwise-sum
/// product prod_{i<j} sqrt(l_i + l_j) without any factor of pi.
enum class ClosedFormGroup { kSU2, kSO2, kSO3, kSONProduct };

/// V_SU(2) = 4 pi^2 sqrt(l1 l2), V_SO(2) = pi/2,
/// V_SO(3) = (pi^2/4) sqrt((l1+l2)(l1+l3)(l2+l3)), SO(N): pairwise product.
VolumeResult closed_form_volume(ClosedFormGroup group, const Spectrum& s);

/// closed form at s divided by closed form at the maximally mixed spectrum.
double normalized_volume(ClosedFormGroup group, const Spectrum& s);

/// Tensor Gauss-Legendre integral of sqrt(det g) over the chart box.
/// Families with more than four parameters are rejected.
VolumeResult quadrature_volume(const Spectrum& s, const UnitaryFamily& f,
                               std::size_t nodes_per_axis = 32);

/// box volume x mean of sqrt(det g) over uniform draws. Sample i uses
/// CounterStream(seed, i), and the sum is pairwise over the sample index,
/// so the result is bit-identical for any worker count.
VolumeResult monte_carlo_volume(const Spectrum& s, const UnitaryFamily& f,
                                std::uint64_t samples, std::uint64_t seed,
                                unsigned workers = 0);

}  // namespace soi
