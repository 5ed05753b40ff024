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
#include <span>
#include <string>
#include <vector>

#include "soi/spectrum.hpp"

namespace soi {

/// Stick-breaking map from N-1 uniforms to the (N-1)-simplex:
/// lambda_k = r_{k-1} (1 - u_k^{1/(N-k)}), lambda_N = r_{N-1}.
/// For N = 3 this is lambda = (1 - sqrt(u1), sqrt(u1)(1 - u2), sqrt(u1) u2).
Spectrum stick_breaking(std::span<const double> uniforms);

/// `count` uniform samples on the simplex of dimension n. Sample i uses
/// CounterStream(seed, i).
std::vector<Spectrum> sample_simplex(std::size_t n, std::size_t count,
                                     std::uint64_t seed);

struct SimplexCell {
  std::size_t id = 0;  // 1-based, id = i1 * ell + i2 + 1
  double eta1 = 0.0;
  double eta2 = 0.0;
  Spectrum lambda{0.5, 0.5};
};

/// Equal-area discretization of the 3-simplex: an ell x ell grid of square
/// centers in eta space mapped through the stick-breaking transform.
struct SimplexGrid {
  std::size_t ell = 0;
  bool weyl_filter = false;
  std::vector<SimplexCell> cells;
};

/// With weyl_filter, keeps only cells whose centers satisfy
/// eta1 in (1/4, 1] and eta2 in (1/2, 1].
SimplexGrid build_grid(std::size_t ell, bool weyl_filter);

enum class Observable { kVolume, kVonNeumann, kLinear };

std::string to_string(Observable o);
Observable parse_observable(const std::string& name);

/// Normalized SO(3) volume, normalized von Neumann entropy, or normalized
/// linear entropy of a 3-spectrum.
double observable_value(Observable o, const Spectrum& s);

/// Segment a in [1, k] covering ((a-1)/k, a/k]; 0 maps to segment 1.
std::size_t segment_of(double value, std::size_t k);

struct MacrostateBinning {
  std::size_t k = 0;
  Observable observable = Observable::kVolume;
  std::vector<double> values;            // per cell, grid order
  std::vector<std::size_t> assignments;  // per cell, segment in [1, k]
  std::vector<std::size_t> counts;       // |L_a|, index a-1
  std::vector<double> fractions;         // |L_a| / |cells|
  std::vector<double> avg_svn;           // mean normalized S_VN per segment; 0 if empty
};

MacrostateBinning bin_cells(const SimplexGrid& grid, Observable o,
                            std::size_t k, unsigned workers = 0);

}  // namespace soi
