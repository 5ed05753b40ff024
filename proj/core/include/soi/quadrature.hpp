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
#include <functional>
#include <vector>

namespace soi::quadrature {

/// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(std::size_t n);

/// Tensor-product Gauss-Legendre over the box prod [lower_d, upper_d].
/// Nodes are visited in lexicographic order (last axis fastest) and the
/// weighted values are accumulated with pairwise summation.
double tensor_gauss_legendre(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& lower, const std::vector<double>& upper,
    std::size_t nodes_per_axis);

/// Recursive adaptive Simpson. A panel is accepted when refining it moves
/// the estimate by less than 15 * max(rel_tol * |whole|, abs_floor).
/// Throws NumericError if max_depth is reached without convergence.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double rel_tol = 1e-10, int max_depth = 60,
                        double abs_floor = 1e-300);

}  // namespace soi::quadrature
