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
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "soi/purification.hpp"
#include "soi/spectrum.hpp"
#include "soi/unitary.hpp"

namespace soi {

/// A density operator sigma = U_S diag(spectrum) U_S^dagger whose eigenbasis
/// is the fixed basis rotated by U_S.
class RotatedState {
 public:
  /// Unrotated (U_S = identity).
  explicit RotatedState(Spectrum spectrum);
  /// Throws std::invalid_argument if basis_rotation is not an N x N unitary
  /// within 1e-10.
  RotatedState(Spectrum spectrum, Eigen::MatrixXcd basis_rotation);
  /// U_S realized from a chart.
  RotatedState(Spectrum spectrum, const UnitaryFamily& chart,
               std::span<const double> xi);

  const Spectrum& spectrum() const noexcept { return spectrum_; }
  const Eigen::MatrixXcd& basis_rotation() const noexcept { return rotation_; }
  std::size_t dim() const noexcept { return spectrum_.dim(); }

  Eigen::MatrixXcd density_matrix() const;
  /// sqrt(sigma) = U_S diag(sqrt(lambda)) U_S^dagger.
  Eigen::MatrixXcd sqrt_density() const;

 private:
  Spectrum spectrum_;
  Eigen::MatrixXcd rotation_;
};

/// (U_E(xi) (x) sqrt(sigma)) |Gamma^sigma>, with the environment copy of
/// the rotated basis. Same (e, s) layout as purify().
StateVector purify_rotated(const RotatedState& r, const UnitaryFamily& f,
                           std::span<const double> xi);

/// PSD square root through a Hermitian eigendecomposition; eigenvalues in
/// [-1e-12, 0) are clamped to 0, more negative ones raise
/// std::invalid_argument.
Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m);

/// (sum of singular values of sqrt(rho) sqrt(sigma))^2, clamped to [0, 1].
double fidelity_closed(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma);
double fidelity_closed(const RotatedState& rho, const RotatedState& sigma);

struct FidelitySearchOptions {
  std::size_t starts = 20;
  std::size_t sweeps = 200;
  std::uint64_t seed = 0;
  /// Hold xi_rho at the origin and search over xi_sigma only.
  bool freeze_rho = false;
  /// Environment chart; U(N) when empty.
  std::optional<UnitaryFamily> environment;
  unsigned workers = 0;
};

struct FidelitySearchResult {
  double value = 0.0;
  std::vector<double> xi_rho;
  std::vector<double> xi_sigma;
  std::size_t best_start = 0;
};

/// |<Gamma^rho(xi_rho)|Gamma^sigma(xi_sigma)>|^2
double purification_overlap(const RotatedState& rho, const RotatedState& sigma,
                            const UnitaryFamily& env,
                            std::span<const double> xi_rho,
                            std::span<const double> xi_sigma);

/// Multi-start coordinate search (shrinking steps) for the largest overlap
/// between purifications of rho and sigma. Deterministic given the seed;
/// ties between starts go to the lowest start index.
FidelitySearchResult fidelity_soi_maximize(const RotatedState& rho,
                                           const RotatedState& sigma,
                                           const FidelitySearchOptions& options = {});

}  // namespace soi
