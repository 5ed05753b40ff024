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
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "soi/spectrum.hpp"
#include "soi/unitary.hpp"

namespace soi {

/// Composite vector in H_E (x) H_S. Component (e, s) sits at e * N_S + s.
using StateVector = Eigen::VectorXcd;

/// sum_i |i>_E |i>_S, unnormalized (norm^2 = n).
StateVector bell_state(std::size_t n);

struct PurificationPoint {
  StateVector state;
  Spectrum spectrum;
  UnitaryFamily family;
  std::vector<double> xi;
};

/// (U_E(xi) (x) sqrt(rho_S)) |Gamma>.
PurificationPoint purify(const Spectrum& s, const UnitaryFamily& f,
                         std::span<const double> xi);

/// Reduced state on S: (rho_S)_{s s'} = sum_e p_{e,s} conj(p_{e,s'}).
/// The environment dimension is state.size() / system_dim.
Eigen::MatrixXcd partial_trace_environment(const StateVector& state,
                                           std::size_t system_dim);

/// Same, for a square composite (length N^2); rejects other lengths.
Eigen::MatrixXcd partial_trace_environment(const StateVector& state);

/// Isometric embedding of the environment into the first N basis vectors of
/// a larger environment of dimension env_dim. Result length env_dim * N.
StateVector embed_environment(const PurificationPoint& p, std::size_t env_dim);

/// |Gamma_{,k}> = (dU_E/dxi_k (x) sqrt(rho_S)) |Gamma> for every k.
std::vector<StateVector> tangent_frame(const Spectrum& s, const UnitaryFamily& f,
                                       std::span<const double> xi);

/// First fundamental form of the purification surface at one point.
struct GramMetric {
  Eigen::MatrixXcd g;  // Hermitian, g(i, j) = <Gamma_{,i}|Gamma_{,j}>
  double det = 0.0;
  double sqrt_det = 0.0;
};

/// Determinant handling shared by every metric path: the imaginary part
/// must vanish to 1e-10, values in [-1e-12, 0) are clamped to 0, anything
/// more negative raises NumericError.
double checked_metric_determinant(const Eigen::MatrixXcd& g);

GramMetric gram_metric(const Spectrum& s, const UnitaryFamily& f,
                       std::span<const double> xi);

/// Reusable metric evaluator for one (spectrum, family) pair. Holds scratch
/// buffers, so give each thread its own instance.
class MetricEvaluator {
 public:
  MetricEvaluator(Spectrum s, UnitaryFamily f);

  const Spectrum& spectrum() const noexcept { return spectrum_; }
  const UnitaryFamily& family() const noexcept { return family_; }

  GramMetric metric(std::span<const double> xi);
  /// sqrt(det g) at xi, taken as |det R| from a QR of the tangent frame so
  /// that rank-deficient frames stay at round-off level.
  double volume_element(std::span<const double> xi);

 private:
  void fill(std::span<const double> xi);
  void fill_real(std::span<const double> xi);

  Spectrum spectrum_;
  UnitaryFamily family_;
  Eigen::VectorXd weights_;
  FactorizationWorkspace ws_;
  Eigen::MatrixXcd value_;
  std::vector<Eigen::MatrixXcd> derivs_;
  Eigen::MatrixXcd frame_;  // column k = weighted, flattened dU/dxi_k
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr_;
  // Real fast path for SO(N) charts.
  RealFactorizationWorkspace real_ws_;
  Eigen::MatrixXd real_value_;
  std::vector<Eigen::MatrixXd> real_derivs_;
  Eigen::MatrixXd real_frame_;
  Eigen::HouseholderQR<Eigen::MatrixXd> real_qr_;
};

}  // namespace soi
