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

#include "soi/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "soi/parallel.hpp"
#include "soi/random.hpp"

namespace soi {
namespace {

Eigen::VectorXd sqrt_values(const Spectrum& s) {
  Eigen::VectorXd w(static_cast<Eigen::Index>(s.dim()));
  for (std::size_t i = 0; i < s.dim(); ++i) {
    w(static_cast<Eigen::Index>(i)) = std::sqrt(s[i]);
  }
  return w;
}

// Amplitude matrix A(e, s) of the rotated purification at U_E = identity:
// U_S diag(sqrt(l)) U_S^T.
Eigen::MatrixXcd canonical_amplitudes(const RotatedState& r) {
  const auto& u = r.basis_rotation();
  return u * sqrt_values(r.spectrum()).asDiagonal() * u.transpose();
}

StateVector flatten(const Eigen::MatrixXcd& m) {
  StateVector v(m.size());
  for (Eigen::Index e = 0; e < m.rows(); ++e) {
    for (Eigen::Index s = 0; s < m.cols(); ++s) v(e * m.cols() + s) = m(e, s);
  }
  return v;
}

// Phase angles span a full turn and wrap; mixing angles are clamped.
bool is_periodic(const ParameterInfo& p) {
  return p.upper - p.lower > std::numbers::pi;
}

double move_within(const ParameterInfo& p, double x) {
  if (is_periodic(p)) {
    const double width = p.upper - p.lower;
    x = std::fmod(x - p.lower, width);
    if (x < 0.0) x += width;
    return p.lower + x;
  }
  return std::clamp(x, p.lower, p.upper);
}

}  // namespace

RotatedState::RotatedState(Spectrum spectrum)
    : spectrum_(std::move(spectrum)),
      rotation_(Eigen::MatrixXcd::Identity(
          static_cast<Eigen::Index>(spectrum_.dim()),
          static_cast<Eigen::Index>(spectrum_.dim()))) {}

RotatedState::RotatedState(Spectrum spectrum, Eigen::MatrixXcd basis_rotation)
    : spectrum_(std::move(spectrum)), rotation_(std::move(basis_rotation)) {
  const auto n = static_cast<Eigen::Index>(spectrum_.dim());
  if (rotation_.rows() != n || rotation_.cols() != n) {
    throw std::invalid_argument("basis rotation has the wrong dimension");
  }
  const Eigen::MatrixXcd gram = rotation_.adjoint() * rotation_;
  if ((gram - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("basis rotation is not unitary");
  }
}

RotatedState::RotatedState(Spectrum spectrum, const UnitaryFamily& chart,
                           std::span<const double> xi)
    : RotatedState(std::move(spectrum), chart.realize(xi)) {}

Eigen::MatrixXcd RotatedState::density_matrix() const {
  Eigen::VectorXd l(static_cast<Eigen::Index>(spectrum_.dim()));
  for (std::size_t i = 0; i < spectrum_.dim(); ++i) {
    l(static_cast<Eigen::Index>(i)) = spectrum_[i];
  }
  return rotation_ * l.asDiagonal() * rotation_.adjoint();
}

Eigen::MatrixXcd RotatedState::sqrt_density() const {
  return rotation_ * sqrt_values(spectrum_).asDiagonal() * rotation_.adjoint();
}

StateVector purify_rotated(const RotatedState& r, const UnitaryFamily& f,
                           std::span<const double> xi) {
  if (f.dim() != r.dim()) {
    throw std::invalid_argument("environment chart dimension does not match the state");
  }
  return flatten(f.realize(xi) * canonical_amplitudes(r));
}

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
  const Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(herm);
  if (eig.info() != Eigen::Success) {
    throw std::invalid_argument("eigendecomposition failed");
  }
  Eigen::VectorXd vals = eig.eigenvalues();
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) < -1e-12) {
      throw std::invalid_argument("matrix is not positive semidefinite (eigenvalue " +
                                  std::to_string(vals(i)) + ")");
    }
    vals(i) = std::sqrt(std::max(vals(i), 0.0));
  }
  return eig.eigenvectors() * vals.asDiagonal() * eig.eigenvectors().adjoint();
}

double fidelity_closed(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols()) {
    throw std::invalid_argument("fidelity needs operators of equal dimension");
  }
  const Eigen::MatrixXcd product = psd_sqrt(rho) * psd_sqrt(sigma);
  const double trace_norm = Eigen::JacobiSVD<Eigen::MatrixXcd>(product).singularValues().sum();
  return std::clamp(trace_norm * trace_norm, 0.0, 1.0);
}

double fidelity_closed(const RotatedState& rho, const RotatedState& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("fidelity needs states of equal dimension");
  }
  const Eigen::MatrixXcd product = rho.sqrt_density() * sigma.sqrt_density();
  const double trace_norm = Eigen::JacobiSVD<Eigen::MatrixXcd>(product).singularValues().sum();
  return std::clamp(trace_norm * trace_norm, 0.0, 1.0);
}

double purification_overlap(const RotatedState& rho, const RotatedState& sigma,
                            const UnitaryFamily& env,
                            std::span<const double> xi_rho,
                            std::span<const double> xi_sigma) {
  if (rho.dim() != sigma.dim() || env.dim() != rho.dim()) {
    throw std::invalid_argument("overlap needs matching dimensions");
  }
  const Eigen::MatrixXcd a = env.realize(xi_rho) * canonical_amplitudes(rho);
  const Eigen::MatrixXcd b = env.realize(xi_sigma) * canonical_amplitudes(sigma);
  return std::norm(a.conjugate().cwiseProduct(b).sum());
}

FidelitySearchResult fidelity_soi_maximize(const RotatedState& rho,
                                           const RotatedState& sigma,
                                           const FidelitySearchOptions& options) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("fidelity needs states of equal dimension");
  }
  if (options.starts == 0) throw std::invalid_argument("need at least one start");
  const UnitaryFamily env = options.environment.value_or(UnitaryFamily::unitary(rho.dim()));
  if (env.dim() != rho.dim()) {
    throw std::invalid_argument("environment chart dimension does not match the states");
  }
  const auto domain = env.parameter_domain();
  const std::size_t n = domain.size();
  const Eigen::MatrixXcd amp_rho = canonical_amplitudes(rho);
  const Eigen::MatrixXcd amp_sigma = canonical_amplitudes(sigma);

  // Search vector: [xi_rho, xi_sigma], or just xi_sigma when rho is frozen.
  const std::size_t offset = options.freeze_rho ? 0 : n;
  const std::size_t dims = offset + n;
  const auto info = [&](std::size_t d) -> const ParameterInfo& {
    return domain[d < offset ? d : d - offset];
  };
  std::vector<double> origin(n);
  for (std::size_t d = 0; d < n; ++d) origin[d] = domain[d].lower;

  const auto objective = [&](const std::vector<double>& x) {
    const std::span<const double> xr =
        options.freeze_rho ? std::span<const double>(origin)
                           : std::span<const double>(x.data(), n);
    const std::span<const double> xs(x.data() + offset, n);
    const Eigen::MatrixXcd a = env.realize(xr) * amp_rho;
    const Eigen::MatrixXcd b = env.realize(xs) * amp_sigma;
    return std::norm(a.conjugate().cwiseProduct(b).sum());
  };

  struct StartResult {
    double value = -1.0;
    std::vector<double> x;
  };
  std::vector<StartResult> results(options.starts);

  parallel_chunks(
      options.starts,
      [&](std::size_t begin, std::size_t end) {
        for (std::size_t start = begin; start < end; ++start) {
          CounterStream stream(options.seed, start);
          std::vector<double> x(dims);
          std::vector<double> step(dims);
          for (std::size_t d = 0; d < dims; ++d) {
            x[d] = stream.uniform(info(d).lower, info(d).upper);
            step[d] = 0.25 * (info(d).upper - info(d).lower);
          }
          double best = objective(x);
          for (std::size_t sweep = 0; sweep < options.sweeps; ++sweep) {
            bool improved = false;
            for (std::size_t d = 0; d < dims; ++d) {
              for (const double dir : {1.0, -1.0}) {
                const double old = x[d];
                x[d] = move_within(info(d), old + dir * step[d]);
                const double v = objective(x);
                if (v > best) {
                  best = v;
                  improved = true;
                  break;
                }
                x[d] = old;
              }
            }
            if (!improved) {
              double largest = 0.0;
              for (double& s : step) {
                s *= 0.5;
                largest = std::max(largest, s);
              }
              if (largest < 1e-13) break;
            }
          }
          results[start] = {best, std::move(x)};
        }
      },
      options.workers);

  std::size_t winner = 0;
  for (std::size_t s = 1; s < results.size(); ++s) {
    if (results[s].value > results[winner].value) winner = s;
  }
  FidelitySearchResult out;
  out.value = results[winner].value;
  out.best_start = winner;
  const auto& x = results[winner].x;
  out.xi_rho = options.freeze_rho ? origin : std::vector<double>(x.begin(), x.begin() + n);
  out.xi_sigma.assign(x.begin() + offset, x.end());
  return out;
}

}  // namespace soi
