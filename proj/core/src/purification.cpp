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

#include "soi/purification.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "soi/errors.hpp"

namespace soi {
namespace {

void check_dims(const Spectrum& s, const UnitaryFamily& f) {
  if (s.dim() != f.dim()) {
    throw std::invalid_argument("spectrum dimension " + std::to_string(s.dim()) +
                                " does not match " + f.name());
  }
}

Eigen::VectorXd sqrt_weights(const Spectrum& s) {
  Eigen::VectorXd w(static_cast<Eigen::Index>(s.dim()));
  for (std::size_t i = 0; i < s.dim(); ++i) {
    w(static_cast<Eigen::Index>(i)) = std::sqrt(s[i]);
  }
  return w;
}

// Environment-major flattening: entry (e, s) -> e * cols + s.
StateVector flatten(const Eigen::MatrixXcd& m) {
  StateVector v(m.size());
  const auto cols = m.cols();
  for (Eigen::Index e = 0; e < m.rows(); ++e) {
    for (Eigen::Index s = 0; s < cols; ++s) v(e * cols + s) = m(e, s);
  }
  return v;
}

}  // namespace

StateVector bell_state(std::size_t n) {
  if (n < 2) throw std::invalid_argument("Bell state needs dimension >= 2");
  const auto dim = static_cast<Eigen::Index>(n);
  StateVector v = StateVector::Zero(dim * dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i * dim + i) = 1.0;
  return v;
}

PurificationPoint purify(const Spectrum& s, const UnitaryFamily& f,
                         std::span<const double> xi) {
  check_dims(s, f);
  const Eigen::MatrixXcd u = f.realize(xi);
  // p(e, s) = U(e, s) sqrt(lambda_s)
  const Eigen::MatrixXcd amplitudes = u * sqrt_weights(s).asDiagonal();
  return {flatten(amplitudes), s, f, std::vector<double>(xi.begin(), xi.end())};
}

Eigen::MatrixXcd partial_trace_environment(const StateVector& state,
                                           std::size_t system_dim) {
  const auto n = static_cast<Eigen::Index>(system_dim);
  if (n == 0 || state.size() % n != 0) {
    throw std::invalid_argument("state length is not a multiple of the system dimension");
  }
  const Eigen::Index env = state.size() / n;
  // Rows of `a` are environment indices.
  const Eigen::Map<const Eigen::Matrix<std::complex<double>, Eigen::Dynamic,
                                       Eigen::Dynamic, Eigen::RowMajor>>
      a(state.data(), env, n);
  return a.transpose() * a.conjugate();
}

Eigen::MatrixXcd partial_trace_environment(const StateVector& state) {
  const auto n = static_cast<Eigen::Index>(
      std::llround(std::sqrt(static_cast<double>(state.size()))));
  if (n * n != state.size()) {
    throw std::invalid_argument("composite state length " +
                                std::to_string(state.size()) + " is not square");
  }
  return partial_trace_environment(state, static_cast<std::size_t>(n));
}

StateVector embed_environment(const PurificationPoint& p, std::size_t env_dim) {
  const std::size_t n = p.spectrum.dim();
  if (env_dim < n) {
    throw std::invalid_argument("target environment dimension " +
                                std::to_string(env_dim) +
                                " is smaller than " + std::to_string(n));
  }
  StateVector out = StateVector::Zero(static_cast<Eigen::Index>(env_dim * n));
  out.head(p.state.size()) = p.state;
  return out;
}

std::vector<StateVector> tangent_frame(const Spectrum& s, const UnitaryFamily& f,
                                       std::span<const double> xi) {
  check_dims(s, f);
  FactorizationWorkspace ws;
  Eigen::MatrixXcd u;
  std::vector<Eigen::MatrixXcd> derivs;
  f.realize_with_derivatives(xi, ws, u, derivs);
  const Eigen::VectorXd w = sqrt_weights(s);
  std::vector<StateVector> frame;
  frame.reserve(derivs.size());
  for (const auto& d : derivs) frame.push_back(flatten(d * w.asDiagonal()));
  return frame;
}

double checked_metric_determinant(const Eigen::MatrixXcd& g) {
  const std::complex<double> det = g.partialPivLu().determinant();
  if (std::abs(det.imag()) >= 1e-10) {
    throw NumericError("Gram determinant has imaginary part " +
                       std::to_string(det.imag()));
  }
  if (det.real() < -1e-12) {
    throw NumericError("Gram determinant is negative: " +
                       std::to_string(det.real()));
  }
  return std::max(det.real(), 0.0);
}

GramMetric gram_metric(const Spectrum& s, const UnitaryFamily& f,
                       std::span<const double> xi) {
  MetricEvaluator eval(s, f);
  return eval.metric(xi);
}

MetricEvaluator::MetricEvaluator(Spectrum s, UnitaryFamily f)
    : spectrum_(std::move(s)), family_(std::move(f)) {
  check_dims(spectrum_, family_);
  weights_ = sqrt_weights(spectrum_);
  const auto n = static_cast<Eigen::Index>(family_.dim());
  const auto p = static_cast<Eigen::Index>(family_.parameter_count());
  if (family_.is_real()) {
    real_frame_.resize(n * n, p);
    real_qr_ = Eigen::HouseholderQR<Eigen::MatrixXd>(n * n, p);
  } else {
    frame_.resize(n * n, p);
    qr_ = Eigen::HouseholderQR<Eigen::MatrixXcd>(n * n, p);
  }
}

namespace {

// Writes D * diag(w), flattened environment-major, into column k.
template <typename Frame, typename Matrix>
void store_column(Frame& frame, Eigen::Index k, const Matrix& d,
                  const Eigen::VectorXd& w) {
  const Eigen::Index n = d.rows();
  for (Eigen::Index e = 0; e < n; ++e) {
    for (Eigen::Index s = 0; s < n; ++s) frame(e * n + s, k) = d(e, s) * w(s);
  }
}

template <typename Qr>
double abs_det_r(const Qr& qr) {
  double v = 1.0;
  const auto diag = qr.matrixQR().diagonal();
  for (Eigen::Index i = 0; i < diag.size(); ++i) v *= std::abs(diag(i));
  return v;
}

}  // namespace

void MetricEvaluator::fill(std::span<const double> xi) {
  family_.realize_with_derivatives(xi, ws_, value_, derivs_);
  for (std::size_t k = 0; k < derivs_.size(); ++k) {
    store_column(frame_, static_cast<Eigen::Index>(k), derivs_[k], weights_);
  }
}

void MetricEvaluator::fill_real(std::span<const double> xi) {
  family_.realize_with_derivatives(xi, real_ws_, real_value_, real_derivs_);
  for (std::size_t k = 0; k < real_derivs_.size(); ++k) {
    store_column(real_frame_, static_cast<Eigen::Index>(k), real_derivs_[k], weights_);
  }
}

GramMetric MetricEvaluator::metric(std::span<const double> xi) {
  GramMetric m;
  if (family_.is_real()) {
    fill_real(xi);
    m.g = (real_frame_.transpose() * real_frame_).cast<std::complex<double>>();
    real_qr_.compute(real_frame_);
    m.sqrt_det = abs_det_r(real_qr_);
  } else {
    fill(xi);
    m.g = frame_.adjoint() * frame_;
    qr_.compute(frame_);
    m.sqrt_det = abs_det_r(qr_);
  }
  // The direct determinant of g guards the Hermitian convention.
  checked_metric_determinant(m.g);
  m.det = m.sqrt_det * m.sqrt_det;
  return m;
}

double MetricEvaluator::volume_element(std::span<const double> xi) {
  if (family_.is_real()) {
    fill_real(xi);
    real_qr_.compute(real_frame_);
    return abs_det_r(real_qr_);
  }
  fill(xi);
  qr_.compute(frame_);
  return abs_det_r(qr_);
}

}  // namespace soi
