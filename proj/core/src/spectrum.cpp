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

#include "soi/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "soi/errors.hpp"

namespace soi {

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw std::invalid_argument("spectrum needs at least two eigenvalues");
  }
  for (double& v : values_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("spectrum contains a non-finite value");
    }
    if (v < 0.0) {
      if (v < -kSumTolerance) {
        throw std::invalid_argument("spectrum contains a negative eigenvalue: " +
                                    std::to_string(v));
      }
      v = 0.0;
    }
  }
  const double total = std::accumulate(values_.begin(), values_.end(), 0.0);
  if (std::abs(total - 1.0) > kRenormalizeTolerance) {
    throw std::invalid_argument("spectrum sums to " + std::to_string(total) +
                                ", not 1");
  }
  if (total != 1.0) {
    for (double& v : values_) v /= total;
  }
  for (double v : values_) {
    if (v > 1.0) {
      throw std::invalid_argument("spectrum eigenvalue exceeds 1");
    }
  }
}

Spectrum Spectrum::maximally_mixed(std::size_t dim) {
  if (dim < 2) throw std::invalid_argument("dimension must be >= 2");
  return Spectrum(std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

bool Spectrum::is_pure(double tol) const noexcept {
  return std::any_of(values_.begin(), values_.end(),
                     [tol](double v) { return std::abs(v - 1.0) <= tol; });
}

double von_neumann_entropy(const Spectrum& s, LogBase base) {
  double h = 0.0;
  for (double v : s.values()) {
    if (v > 0.0) h -= v * std::log(v);
  }
  h = std::max(h, 0.0);
  return base == LogBase::kTwo ? h / std::numbers::ln2 : h;
}

double purity(const Spectrum& s) {
  double p = 0.0;
  for (double v : s.values()) p += v * v;
  return p;
}

double linear_entropy(const Spectrum& s) { return 1.0 - purity(s); }

double max_entropy(std::size_t dim, EntropyKind kind, LogBase base) {
  const auto n = static_cast<double>(dim);
  if (kind == EntropyKind::kLinear) return 1.0 - 1.0 / n;
  return base == LogBase::kTwo ? std::log2(n) : std::log(n);
}

double negentropy(const Spectrum& s, LogBase base) {
  const double gap = max_entropy(s.dim(), EntropyKind::kVonNeumann, base) -
                     von_neumann_entropy(s, base);
  return std::max(gap, 0.0);
}

double normalize_entropy(double value, const Spectrum& s, EntropyKind kind,
                         LogBase base) {
  const double top = max_entropy(s.dim(), kind, base);
  if (value > top + 1e-9) {
    throw std::invalid_argument("entropy value exceeds its maximum over the simplex");
  }
  return std::clamp(value / top, 0.0, 1.0);
}

double normalized_von_neumann(const Spectrum& s) {
  return normalize_entropy(von_neumann_entropy(s), s, EntropyKind::kVonNeumann);
}

double normalized_linear(const Spectrum& s) {
  return normalize_entropy(linear_entropy(s), s, EntropyKind::kLinear);
}

EntropyReport entropy_report(const Spectrum& s) {
  EntropyReport r;
  r.von_neumann_nats = von_neumann_entropy(s, LogBase::kNatural);
  r.von_neumann_bits = r.von_neumann_nats / std::numbers::ln2;
  r.purity = purity(s);
  r.linear = 1.0 - r.purity;
  r.normalized_von_neumann = normalized_von_neumann(s);
  r.normalized_linear = normalized_linear(s);
  r.negentropy_nats = negentropy(s, LogBase::kNatural);
  return r;
}

}  // namespace soi
