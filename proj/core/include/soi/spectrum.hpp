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
#include <initializer_list>
#include <span>
#include <vector>

namespace soi {

/// Eigenvalues of a density operator in a fixed basis: a point on the
/// probability simplex.
///
/// Construction clamps entries in [-1e-12, 0) to zero and renormalizes
/// inputs whose sum is within 1e-9 of one; anything further off is rejected
/// with std::invalid_argument. After construction the values sum to one
/// within 1e-12.
class Spectrum {
 public:
  static constexpr double kSumTolerance = 1e-12;
  static constexpr double kRenormalizeTolerance = 1e-9;

  explicit Spectrum(std::vector<double> values);
  Spectrum(std::initializer_list<double> values)
      : Spectrum(std::vector<double>(values)) {}

  /// (1/N, ..., 1/N)
  static Spectrum maximally_mixed(std::size_t dim);

  std::size_t dim() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  bool is_pure(double tol = 1e-12) const noexcept;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<double> values_;
};

enum class LogBase { kNatural, kTwo };
enum class EntropyKind { kVonNeumann, kLinear };

/// -sum l log l with 0 log 0 = 0.
double von_neumann_entropy(const Spectrum& s, LogBase base = LogBase::kNatural);

/// 1 - sum l^2
double linear_entropy(const Spectrum& s);

double purity(const Spectrum& s);

/// ln N - S_VN (or log2 N - S_VN in bits).
double negentropy(const Spectrum& s, LogBase base = LogBase::kNatural);

/// Maximum of the entropy over the simplex of dimension `dim`.
double max_entropy(std::size_t dim, EntropyKind kind,
                   LogBase base = LogBase::kNatural);

/// Divides `value` by its maximum over the simplex of s's dimension. Values
/// exceeding that maximum by more than 1e-9 raise std::invalid_argument;
/// smaller overshoots are clamped to 1.
double normalize_entropy(double value, const Spectrum& s, EntropyKind kind,
                         LogBase base = LogBase::kNatural);

/// Convenience: normalized von Neumann entropy of s.
double normalized_von_neumann(const Spectrum& s);
/// Convenience: normalized linear entropy of s.
double normalized_linear(const Spectrum& s);

struct EntropyReport {
  double von_neumann_nats = 0.0;
  double von_neumann_bits = 0.0;
  double linear = 0.0;
  double purity = 1.0;
  double normalized_von_neumann = 0.0;
  double normalized_linear = 0.0;
  double negentropy_nats = 0.0;
};

EntropyReport entropy_report(const Spectrum& s);

}  // namespace soi
