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

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace soi {

enum class GroupKind { kUnitary, kSpecialUnitary2, kSpecialOrthogonal };

struct ParameterInfo {
  std::string name;
  double lower = 0.0;
  double upper = 0.0;
};

/// The 2x2 block of E^(i,j)(phi, psi, chi) living on rows/columns (i, j).
/// All other entries of the plane rotation are those of the identity.
struct PlaneBlock {
  std::complex<double> ii, ij, ji, jj;
};

PlaneBlock plane_block(double phi, double psi, double chi);

/// Dense E^(i,j)(phi, psi, chi) of size n. Indices are 0-based, i < j < n.
Eigen::MatrixXcd plane_rotation(std::size_t n, std::size_t i, std::size_t j,
                                double phi, double psi, double chi);

/// One factor of the product. Each angle either reads a slot of the
/// parameter vector or is pinned to zero (kFixed).
struct PlaneFactor {
  static constexpr int kFixed = -1;
  std::size_t i = 0;
  std::size_t j = 0;
  int phi = kFixed;
  int psi = kFixed;
  int chi = kFixed;
};

/// Scratch space for repeated realize/derivative calls on one family.
/// Not shareable between threads. The real variant serves SO(N) charts.
template <typename Scalar>
struct BasicFactorizationWorkspace {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  std::vector<Matrix> prefix;
  std::vector<Matrix> suffix;
  std::vector<PlaneBlock> blocks;
};

using FactorizationWorkspace = BasicFactorizationWorkspace<std::complex<double>>;
using RealFactorizationWorkspace = BasicFactorizationWorkspace<double>;

/// Parameterized unitary U(xi) = e^{i alpha} E_1 E_2 ... E_{N-1} with
/// E_1 = E^(1,2), E_m = E^(m,m+1) E^(m-1,m+1) ... E^(1,m+1).
///
/// Parameter order:
///   SO(N): phi_ij for planes in lexicographic (i, j) order.
///   SU(2): (phi, psi, chi).
///   U(N):  for each plane in lexicographic order phi_ij, psi_ij and, for
///          planes (1, j), chi_1j; alpha last.
class UnitaryFamily {
 public:
  static UnitaryFamily unitary(std::size_t dim);
  static UnitaryFamily su2();
  static UnitaryFamily special_orthogonal(std::size_t dim);

  GroupKind group() const noexcept { return group_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t parameter_count() const noexcept { return domain_.size(); }
  std::span<const ParameterInfo> parameter_domain() const noexcept {
    return domain_;
  }
  std::span<const PlaneFactor> factors() const noexcept { return factors_; }
  /// Slot of the global phase, or -1.
  int alpha_index() const noexcept { return alpha_; }
  bool is_real() const noexcept { return group_ == GroupKind::kSpecialOrthogonal; }
  std::string name() const;

  /// Product of the parameter interval lengths.
  double box_volume() const;

  /// Throws ParameterRangeError naming the first offending parameter, or
  /// std::invalid_argument on a length mismatch.
  void check_domain(std::span<const double> xi) const;

  Eigen::MatrixXcd realize(std::span<const double> xi) const;
  Eigen::MatrixXcd derivative(std::span<const double> xi, std::size_t k) const;

  /// U(xi) and all partial derivatives in one pass (prefix/suffix products).
  /// The Scalar = double instantiation requires is_real().
  template <typename Scalar>
  void realize_with_derivatives(
      std::span<const double> xi, BasicFactorizationWorkspace<Scalar>& ws,
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& value,
      std::vector<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>>&
          derivatives) const;

 private:
  UnitaryFamily(GroupKind group, std::size_t dim) : group_(group), dim_(dim) {}

  template <typename Scalar>
  void prepare(std::span<const double> xi,
               BasicFactorizationWorkspace<Scalar>& ws) const;
  std::complex<double> phase(std::span<const double> xi) const;
  PlaneBlock derivative_block(std::span<const double> xi, const PlaneFactor& f,
                              std::size_t k) const;

  GroupKind group_;
  std::size_t dim_;
  std::vector<ParameterInfo> domain_;
  std::vector<PlaneFactor> factors_;
  std::vector<int> owner_;  // parameter slot -> factor index (-1 for alpha)
  int alpha_ = -1;
};

}  // namespace soi
