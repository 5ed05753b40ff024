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

#include "soi/unitary.hpp"

#include <cmath>
#include <map>
#include <type_traits>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "soi/errors.hpp"

namespace soi {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::complex<double> kI{0.0, 1.0};

std::complex<double> expi(double angle) {
  return {std::cos(angle), std::sin(angle)};
}

double angle_at(std::span<const double> xi, int slot) {
  return slot == PlaneFactor::kFixed ? 0.0 : xi[static_cast<std::size_t>(slot)];
}

std::string plane_suffix(std::size_t i, std::size_t j) {
  const std::string a = std::to_string(i + 1);
  const std::string b = std::to_string(j + 1);
  return j + 1 < 10 ? "_" + a + b : "_" + a + "_" + b;
}

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Block entries in the working scalar type; SO(N) blocks are real.
template <typename Scalar>
struct TypedBlock {
  Scalar ii, ij, ji, jj;
};

template <typename Scalar>
TypedBlock<Scalar> typed(const PlaneBlock& b) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return {b.ii.real(), b.ij.real(), b.ji.real(), b.jj.real()};
  } else {
    return {b.ii, b.ij, b.ji, b.jj};
  }
}

// M <- M * E on columns (i, j).
template <typename Scalar>
void apply_right(Mat<Scalar>& m, std::size_t i, std::size_t j,
                 const TypedBlock<Scalar>& b) {
  const auto n = m.rows();
  const auto ci = static_cast<Eigen::Index>(i);
  const auto cj = static_cast<Eigen::Index>(j);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Scalar mi = m(r, ci);
    const Scalar mj = m(r, cj);
    m(r, ci) = mi * b.ii + mj * b.ji;
    m(r, cj) = mi * b.ij + mj * b.jj;
  }
}

// M <- E * M on rows (i, j).
template <typename Scalar>
void apply_left(Mat<Scalar>& m, std::size_t i, std::size_t j,
                const TypedBlock<Scalar>& b) {
  const auto n = m.cols();
  const auto ri = static_cast<Eigen::Index>(i);
  const auto rj = static_cast<Eigen::Index>(j);
  for (Eigen::Index c = 0; c < n; ++c) {
    const Scalar mi = m(ri, c);
    const Scalar mj = m(rj, c);
    m(ri, c) = b.ii * mi + b.ij * mj;
    m(rj, c) = b.ji * mi + b.jj * mj;
  }
}

// Factor planes in product order: E^(1,2), then for each later column j
// the planes (j-1, j), (j-2, j), ..., (0, j).
std::vector<std::pair<std::size_t, std::size_t>> product_planes(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> planes;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = j; i-- > 0;) planes.emplace_back(i, j);
  }
  return planes;
}

}  // namespace

PlaneBlock plane_block(double phi, double psi, double chi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return {expi(psi) * c, expi(chi) * s, -expi(-chi) * s, expi(-psi) * c};
}

Eigen::MatrixXcd plane_rotation(std::size_t n, std::size_t i, std::size_t j,
                                double phi, double psi, double chi) {
  if (!(i < j && j < n)) {
    throw std::invalid_argument("plane rotation needs 0 <= i < j < n");
  }
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Identity(n, n);
  const PlaneBlock b = plane_block(phi, psi, chi);
  e(i, i) = b.ii;
  e(i, j) = b.ij;
  e(j, i) = b.ji;
  e(j, j) = b.jj;
  return e;
}

UnitaryFamily UnitaryFamily::special_orthogonal(std::size_t dim) {
  if (dim < 2) throw std::invalid_argument("SO(N) needs N >= 2");
  UnitaryFamily f(GroupKind::kSpecialOrthogonal, dim);
  std::map<std::pair<std::size_t, std::size_t>, int> phi_slot;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      phi_slot[{i, j}] = static_cast<int>(f.domain_.size());
      f.domain_.push_back({"phi" + plane_suffix(i, j), 0.0, kHalfPi});
    }
  }
  for (auto [i, j] : product_planes(dim)) {
    f.factors_.push_back({i, j, phi_slot.at({i, j}), PlaneFactor::kFixed,
                          PlaneFactor::kFixed});
  }
  f.owner_.assign(f.domain_.size(), -1);
  for (std::size_t k = 0; k < f.factors_.size(); ++k) {
    f.owner_[static_cast<std::size_t>(f.factors_[k].phi)] = static_cast<int>(k);
  }
  return f;
}

UnitaryFamily UnitaryFamily::su2() {
  UnitaryFamily f(GroupKind::kSpecialUnitary2, 2);
  f.domain_ = {{"phi", 0.0, kHalfPi}, {"psi", 0.0, kTwoPi}, {"chi", 0.0, kTwoPi}};
  f.factors_ = {{0, 1, 0, 1, 2}};
  f.owner_ = {0, 0, 0};
  return f;
}

UnitaryFamily UnitaryFamily::unitary(std::size_t dim) {
  if (dim < 2) throw std::invalid_argument("U(N) needs N >= 2");
  UnitaryFamily f(GroupKind::kUnitary, dim);
  struct Slots {
    int phi, psi, chi;
  };
  std::map<std::pair<std::size_t, std::size_t>, Slots> slots;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      Slots s{PlaneFactor::kFixed, PlaneFactor::kFixed, PlaneFactor::kFixed};
      const std::string sfx = plane_suffix(i, j);
      s.phi = static_cast<int>(f.domain_.size());
      f.domain_.push_back({"phi" + sfx, 0.0, kHalfPi});
      s.psi = static_cast<int>(f.domain_.size());
      f.domain_.push_back({"psi" + sfx, 0.0, kTwoPi});
      if (i == 0) {
        s.chi = static_cast<int>(f.domain_.size());
        f.domain_.push_back({"chi" + sfx, 0.0, kTwoPi});
      }
      slots[{i, j}] = s;
    }
  }
  f.alpha_ = static_cast<int>(f.domain_.size());
  f.domain_.push_back({"alpha", 0.0, kTwoPi});

  for (auto [i, j] : product_planes(dim)) {
    const Slots s = slots.at({i, j});
    f.factors_.push_back({i, j, s.phi, s.psi, s.chi});
  }
  f.owner_.assign(f.domain_.size(), -1);
  for (std::size_t k = 0; k < f.factors_.size(); ++k) {
    for (int slot : {f.factors_[k].phi, f.factors_[k].psi, f.factors_[k].chi}) {
      if (slot != PlaneFactor::kFixed) {
        f.owner_[static_cast<std::size_t>(slot)] = static_cast<int>(k);
      }
    }
  }
  return f;
}

std::string UnitaryFamily::name() const {
  switch (group_) {
    case GroupKind::kUnitary:
      return "U(" + std::to_string(dim_) + ")";
    case GroupKind::kSpecialUnitary2:
      return "SU(2)";
    case GroupKind::kSpecialOrthogonal:
      return "SO(" + std::to_string(dim_) + ")";
  }
  return "?";
}

double UnitaryFamily::box_volume() const {
  double v = 1.0;
  for (const auto& p : domain_) v *= p.upper - p.lower;
  return v;
}

void UnitaryFamily::check_domain(std::span<const double> xi) const {
  if (xi.size() != domain_.size()) {
    throw std::invalid_argument(name() + " expects " +
                                std::to_string(domain_.size()) +
                                " parameters, got " + std::to_string(xi.size()));
  }
  for (std::size_t k = 0; k < xi.size(); ++k) {
    const auto& p = domain_[k];
    if (!(xi[k] >= p.lower && xi[k] <= p.upper)) {
      throw ParameterRangeError(p.name, xi[k], p.lower, p.upper);
    }
  }
}

std::complex<double> UnitaryFamily::phase(std::span<const double> xi) const {
  return alpha_ < 0 ? std::complex<double>{1.0, 0.0}
                    : expi(xi[static_cast<std::size_t>(alpha_)]);
}

template <typename Scalar>
void UnitaryFamily::prepare(std::span<const double> xi,
                            BasicFactorizationWorkspace<Scalar>& ws) const {
  const std::size_t m = factors_.size();
  const auto n = static_cast<Eigen::Index>(dim_);
  ws.blocks.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    const auto& f = factors_[k];
    ws.blocks[k] = plane_block(angle_at(xi, f.phi), angle_at(xi, f.psi),
                               angle_at(xi, f.chi));
  }
  ws.prefix.resize(m + 1);
  ws.suffix.resize(m + 1);
  ws.prefix[0].setIdentity(n, n);
  for (std::size_t k = 0; k < m; ++k) {
    ws.prefix[k + 1] = ws.prefix[k];
    apply_right<Scalar>(ws.prefix[k + 1], factors_[k].i, factors_[k].j,
                        typed<Scalar>(ws.blocks[k]));
  }
  ws.suffix[m].setIdentity(n, n);
  for (std::size_t k = m; k-- > 0;) {
    ws.suffix[k] = ws.suffix[k + 1];
    apply_left<Scalar>(ws.suffix[k], factors_[k].i, factors_[k].j,
                       typed<Scalar>(ws.blocks[k]));
  }
}

PlaneBlock UnitaryFamily::derivative_block(std::span<const double> xi,
                                           const PlaneFactor& f,
                                           std::size_t k) const {
  const double phi = angle_at(xi, f.phi);
  const double psi = angle_at(xi, f.psi);
  const double chi = angle_at(xi, f.chi);
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const int slot = static_cast<int>(k);
  if (slot == f.phi) {
    return {-expi(psi) * s, expi(chi) * c, -expi(-chi) * c, -expi(-psi) * s};
  }
  if (slot == f.psi) {
    return {kI * expi(psi) * c, 0.0, 0.0, -kI * expi(-psi) * c};
  }
  return {0.0, kI * expi(chi) * s, kI * expi(-chi) * s, 0.0};
}

Eigen::MatrixXcd UnitaryFamily::realize(std::span<const double> xi) const {
  check_domain(xi);
  const auto n = static_cast<Eigen::Index>(dim_);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(n, n);
  for (const auto& f : factors_) {
    apply_right(u, f.i, f.j,
                typed<std::complex<double>>(plane_block(
                    angle_at(xi, f.phi), angle_at(xi, f.psi), angle_at(xi, f.chi))));
  }
  if (alpha_ >= 0) u *= phase(xi);
  return u;
}

template <typename Scalar>
void UnitaryFamily::realize_with_derivatives(
    std::span<const double> xi, BasicFactorizationWorkspace<Scalar>& ws,
    Mat<Scalar>& value, std::vector<Mat<Scalar>>& derivatives) const {
  if constexpr (std::is_same_v<Scalar, double>) {
    if (!is_real()) {
      throw std::logic_error(name() + " is not a real chart");
    }
  }
  check_domain(xi);
  prepare(xi, ws);
  const std::size_t m = factors_.size();
  const auto n = static_cast<Eigen::Index>(dim_);
  value = ws.prefix[m];
  Scalar ph{1.0};
  if constexpr (!std::is_same_v<Scalar, double>) {
    ph = phase(xi);
    if (alpha_ >= 0) value *= ph;
  }

  derivatives.resize(domain_.size());
  for (std::size_t k = 0; k < domain_.size(); ++k) {
    auto& out = derivatives[k];
    if constexpr (!std::is_same_v<Scalar, double>) {
      if (static_cast<int>(k) == alpha_) {
        out = kI * value;
        continue;
      }
    }
    const auto fk = static_cast<std::size_t>(owner_[k]);
    const PlaneFactor& f = factors_[fk];
    const TypedBlock<Scalar> d = typed<Scalar>(derivative_block(xi, f, k));
    const auto& left = ws.prefix[fk];
    const auto& right = ws.suffix[fk + 1];
    const auto ci = static_cast<Eigen::Index>(f.i);
    const auto cj = static_cast<Eigen::Index>(f.j);
    // Only columns (i, j) of left * E' are nonzero, so the derivative is a
    // sum of two outer products with rows (i, j) of the suffix.
    out.resize(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      const Scalar a = (left(r, ci) * d.ii + left(r, cj) * d.ji) * ph;
      const Scalar b = (left(r, ci) * d.ij + left(r, cj) * d.jj) * ph;
      for (Eigen::Index c = 0; c < n; ++c) {
        out(r, c) = a * right(ci, c) + b * right(cj, c);
      }
    }
  }
}

template void UnitaryFamily::realize_with_derivatives<double>(
    std::span<const double>, BasicFactorizationWorkspace<double>&, Mat<double>&,
    std::vector<Mat<double>>&) const;
template void UnitaryFamily::realize_with_derivatives<std::complex<double>>(
    std::span<const double>, BasicFactorizationWorkspace<std::complex<double>>&,
    Mat<std::complex<double>>&, std::vector<Mat<std::complex<double>>>&) const;

Eigen::MatrixXcd UnitaryFamily::derivative(std::span<const double> xi,
                                           std::size_t k) const {
  if (k >= domain_.size()) {
    throw std::out_of_range("parameter index " + std::to_string(k) +
                            " out of range for " + name());
  }
  FactorizationWorkspace ws;
  Eigen::MatrixXcd value;
  std::vector<Eigen::MatrixXcd> all;
  realize_with_derivatives(xi, ws, value, all);
  return std::move(all[k]);
}

}  // namespace soi
