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

#include "soi/coarse_graining.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "soi/parallel.hpp"
#include "soi/random.hpp"
#include "soi/volume.hpp"

namespace soi {

Spectrum stick_breaking(std::span<const double> uniforms) {
  const std::size_t n = uniforms.size() + 1;
  if (n < 2) throw std::invalid_argument("stick breaking needs N >= 2");
  std::vector<double> lambda(n);
  double remaining = 1.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double u = uniforms[k];
    if (!(u >= 0.0 && u <= 1.0)) {
      throw std::invalid_argument("stick breaking needs uniforms in [0, 1]");
    }
    const auto exponent = 1.0 / static_cast<double>(n - 1 - k);
    // N = 3, k = 0: u^{1/2}; the last break uses u itself.
    const double keep = exponent == 0.5 ? std::sqrt(u) : std::pow(u, exponent);
    lambda[k] = remaining * (1.0 - keep);
    remaining *= keep;
  }
  lambda[n - 1] = remaining;
  return Spectrum(std::move(lambda));
}

std::vector<Spectrum> sample_simplex(std::size_t n, std::size_t count,
                                     std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("simplex sampling needs N >= 2");
  std::vector<Spectrum> out;
  out.reserve(count);
  std::vector<double> u(n - 1);
  for (std::size_t i = 0; i < count; ++i) {
    CounterStream stream(seed, i);
    for (double& x : u) x = stream.uniform();
    out.push_back(stick_breaking(u));
  }
  return out;
}

SimplexGrid build_grid(std::size_t ell, bool weyl_filter) {
  if (ell == 0) throw std::invalid_argument("grid needs ell >= 1");
  SimplexGrid grid;
  grid.ell = ell;
  grid.weyl_filter = weyl_filter;
  const auto l = static_cast<double>(ell);
  for (std::size_t i1 = 0; i1 < ell; ++i1) {
    const double eta1 = (static_cast<double>(i1) + 0.5) / l;
    if (weyl_filter && !(eta1 > 0.25)) continue;
    for (std::size_t i2 = 0; i2 < ell; ++i2) {
      const double eta2 = (static_cast<double>(i2) + 0.5) / l;
      if (weyl_filter && !(eta2 > 0.5)) continue;
      const double u[2] = {eta1, eta2};
      grid.cells.push_back({i1 * ell + i2 + 1, eta1, eta2, stick_breaking(u)});
    }
  }
  return grid;
}

std::string to_string(Observable o) {
  switch (o) {
    case Observable::kVolume:
      return "volume";
    case Observable::kVonNeumann:
      return "von_neumann";
    case Observable::kLinear:
      return "linear";
  }
  return "?";
}

Observable parse_observable(const std::string& name) {
  if (name == "volume") return Observable::kVolume;
  if (name == "von_neumann") return Observable::kVonNeumann;
  if (name == "linear") return Observable::kLinear;
  throw std::invalid_argument("unknown observable '" + name +
                              "' (expected volume, von_neumann, linear)");
}

double observable_value(Observable o, const Spectrum& s) {
  switch (o) {
    case Observable::kVolume:
      return normalized_volume(ClosedFormGroup::kSO3, s);
    case Observable::kVonNeumann:
      return normalized_von_neumann(s);
    case Observable::kLinear:
      return normalized_linear(s);
  }
  throw std::invalid_argument("unknown observable");
}

std::size_t segment_of(double value, std::size_t k) {
  if (k == 0) throw std::invalid_argument("segment count must be >= 1");
  if (value <= 0.0) return 1;
  const auto a = static_cast<std::size_t>(std::ceil(value * static_cast<double>(k)));
  return std::clamp<std::size_t>(a, 1, k);
}

MacrostateBinning bin_cells(const SimplexGrid& grid, Observable o,
                            std::size_t k, unsigned workers) {
  if (k == 0) throw std::invalid_argument("segment count must be >= 1");
  const std::size_t n = grid.cells.size();
  MacrostateBinning b;
  b.k = k;
  b.observable = o;
  b.values.resize(n);
  std::vector<double> svn(n);
  parallel_chunks(
      n,
      [&](std::size_t begin, std::size_t end) {
        for (std::size_t c = begin; c < end; ++c) {
          const Spectrum& s = grid.cells[c].lambda;
          b.values[c] = observable_value(o, s);
          svn[c] = normalized_von_neumann(s);
        }
      },
      workers);

  b.assignments.resize(n);
  b.counts.assign(k, 0);
  std::vector<double> svn_sum(k, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t a = segment_of(b.values[c], k);
    b.assignments[c] = a;
    ++b.counts[a - 1];
    svn_sum[a - 1] += svn[c];
  }
  b.fractions.resize(k);
  b.avg_svn.resize(k);
  for (std::size_t a = 0; a < k; ++a) {
    b.fractions[a] = n == 0 ? 0.0 : static_cast<double>(b.counts[a]) / static_cast<double>(n);
    b.avg_svn[a] = b.counts[a] == 0 ? 0.0 : svn_sum[a] / static_cast<double>(b.counts[a]);
  }
  return b;
}

}  // namespace soi
