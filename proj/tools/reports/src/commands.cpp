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

#include "soi/reports/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "soi/asymptotics.hpp"
#include "soi/coarse_graining.hpp"
#include "soi/fidelity.hpp"
#include "soi/random.hpp"
#include "soi/reports/csv.hpp"
#include "soi/spectrum.hpp"

namespace soi::reports {
namespace {

namespace fs = std::filesystem;

void write_json(const fs::path& path, const nlohmann::json& j) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

std::size_t parse_dim(const std::string& text, std::size_t prefix) {
  const std::string digits = text.substr(prefix);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("bad group '" + text + "'");
  }
  const auto n = static_cast<std::size_t>(std::stoul(digits));
  if (n < 2) throw std::invalid_argument("group dimension must be >= 2");
  return n;
}

nlohmann::json volume_json(const VolumeResult& r) {
  return {{"value", r.value},
          {"method", to_string(r.method)},
          {"std_error", r.std_error},
          {"samples_or_nodes", r.samples_or_nodes},
          {"seed", r.seed}};
}

RunOutput run_volume(const RunConfig& c, const fs::path& base) {
  const GroupSpec g = parse_group(c.group);
  const Spectrum s(c.spectrum);
  VolumeResult r;
  if (c.method == "closed") {
    r = closed_form_volume(g.closed_form(), s);
  } else if (c.method == "quadrature") {
    r = quadrature_volume(s, g.family(), c.nodes);
  } else if (c.method == "mc") {
    r = monte_carlo_volume(s, g.family(), c.samples, c.seed);
  } else {
    throw std::invalid_argument("unknown method '" + c.method +
                                "' (expected closed, quadrature, mc)");
  }
  nlohmann::json j = volume_json(r);
  j["group"] = c.group;
  j["spectrum"] = std::vector<double>(s.values().begin(), s.values().end());
  if (g.kind != GroupKind::kUnitary) {
    j["normalized"] = normalized_volume(g.closed_form(), s);
  }
  nlohmann::json out = {{"config", to_json(c)}, {"result", j}};
  out["config"].erase("out");
  RunOutput ro;
  ro.files.push_back(base.string() + ".json");
  write_json(ro.files.back(), out);
  ro.summary = j;
  return ro;
}

RunOutput run_curves(const RunConfig& c, const fs::path& base) {
  const GroupSpec g = parse_group(c.group);
  if (c.nodes < 2) throw std::invalid_argument("curves need --nodes >= 2");
  const auto steps = static_cast<double>(c.nodes - 1);
  RunOutput ro;
  ro.files.push_back(base.string() + ".csv");
  std::size_t rows = 0;
  if (g.kind == GroupKind::kSpecialUnitary2 && g.dim == 2) {
    CsvWriter csv(ro.files.back(), {"lambda1", "v_norm", "svn_norm", "sl_norm"});
    for (std::size_t i = 0; i < c.nodes; ++i) {
      const double l1 = static_cast<double>(i) / steps;
      const Spectrum s({l1, 1.0 - l1});
      csv.row({l1, normalized_volume(ClosedFormGroup::kSU2, s), normalized_von_neumann(s),
               normalized_linear(s)});
      ++rows;
    }
  } else if (g.kind == GroupKind::kSpecialOrthogonal && g.dim == 3) {
    CsvWriter csv(ro.files.back(),
                  {"lambda1", "lambda2", "v_norm", "svn_norm", "sl_norm"});
    for (std::size_t i = 0; i < c.nodes; ++i) {
      for (std::size_t j = 0; i + j < c.nodes; ++j) {
        const double l1 = static_cast<double>(i) / steps;
        const double l2 = static_cast<double>(j) / steps;
        const Spectrum s({l1, l2, std::max(0.0, 1.0 - l1 - l2)});
        csv.row({l1, l2, normalized_volume(ClosedFormGroup::kSO3, s),
                 normalized_von_neumann(s), normalized_linear(s)});
        ++rows;
      }
    }
  } else {
    throw std::invalid_argument("curves support --group su2 or so3");
  }
  ro.summary = {{"rows", rows}};
  return ro;
}

RunOutput run_coarse_grain(const RunConfig& c, const fs::path& base) {
  if (c.observables.empty()) throw std::invalid_argument("need at least one observable");
  std::vector<Observable> obs;
  for (const auto& name : c.observables) obs.push_back(parse_observable(name));
  const SimplexGrid grid = build_grid(c.ell, c.weyl_filter);
  std::vector<MacrostateBinning> bins;
  for (Observable o : obs) bins.push_back(bin_cells(grid, o, c.k));

  RunOutput ro;
  ro.files.push_back(base.string() + "-cells.csv");
  {
    std::vector<std::string> header = {"cell_id", "eta1", "eta2", "lambda1", "lambda2", "lambda3"};
    for (Observable o : obs) {
      header.push_back(to_string(o) + "_value");
      header.push_back(to_string(o) + "_segment");
    }
    CsvWriter csv(ro.files.back(), header);
    for (std::size_t i = 0; i < grid.cells.size(); ++i) {
      const auto& cell = grid.cells[i];
      std::vector<CsvField> row = {static_cast<unsigned long long>(cell.id), cell.eta1, cell.eta2,
                                   cell.lambda[0], cell.lambda[1], cell.lambda[2]};
      for (const auto& b : bins) {
        row.emplace_back(b.values[i]);
        row.emplace_back(static_cast<unsigned long long>(b.assignments[i]));
      }
      csv.row(row);
    }
  }
  ro.files.push_back(base.string() + "-segments.csv");
  nlohmann::json summary = nlohmann::json::object();
  {
    CsvWriter csv(ro.files.back(),
                  {"observable", "segment", "lower", "upper", "count", "fraction", "avg_svn"});
    const auto kk = static_cast<double>(c.k);
    for (const auto& b : bins) {
      for (std::size_t a = 0; a < b.k; ++a) {
        csv.row({to_string(b.observable), static_cast<unsigned long long>(a + 1),
                 static_cast<double>(a) / kk, static_cast<double>(a + 1) / kk,
                 static_cast<unsigned long long>(b.counts[a]), b.fractions[a], b.avg_svn[a]});
      }
      summary[to_string(b.observable)] = {{"fractions", b.fractions}, {"avg_svn", b.avg_svn}};
    }
  }
  summary["cells"] = grid.cells.size();
  ro.summary = summary;
  return ro;
}

RunOutput run_so4_compare(const RunConfig& c, const fs::path& base) {
  if (c.count == 0) throw std::invalid_argument("so4-compare needs --count >= 1");
  const std::vector<Spectrum> spectra = sample_simplex(4, c.count, c.seed);
  const UnitaryFamily so4 = UnitaryFamily::special_orthogonal(4);
  std::vector<double> product(c.count), mc(c.count);
  for (std::size_t i = 0; i < c.count; ++i) {
    product[i] = closed_form_volume(ClosedFormGroup::kSONProduct, spectra[i]).value;
    mc[i] = monte_carlo_volume(spectra[i], so4, c.samples, mix64(c.seed + i + 1)).value;
  }
  const double pmax = *std::max_element(product.begin(), product.end());
  const double mmax = *std::max_element(mc.begin(), mc.end());
  std::vector<std::size_t> order(c.count);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return product[a] > product[b]; });

  RunOutput ro;
  ro.files.push_back(base.string() + ".csv");
  CsvWriter csv(ro.files.back(), {"k", "v_norm_product", "v_norm_mc"});
  std::vector<double> a, b;
  for (std::size_t r = 0; r < c.count; ++r) {
    const std::size_t i = order[r];
    a.push_back(product[i] / pmax);
    b.push_back(mc[i] / mmax);
    csv.row({static_cast<unsigned long long>(r + 1), a.back(), b.back()});
  }
  const double n = static_cast<double>(c.count);
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0.0, saa = 0.0, sbb = 0.0, dev = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r) {
    sab += (a[r] - ma) * (b[r] - mb);
    saa += (a[r] - ma) * (a[r] - ma);
    sbb += (b[r] - mb) * (b[r] - mb);
    dev = std::max(dev, std::abs(a[r] - b[r]));
  }
  const double pearson = saa > 0.0 && sbb > 0.0 ? sab / std::sqrt(saa * sbb) : 1.0;
  ro.summary = {{"pearson", pearson}, {"max_abs_difference", dev}};
  return ro;
}

RunOutput run_asymptotics(const RunConfig& c, const fs::path& base) {
  if (c.n_list.empty()) throw std::invalid_argument("need a non-empty --n-list");
  const TailWeighting w = parse_weighting(c.weighting);
  RunOutput ro;
  ro.files.push_back(base.string() + ".csv");
  nlohmann::json rows = nlohmann::json::array();
  {
    CsvWriter csv(ro.files.back(), {"N", "lambda1_star", "mass_ratio", "avg_svn"});
    for (std::size_t n : c.n_list) {
      const double star = find_lambda1_star(n, c.level);
      const double ratio = mass_ratio(n, star);
      const double avg = avg_svn_tail(n, star, w);
      csv.row({static_cast<unsigned long long>(n), star, ratio, avg});
      rows.push_back({{"N", n}, {"lambda1_star", star}, {"mass_ratio", ratio}, {"avg_svn", avg}});
    }
  }
  ro.files.push_back(base.string() + "-curves.csv");
  {
    constexpr std::size_t kPoints = 201;
    CsvWriter csv(ro.files.back(), {"N", "lambda1", "v_norm"});
    for (std::size_t n : c.n_list) {
      const double lo = 1.0 / static_cast<double>(n);
      for (std::size_t i = 0; i < kPoints; ++i) {
        const double x = i + 1 == kPoints
                             ? 1.0
                             : lo + (1.0 - lo) * static_cast<double>(i) / (kPoints - 1);
        csv.row({static_cast<unsigned long long>(n), x, vnorm_marginal(n, x)});
      }
    }
  }
  ro.summary = {{"rows", rows}};
  return ro;
}

RotatedState rotated(const std::vector<double>& spectrum, const std::vector<double>& rotation) {
  Spectrum s(spectrum);
  if (rotation.empty()) return RotatedState(std::move(s));
  const UnitaryFamily chart = UnitaryFamily::unitary(s.dim());
  return RotatedState(std::move(s), chart, rotation);
}

RunOutput run_fidelity(const RunConfig& c, const fs::path& base) {
  const RotatedState rho = rotated(c.spectrum, c.rho_rotation);
  const RotatedState sigma = rotated(c.sigma_spectrum, c.sigma_rotation);
  nlohmann::json j = {{"method", c.method}};
  if (c.method == "closed") {
    j["value"] = fidelity_closed(rho, sigma);
  } else if (c.method == "soi") {
    FidelitySearchOptions opt;
    opt.starts = c.budget;
    opt.seed = c.seed;
    const FidelitySearchResult r = fidelity_soi_maximize(rho, sigma, opt);
    j["value"] = r.value;
    j["xi_rho"] = r.xi_rho;
    j["xi_sigma"] = r.xi_sigma;
    j["best_start"] = r.best_start;
    j["closed_form"] = fidelity_closed(rho, sigma);
  } else {
    throw std::invalid_argument("unknown method '" + c.method + "' (expected closed, soi)");
  }
  nlohmann::json out = {{"config", to_json(c)}, {"result", j}};
  out["config"].erase("out");
  RunOutput ro;
  ro.files.push_back(base.string() + ".json");
  write_json(ro.files.back(), out);
  ro.summary = j;
  return ro;
}

}  // namespace

UnitaryFamily GroupSpec::family() const {
  switch (kind) {
    case GroupKind::kSpecialUnitary2:
      return UnitaryFamily::su2();
    case GroupKind::kSpecialOrthogonal:
      return UnitaryFamily::special_orthogonal(dim);
    case GroupKind::kUnitary:
      return UnitaryFamily::unitary(dim);
  }
  throw std::invalid_argument("unknown group");
}

ClosedFormGroup GroupSpec::closed_form() const {
  switch (kind) {
    case GroupKind::kSpecialUnitary2:
      return ClosedFormGroup::kSU2;
    case GroupKind::kSpecialOrthogonal:
      if (dim == 2) return ClosedFormGroup::kSO2;
      if (dim == 3) return ClosedFormGroup::kSO3;
      return ClosedFormGroup::kSONProduct;
    case GroupKind::kUnitary:
      break;
  }
  throw std::invalid_argument("no closed-form volume for U(N)");
}

GroupSpec parse_group(const std::string& text) {
  if (text == "su2") return {GroupKind::kSpecialUnitary2, 2};
  if (text.rfind("so", 0) == 0) return {GroupKind::kSpecialOrthogonal, parse_dim(text, 2)};
  if (text.rfind("u", 0) == 0) return {GroupKind::kUnitary, parse_dim(text, 1)};
  throw std::invalid_argument("unknown group '" + text + "' (expected su2, soN, uN)");
}

RunOutput run_command(const RunConfig& c) {
  const fs::path dir(c.out);
  fs::create_directories(dir);
  const std::string base_name = c.command + "-" + config_hash(c);
  const fs::path base = dir / base_name;

  RunOutput ro;
  if (c.command == "volume") {
    ro = run_volume(c, base);
  } else if (c.command == "curves") {
    ro = run_curves(c, base);
  } else if (c.command == "coarse-grain") {
    ro = run_coarse_grain(c, base);
  } else if (c.command == "so4-compare") {
    ro = run_so4_compare(c, base);
  } else if (c.command == "asymptotics") {
    ro = run_asymptotics(c, base);
  } else if (c.command == "fidelity") {
    ro = run_fidelity(c, base);
  } else {
    throw std::invalid_argument("unknown command '" + c.command + "'");
  }
  ro.base = base_name;
  nlohmann::json cfg = to_json(c);
  cfg.erase("out");
  const fs::path cfg_path = base.string() + ".config.json";
  write_json(cfg_path, cfg);
  ro.files.push_back(cfg_path);
  return ro;
}

}  // namespace soi::reports
