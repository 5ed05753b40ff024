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

#include <cstdio>
#include <exception>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "soi/errors.hpp"
#include "soi/reports/commands.hpp"
#include "soi/reports/config.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitNumeric = 3;

using soi::reports::RunConfig;

void add_common(CLI::App& cmd, RunConfig& c) {
  cmd.add_option("--out", c.out, "Output directory");
  cmd.add_option("--seed", c.seed, "Random seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Surfaces-of-ignorance volumes and entanglement coarse-graining reports"};
  app.require_subcommand(0, 1);

  std::string config_path;
  std::string out_override;
  app.add_option("--config", config_path, "Rerun from an emitted <base>.config.json");
  app.add_option("--out", out_override, "Output directory (with --config)");

  std::map<std::string, RunConfig> configs;
  for (const auto& name : soi::reports::command_names()) {
    configs.emplace(name, soi::reports::defaults_for(name));
  }

  {
    auto& c = configs.at("volume");
    auto* cmd = app.add_subcommand("volume", "Surface-of-ignorance volume of one spectrum");
    cmd->add_option("--group", c.group, "su2, soN or uN")->capture_default_str();
    cmd->add_option("--spectrum", c.spectrum, "Comma-separated eigenvalues")->delimiter(',');
    cmd->add_option("--method", c.method, "closed, quadrature or mc")->capture_default_str();
    cmd->add_option("--samples", c.samples, "Monte Carlo samples")->capture_default_str();
    cmd->add_option("--nodes", c.nodes, "Gauss-Legendre nodes per axis")->capture_default_str();
    add_common(*cmd, c);
  }
  {
    auto& c = configs.at("curves");
    auto* cmd = app.add_subcommand("curves", "Normalized volume and entropy curves (su2, so3)");
    cmd->add_option("--group", c.group, "su2 or so3")->capture_default_str();
    cmd->add_option("--nodes", c.nodes, "Grid points per lambda axis")->capture_default_str();
    add_common(*cmd, c);
  }
  {
    auto& c = configs.at("coarse-grain");
    auto* cmd = app.add_subcommand("coarse-grain", "Macrostate fractions on the 3-simplex");
    cmd->add_option("--ell", c.ell, "Cells per eta axis")->capture_default_str();
    cmd->add_option("--k", c.k, "Number of segments")->capture_default_str();
    cmd->add_option("--observable", c.observables, "volume, von_neumann, linear")
        ->delimiter(',');
    cmd->add_flag("--weyl-filter,!--no-weyl-filter", c.weyl_filter,
                  "Restrict to eta1 > 1/4, eta2 > 1/2 (default on)");
    add_common(*cmd, c);
  }
  {
    auto& c = configs.at("so4-compare");
    auto* cmd = app.add_subcommand("so4-compare",
                                   "Monte Carlo SO(4) volumes vs the pairwise product");
    cmd->add_option("--samples", c.samples, "Monte Carlo samples per spectrum")
        ->capture_default_str();
    cmd->add_option("--count", c.count, "Number of uniform 4-spectra")->capture_default_str();
    add_common(*cmd, c);
  }
  {
    auto& c = configs.at("asymptotics");
    auto* cmd = app.add_subcommand("asymptotics", "SO(N) marginal-family thresholds");
    cmd->add_option("--n-list", c.n_list, "Comma-separated dimensions")->delimiter(',');
    cmd->add_option("--level", c.level, "Normalized volume level")->capture_default_str();
    cmd->add_option("--weighting", c.weighting, "uniform or volume")->capture_default_str();
    add_common(*cmd, c);
  }
  {
    auto& c = configs.at("fidelity");
    auto* cmd = app.add_subcommand("fidelity", "Uhlmann-Jozsa fidelity, closed form or SOI search");
    cmd->add_option("--spectrum", c.spectrum, "Eigenvalues of rho")->delimiter(',');
    cmd->add_option("--sigma-spectrum", c.sigma_spectrum, "Eigenvalues of sigma")
        ->delimiter(',');
    cmd->add_option("--rho-rotation", c.rho_rotation, "U(N) chart parameters for rho's basis")
        ->delimiter(',');
    cmd->add_option("--sigma-rotation", c.sigma_rotation,
                    "U(N) chart parameters for sigma's basis")
        ->delimiter(',');
    cmd->add_option("--method", c.method, "closed or soi")->capture_default_str();
    cmd->add_option("--budget", c.budget, "Number of random starts")->capture_default_str();
    add_common(*cmd, c);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    RunConfig config;
    if (!config_path.empty()) {
      config = soi::reports::load_config(config_path);
      if (!out_override.empty()) config.out = out_override;
    } else {
      const auto chosen = app.get_subcommands();
      if (chosen.empty()) {
        std::cerr << "a command or --config is required\n" << app.help();
        return kExitInvalid;
      }
      config = configs.at(chosen.front()->get_name());
    }
    const auto result = soi::reports::run_command(config);
    for (const auto& f : result.files) std::cout << f.string() << '\n';
    std::cout << result.summary.dump() << '\n';
  } catch (const soi::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
