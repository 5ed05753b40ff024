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
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace soi::reports {

/// Every knob of one CLI run. Serializes to JSON; rerunning from the
/// emitted JSON reproduces the run's output files byte for byte.
struct RunConfig {
  std::string command;
  std::string group = "su2";
  std::vector<double> spectrum;
  std::string method = "closed";
  std::uint64_t samples = 100000;
  std::size_t nodes = 32;
  std::uint64_t seed = 1;
  std::size_t ell = 300;
  std::size_t k = 10;
  std::vector<std::string> observables = {"volume", "von_neumann", "linear"};
  bool weyl_filter = true;
  std::vector<std::size_t> n_list = {3, 5, 7, 11, 30};
  double level = 1e-4;
  std::string weighting = "uniform";
  std::size_t budget = 20;
  std::size_t count = 1000;
  // fidelity: rho uses `spectrum`; rotations are U(N) chart parameters
  // (empty = identity).
  std::vector<double> sigma_spectrum;
  std::vector<double> rho_rotation;
  std::vector<double> sigma_rotation;
  /// Output directory. Not part of the config hash.
  std::string out = ".";
};

/// Defaults that differ per command (e.g. curves use 101 grid nodes).
RunConfig defaults_for(const std::string& command);

nlohmann::json to_json(const RunConfig& c);
RunConfig from_json(const nlohmann::json& j);

RunConfig load_config(const std::string& path);

/// 16 hex digits of FNV-1a over the canonical JSON dump, `out` excluded.
std::string config_hash(const RunConfig& c);

const std::vector<std::string>& command_names();

}  // namespace soi::reports
