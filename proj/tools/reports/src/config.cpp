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

#include "soi/reports/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace soi::reports {

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "volume", "curves", "coarse-grain", "so4-compare", "asymptotics", "fidelity"};
  return names;
}

RunConfig defaults_for(const std::string& command) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), command) == names.end()) {
    throw std::invalid_argument("unknown command '" + command + "'");
  }
  RunConfig c;
  c.command = command;
  if (command == "curves") c.nodes = 101;
  if (command == "volume") c.spectrum = {0.5, 0.5};
  if (command == "fidelity") {
    c.spectrum = {0.7, 0.3};
    c.sigma_spectrum = {0.4, 0.6};
    c.method = "closed";
  }
  return c;
}

nlohmann::json to_json(const RunConfig& c) {
  return nlohmann::json{
      {"command", c.command},
      {"group", c.group},
      {"spectrum", c.spectrum},
      {"method", c.method},
      {"samples", c.samples},
      {"nodes", c.nodes},
      {"seed", c.seed},
      {"ell", c.ell},
      {"k", c.k},
      {"observables", c.observables},
      {"weyl_filter", c.weyl_filter},
      {"n_list", c.n_list},
      {"level", c.level},
      {"weighting", c.weighting},
      {"budget", c.budget},
      {"count", c.count},
      {"sigma_spectrum", c.sigma_spectrum},
      {"rho_rotation", c.rho_rotation},
      {"sigma_rotation", c.sigma_rotation},
      {"out", c.out},
  };
}

RunConfig from_json(const nlohmann::json& j) {
  RunConfig c = defaults_for(j.at("command").get<std::string>());
  static const std::vector<std::string> known = {
      "command", "group", "spectrum", "method", "samples", "nodes", "seed",
      "ell", "k", "observables", "weyl_filter", "n_list", "level", "weighting",
      "budget", "count", "sigma_spectrum", "rho_rotation", "sigma_rotation", "out"};
  for (const auto& item : j.items()) {
    if (std::find(known.begin(), known.end(), item.key()) == known.end()) {
      throw std::invalid_argument("unknown config key '" + item.key() + "'");
    }
  }
  const auto read = [&j](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  read("group", c.group);
  read("spectrum", c.spectrum);
  read("method", c.method);
  read("samples", c.samples);
  read("nodes", c.nodes);
  read("seed", c.seed);
  read("ell", c.ell);
  read("k", c.k);
  read("observables", c.observables);
  read("weyl_filter", c.weyl_filter);
  read("n_list", c.n_list);
  read("level", c.level);
  read("weighting", c.weighting);
  read("budget", c.budget);
  read("count", c.count);
  read("sigma_spectrum", c.sigma_spectrum);
  read("rho_rotation", c.rho_rotation);
  read("sigma_rotation", c.sigma_rotation);
  read("out", c.out);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed config file: " + std::string(e.what()));
  }
  try {
    return from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("invalid config file: " + std::string(e.what()));
  }
}

std::string config_hash(const RunConfig& c) {
  nlohmann::json j = to_json(c);
  j.erase("out");
  const std::string text = j.dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace soi::reports
