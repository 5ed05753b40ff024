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
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "soi/reports/config.hpp"
#include "soi/unitary.hpp"
#include "soi/volume.hpp"

namespace soi::reports {

/// Parsed --group value: su2, soN (N >= 2) or uN (N >= 2).
struct GroupSpec {
  GroupKind kind = GroupKind::kSpecialUnitary2;
  std::size_t dim = 2;

  UnitaryFamily family() const;
  /// Closed-form route for this group; throws std::invalid_argument for U(N).
  ClosedFormGroup closed_form() const;
};

GroupSpec parse_group(const std::string& text);

struct RunOutput {
  std::string base;  // "<command>-<hash>"
  std::vector<std::filesystem::path> files;
  nlohmann::json summary;
};

/// Runs one command and writes its artifacts into config.out:
///   <base>.config.json always, plus
///   volume/fidelity      -> <base>.json
///   curves/so4-compare   -> <base>.csv
///   asymptotics          -> <base>.csv and <base>-curves.csv
///   coarse-grain         -> <base>-cells.csv and <base>-segments.csv
/// Invalid settings raise std::invalid_argument; numeric failures
/// NumericError.
RunOutput run_command(const RunConfig& config);

}  // namespace soi::reports
