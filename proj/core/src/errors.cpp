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

#include "soi/errors.hpp"

namespace soi {

ParameterRangeError::ParameterRangeError(const std::string& parameter,
                                         double value, double lower,
                                         double upper)
    : std::invalid_argument("parameter '" + parameter + "' = " +
                            std::to_string(value) + " outside [" +
                            std::to_string(lower) + ", " +
                            std::to_string(upper) + "]"),
      parameter_(parameter) {}

}  // namespace soi
