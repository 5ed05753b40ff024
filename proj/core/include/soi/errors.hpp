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

#include <stdexcept>
#include <string>

namespace soi {

/// A parameter vector component lies outside its declared chart domain.
class ParameterRangeError : public std::invalid_argument {
 public:
  ParameterRangeError(const std::string& parameter, double value,
                      double lower, double upper);

  const std::string& parameter() const noexcept { return parameter_; }

 private:
  std::string parameter_;
};

/// Non-convergence, failed bracketing, or an internal consistency check
/// (e.g. a clearly negative Gram determinant).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace soi
