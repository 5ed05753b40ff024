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

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace soi::reports {

/// Shortest-form with 17 significant digits, '.' decimal point regardless
/// of locale.
std::string format_double(double v);

/// One cell of a CSV row.
class CsvField {
 public:
  CsvField(double v) : text_(format_double(v)) {}  // NOLINT
  CsvField(int v) : text_(std::to_string(v)) {}  // NOLINT
  CsvField(unsigned long v) : text_(std::to_string(v)) {}  // NOLINT
  CsvField(unsigned long long v) : text_(std::to_string(v)) {}  // NOLINT
  CsvField(std::string v) : text_(std::move(v)) {}  // NOLINT
  CsvField(const char* v) : text_(v) {}  // NOLINT

  const std::string& text() const noexcept { return text_; }

 private:
  std::string text_;
};

/// LF-terminated, header-first CSV file.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::vector<std::string> header);

  void row(std::initializer_list<CsvField> fields);
  void row(const std::vector<CsvField>& fields);

 private:
  std::ofstream out_;
  std::size_t columns_;
};

}  // namespace soi::reports
