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

#include "soi/reports/csv.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace soi::reports {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(const std::filesystem::path& path, std::vector<std::string> header)
    : out_(path, std::ios::binary | std::ios::trunc), columns_(header.size()) {
  if (!out_) throw std::runtime_error("cannot write " + path.string());
  std::vector<CsvField> fields(header.begin(), header.end());
  row(fields);
}

void CsvWriter::row(std::initializer_list<CsvField> fields) {
  row(std::vector<CsvField>(fields));
}

void CsvWriter::row(const std::vector<CsvField>& fields) {
  if (fields.size() != columns_) {
    throw std::logic_error("CSV row has the wrong number of columns");
  }
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    out_ << fields[i].text();
  }
  out_ << '\n';
}

}  // namespace soi::reports
