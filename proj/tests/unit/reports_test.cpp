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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "soi/reports/commands.hpp"
#include "soi/reports/config.hpp"
#include "soi/reports/csv.hpp"

namespace soi::reports {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<double>> numeric_rows(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

class ReportsTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("soi-reports-" + std::string(::testing::UnitTest::GetInstance()
                                             ->current_test_info()
                                             ->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  RunConfig config(const std::string& command) {
    RunConfig c = defaults_for(command);
    c.out = dir_.string();
    return c;
  }

  fs::path dir_;
};

TEST(Csv, Formatting) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(2 * std::numbers::pi * std::numbers::pi), "19.739208802178716");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST_F(ReportsTest, CsvWriterUsesLf) {
  fs::create_directories(dir_);
  const fs::path p = dir_ / "x.csv";
  {
    CsvWriter w(p, {"a", "b"});
    w.row({1, 0.5});
    EXPECT_THROW(w.row({1}), std::logic_error);
  }
  EXPECT_EQ(slurp(p), "a,b\n1,0.5\n");
}

TEST(Config, RoundTripAndHash) {
  RunConfig c = defaults_for("volume");
  c.group = "so3";
  c.spectrum = {0.5, 0.3, 0.2};
  const RunConfig back = from_json(to_json(c));
  EXPECT_EQ(to_json(back), to_json(c));
  EXPECT_EQ(config_hash(back), config_hash(c));
  EXPECT_EQ(config_hash(c).size(), 16u);
  RunConfig moved = c;
  moved.out = "/elsewhere";
  EXPECT_EQ(config_hash(moved), config_hash(c));
  moved.seed = 99;
  EXPECT_NE(config_hash(moved), config_hash(c));
  EXPECT_THROW(from_json(nlohmann::json{{"command", "volume"}, {"bogus", 1}}),
               std::invalid_argument);
  EXPECT_THROW(defaults_for("nope"), std::invalid_argument);
}

TEST(Groups, Parse) {
  EXPECT_EQ(parse_group("su2").kind, GroupKind::kSpecialUnitary2);
  EXPECT_EQ(parse_group("so4").dim, 4u);
  EXPECT_EQ(parse_group("u3").kind, GroupKind::kUnitary);
  EXPECT_THROW(parse_group("so"), std::invalid_argument);
  EXPECT_THROW(parse_group("sp4"), std::invalid_argument);
  EXPECT_THROW(parse_group("so1"), std::invalid_argument);
}

TEST_F(ReportsTest, VolumeCommand) {
  RunConfig c = config("volume");
  c.group = "su2";
  c.spectrum = {0.5, 0.5};
  const RunOutput r = run_command(c);
  EXPECT_EQ(r.base, "volume-" + config_hash(c));
  EXPECT_NEAR(r.summary["value"].get<double>(), 2 * std::numbers::pi * std::numbers::pi,
              1e-13);
  for (const auto& f : r.files) EXPECT_TRUE(fs::exists(f)) << f;

  c.group = "so3";
  c.spectrum = {0.5, 0.3, 0.2};
  c.method = "quadrature";
  EXPECT_NEAR(run_command(c).summary["value"].get<double>() / 1.305625939193551, 1.0, 1e-8);
  c.method = "magic";
  EXPECT_THROW(run_command(c), std::invalid_argument);
}

TEST_F(ReportsTest, CurvesCommand) {
  RunConfig c = config("curves");
  c.group = "su2";
  const RunOutput r = run_command(c);
  const auto rows = numeric_rows(r.files.front());
  ASSERT_EQ(rows.size(), 101u);
  for (const auto& row : rows) {
    EXPECT_GE(row[1] + 1e-12, row[2]);
    EXPECT_GE(row[1] + 1e-12, row[3]);
  }
  for (std::size_t i : {std::size_t{0}, std::size_t{100}}) {
    EXPECT_EQ(rows[i][1], 0.0);
    EXPECT_EQ(rows[i][2], 0.0);
    EXPECT_EQ(rows[i][3], 0.0);
  }
  c.group = "so3";
  c.nodes = 4;
  const auto so3 = numeric_rows(run_command(c).files.front());
  bool saw_center = false;
  for (const auto& row : so3) {
    if (std::abs(row[0] - 1.0 / 3) < 1e-15 && std::abs(row[1] - 1.0 / 3) < 1e-15) {
      saw_center = true;
      EXPECT_NEAR(row[2], 1.0, 1e-12);
      EXPECT_NEAR(row[3], 1.0, 1e-12);
      EXPECT_NEAR(row[4], 1.0, 1e-12);
    }
  }
  EXPECT_TRUE(saw_center);
  EXPECT_EQ(slurp(r.files.front()).substr(0, 31), "lambda1,v_norm,svn_norm,sl_norm");
}

TEST_F(ReportsTest, CoarseGrainFractionsSumToOne) {
  RunConfig c = config("coarse-grain");
  c.ell = 50;
  const RunOutput r = run_command(c);
  for (const auto& name : {"volume", "von_neumann", "linear"}) {
    double total = 0.0;
    for (double f : r.summary[name]["fractions"]) total += f;
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST_F(ReportsTest, RerunFromConfigIsBitIdentical) {
  RunConfig c = config("so4-compare");
  c.count = 5;
  c.samples = 2000;
  const RunOutput first = run_command(c);
  std::vector<std::string> before;
  for (const auto& f : first.files) before.push_back(slurp(f));
  RunConfig again = load_config(first.files.back().string());
  again.out = dir_.string();
  const RunOutput second = run_command(again);
  ASSERT_EQ(second.files, first.files);
  for (std::size_t i = 0; i < before.size(); ++i) {
    EXPECT_EQ(slurp(second.files[i]), before[i]) << second.files[i];
  }
  const auto rows = numeric_rows(first.files.front());
  EXPECT_EQ(rows.front()[1], 1.0);
}

TEST_F(ReportsTest, FidelityCommand) {
  RunConfig c = config("fidelity");
  EXPECT_NEAR(run_command(c).summary["value"].get<double>(), 0.908998886412873, 1e-14);
  c.method = "soi";
  c.budget = 4;
  const auto r = run_command(c);
  EXPECT_LE(r.summary["value"].get<double>(), r.summary["closed_form"].get<double>() + 1e-9);
}

}  // namespace
}  // namespace soi::reports
