// Copyright 2026 The bimatrix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <sstream>

#include "bimatrix/experiments.hpp"
#include "bimatrix/io.hpp"
#include "oracles.hpp"

using namespace bimatrix;
using namespace std::chrono_literals;
using testing::example_2x2;

TEST_CASE("compare_single on the 2x2 example") {
  const ComparisonRecord rec =
      compare_single(example_2x2(), 0, 42, 10s);
  CHECK(rec.lh_status == LhRunStatus::Completed);
  CHECK(rec.equilibrium_payoffs.size() == 1);
  CHECK(rec.both_better);  // equal payoffs count as not worse
  CHECK_FALSE(rec.worse_player_relative_error.has_value());
  CHECK(rec.mmr_seconds >= 0.0);
}

TEST_CASE("relative error accompanies a worse-off player only") {
  CompareOptions options;
  options.sizes = {6};
  options.count = 30;
  options.seed = 7;
  options.lh_budget = 30s;
  const BatchResult result = run_compare(options);
  REQUIRE(result.records.size() == 30);
  for (const ComparisonRecord& r : result.records) {
    if (r.lh_status != LhRunStatus::Completed) continue;
    CHECK(r.worse_player_relative_error.has_value() == !r.both_better);
    if (r.worse_player_relative_error) {
      CHECK(*r.worse_player_relative_error <= 1.0);
      CHECK(*r.worse_player_relative_error > 0.0);
    }
  }
}

TEST_CASE("summary recomputes from emitted CSV rows") {
  CompareOptions options;
  options.sizes = {4, 5};
  options.count = 10;
  options.seed = 11;
  options.lh_budget = 30s;
  const BatchResult result = run_compare(options);
  REQUIRE(result.records.size() == 20);

  std::stringstream csv;
  write_comparison_csv(csv, result.records);
  const std::vector<ComparisonRecord> parsed = read_comparison_csv(csv);
  REQUIRE(parsed.size() == result.records.size());
  const BatchSummary again = summarize(parsed);
  CHECK(again.games_run == result.summary.games_run);
  CHECK(again.games_lh_completed == result.summary.games_lh_completed);
  CHECK(again.both_better_rate ==
        doctest::Approx(result.summary.both_better_rate).epsilon(1e-12));
  CHECK(again.mean_relative_error ==
        doctest::Approx(result.summary.mean_relative_error).epsilon(1e-12));
  CHECK(again.stderr_relative_error ==
        doctest::Approx(result.summary.stderr_relative_error).epsilon(1e-12));
  CHECK(again.lh_early_termination_rate ==
        result.summary.lh_early_termination_rate);
}

TEST_CASE("batches are deterministic and order independent") {
  CompareOptions options;
  options.sizes = {3};
  options.count = 12;
  options.seed = 99;
  options.lh_budget = 30s;
  options.workers = 1;
  const BatchResult serial = run_compare(options);
  options.workers = 4;
  const BatchResult parallel = run_compare(options);
  REQUIRE(serial.records.size() == parallel.records.size());
  for (std::size_t k = 0; k < serial.records.size(); ++k) {
    CHECK(serial.records[k].seed == parallel.records[k].seed);
    CHECK(serial.records[k].mmr_payoffs.row ==
          parallel.records[k].mmr_payoffs.row);
    CHECK(serial.records[k].both_better == parallel.records[k].both_better);
  }
}

TEST_CASE("generate_games writes reproducible files") {
  namespace fs = std::filesystem;
  const std::string dir = "/tmp/bimatrix_gen_test";
  fs::remove_all(dir);
  const auto paths = generate_games(10, 10, 3, 42, dir);
  REQUIRE(paths.size() == 3);
  std::vector<std::string> first;
  for (const std::string& p : paths) first.push_back(read_file(p));

  const auto again = generate_games(10, 10, 3, 42, dir);
  for (std::size_t k = 0; k < first.size(); ++k) {
    CHECK(read_file(again[k]) == first[k]);  // bit-identical
  }

  // Games parse back valid and normalized.
  for (const std::string& p : paths) {
    const BimatrixGame g = load_game(p);
    CHECK(g.rows() == 10);
    CHECK(g.normalized);
  }

  const auto tiny = generate_games(1, 1, 1, 5, dir);
  const BimatrixGame one = load_game(tiny[0]);
  CHECK(one.rows() == 1);
  CHECK(one.cols() == 1);
  fs::remove_all(dir);
}

TEST_CASE("count zero yields an empty summary") {
  CompareOptions options;
  options.sizes = {5};
  options.count = 0;
  const BatchResult result = run_compare(options);
  CHECK(result.records.empty());
  CHECK(result.summary.games_run == 0);
  CHECK(result.summary.both_better_rate == 0.0);
}

TEST_CASE("sweep csv round trips numerically") {
  const std::vector<ScalingPoint> pts =
      sweep(example_2x2(), {0.0, 0.25, 0.5, 0.75, 1.0});
  std::stringstream csv;
  write_sweep_csv(csv, pts);
  std::string header;
  std::getline(csv, header);
  CHECK(header == "t,row_payoff,col_payoff,f,lambda_star");
  std::string line;
  std::size_t k = 0;
  while (std::getline(csv, line)) {
    REQUIRE(k < pts.size());
    double t = 0, row = 0, col = 0, f = 0, lambda = 0;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &t, &row, &col,
                        &f, &lambda) == 5);
    CHECK(std::abs(t - pts[k].t) <= 1e-12);
    CHECK(std::abs(row - pts[k].row_payoff) <= 1e-12);
    CHECK(std::abs(col - pts[k].col_payoff) <= 1e-12);
    CHECK(std::abs(f - pts[k].imbalance) <= 1e-12);
    CHECK(std::abs(lambda - pts[k].mmr.maximin_value) <= 1e-12);
    ++k;
  }
  CHECK(k == pts.size());
}
