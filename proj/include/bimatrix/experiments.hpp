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

#ifndef BIMATRIX_EXPERIMENTS_HPP_
#define BIMATRIX_EXPERIMENTS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bimatrix/lemke_howson.hpp"
#include "bimatrix/mmr.hpp"
#include "bimatrix/scaling.hpp"

namespace bimatrix {

enum class LhRunStatus : char { Completed, TimedOut, Degenerate };

const char* to_string(LhRunStatus s);

// One game's relaxation-vs-equilibrium comparison. both_better means the
// relaxation payoff of EVERY player is at least that player's maximum
// payoff across all found equilibria; the relative error of a worse-off
// player is measured against that same per-player maximum.
struct ComparisonRecord {
  long game_index = 0;
  std::uint64_t seed = 0;
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  PayoffPair mmr_payoffs;
  std::vector<PayoffPair> equilibrium_payoffs;
  bool both_better = false;
  std::optional<double> worse_player_relative_error;
  double mmr_seconds = 0.0;
  double lh_seconds = 0.0;
  LhRunStatus lh_status = LhRunStatus::Completed;
};

struct BatchSummary {
  long games_run = 0;
  long games_lh_completed = 0;
  double both_better_rate = 0.0;       // fraction of lh-completed games
  double mean_relative_error = 0.0;    // over games with a worse-off player
  double stderr_relative_error = 0.0;  // sample stddev / sqrt(count)
  long relative_error_count = 0;
  double lh_early_termination_rate = 0.0;  // fraction of all games
  double mmr_seconds_mean = 0.0;
  double lh_seconds_mean = 0.0;
};

struct CompareOptions {
  std::vector<Eigen::Index> sizes;
  long count = 0;  // games per size
  std::uint64_t seed = 0;
  Duration lh_budget = std::chrono::seconds(60);
  int workers = 0;  // 0 -> hardware concurrency
  MmrMethod method = MmrMethod::Direct;
};

struct BatchResult {
  std::vector<ComparisonRecord> records;
  BatchSummary summary;
};

// Square games get size x size; the global game index across sizes drives
// the substream seed, so any (seed, sizes, count) triple is reproducible
// regardless of worker count.
BatchResult run_compare(const CompareOptions& options);

ComparisonRecord compare_single(const BimatrixGame& g, long game_index,
                                std::uint64_t seed, Duration lh_budget,
                                MmrMethod method = MmrMethod::Direct);

BatchSummary summarize(const std::vector<ComparisonRecord>& records);

void write_comparison_csv(std::ostream& os,
                          const std::vector<ComparisonRecord>& records);
// Reads rows written by write_comparison_csv (used for self-consistency
// checks; ne_payoffs round-trips as written).
std::vector<ComparisonRecord> read_comparison_csv(std::istream& is);

// Header: t,row_payoff,col_payoff,f,lambda_star
void write_sweep_csv(std::ostream& os, const std::vector<ScalingPoint>& points);

// Writes `count` games n x m as game_00000.json .. under out_dir, seeded by
// substream_seed(seed, index). Returns the file paths in index order.
std::vector<std::string> generate_games(Eigen::Index rows, Eigen::Index cols,
                                        long count, std::uint64_t seed,
                                        const std::string& out_dir);

}  // namespace bimatrix

#endif  // BIMATRIX_EXPERIMENTS_HPP_
