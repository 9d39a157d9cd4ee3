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

#include "bimatrix/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "bimatrix/io.hpp"
#include "bimatrix/rng.hpp"

namespace bimatrix {

const char* to_string(LhRunStatus s) {
  switch (s) {
    case LhRunStatus::Completed: return "Completed";
    case LhRunStatus::TimedOut: return "TimedOut";
    case LhRunStatus::Degenerate: return "Degenerate";
  }
  return "?";
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace

ComparisonRecord compare_single(const BimatrixGame& g, long game_index,
                                std::uint64_t seed, Duration lh_budget,
                                MmrMethod method) {
  ComparisonRecord rec;
  rec.game_index = game_index;
  rec.seed = seed;
  rec.rows = g.rows();
  rec.cols = g.cols();

  auto start = std::chrono::steady_clock::now();
  const MmrSolution mmr = solve_mmr(g, method);
  rec.mmr_seconds = seconds_since(start);
  rec.mmr_payoffs = mmr.payoffs;

  start = std::chrono::steady_clock::now();
  const LhEnumeration lh = lh_enumerate(g, lh_budget);
  rec.lh_seconds = seconds_since(start);

  if (lh.timed_out) {
    rec.lh_status = LhRunStatus::TimedOut;
    return rec;
  }
  if (lh.equilibria.empty()) {
    rec.lh_status = LhRunStatus::Degenerate;
    return rec;
  }
  rec.lh_status = LhRunStatus::Completed;
  rec.equilibrium_payoffs.reserve(lh.equilibria.size());
  double ne_row_max = -kInfinity;
  double ne_col_max = -kInfinity;
  for (const NashEquilibrium& eq : lh.equilibria) {
    rec.equilibrium_payoffs.push_back(eq.payoffs);
    ne_row_max = std::max(ne_row_max, eq.payoffs.row);
    ne_col_max = std::max(ne_col_max, eq.payoffs.col);
  }
  const bool row_ok = rec.mmr_payoffs.row >= ne_row_max - 1e-9;
  const bool col_ok = rec.mmr_payoffs.col >= ne_col_max - 1e-9;
  rec.both_better = row_ok && col_ok;
  if (!rec.both_better) {
    double err = -kInfinity;
    if (!row_ok) err = std::max(err, (ne_row_max - rec.mmr_payoffs.row) / ne_row_max);
    if (!col_ok) err = std::max(err, (ne_col_max - rec.mmr_payoffs.col) / ne_col_max);
    rec.worse_player_relative_error = err;
  }
  return rec;
}

BatchResult run_compare(const CompareOptions& options) {
  struct Task {
    Eigen::Index size;
    long global_index;
  };
  std::vector<Task> tasks;
  long global = 0;
  for (Eigen::Index size : options.sizes) {
    for (long k = 0; k < options.count; ++k) {
      tasks.push_back(Task{size, global++});
    }
  }

  BatchResult result;
  result.records.resize(tasks.size());

  const auto worker_body = [&](std::atomic<std::size_t>& cursor) {
    while (true) {
      const std::size_t idx = cursor.fetch_add(1);
      if (idx >= tasks.size()) break;
      const Task& task = tasks[idx];
      const std::uint64_t game_seed = substream_seed(
          options.seed, static_cast<std::uint64_t>(task.global_index));
      const BimatrixGame g = random_game(task.size, task.size, game_seed);
      result.records[idx] = compare_single(g, task.global_index, game_seed,
                                           options.lh_budget, options.method);
    }
  };

  unsigned workers = options.workers > 0
                         ? static_cast<unsigned>(options.workers)
                         : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max<std::size_t>(tasks.size(), 1));
  std::atomic<std::size_t> cursor{0};
  if (workers <= 1) {
    worker_body(cursor);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] { worker_body(cursor); });
    }
    for (std::thread& t : pool) t.join();
  }

  result.summary = summarize(result.records);
  return result;
}

BatchSummary summarize(const std::vector<ComparisonRecord>& records) {
  BatchSummary s;
  s.games_run = static_cast<long>(records.size());
  long both = 0;
  long timed_out = 0;
  double err_sum = 0.0;
  double err_sq_sum = 0.0;
  double mmr_time = 0.0;
  double lh_time = 0.0;
  for (const ComparisonRecord& r : records) {
    mmr_time += r.mmr_seconds;
    lh_time += r.lh_seconds;
    if (r.lh_status == LhRunStatus::TimedOut) ++timed_out;
    if (r.lh_status != LhRunStatus::Completed) continue;
    ++s.games_lh_completed;
    if (r.both_better) ++both;
    if (r.worse_player_relative_error) {
      ++s.relative_error_count;
      err_sum += *r.worse_player_relative_error;
      err_sq_sum +=
          *r.worse_player_relative_error * *r.worse_player_relative_error;
    }
  }
  if (s.games_lh_completed > 0) {
    s.both_better_rate =
        static_cast<double>(both) / static_cast<double>(s.games_lh_completed);
  }
  if (s.relative_error_count > 0) {
    s.mean_relative_error =
        err_sum / static_cast<double>(s.relative_error_count);
  }
  if (s.relative_error_count >= 2) {
    const double nrec = static_cast<double>(s.relative_error_count);
    const double var =
        (err_sq_sum - nrec * s.mean_relative_error * s.mean_relative_error) /
        (nrec - 1.0);
    s.stderr_relative_error = std::sqrt(std::max(var, 0.0) / nrec);
  }
  if (s.games_run > 0) {
    s.lh_early_termination_rate =
        static_cast<double>(timed_out) / static_cast<double>(s.games_run);
    s.mmr_seconds_mean = mmr_time / static_cast<double>(s.games_run);
    s.lh_seconds_mean = lh_time / static_cast<double>(s.games_run);
  }
  return s;
}

void write_comparison_csv(std::ostream& os,
                          const std::vector<ComparisonRecord>& records) {
  os << "game,seed,n,m,mmr_row,mmr_col,num_equilibria,ne_row_max,ne_col_max,"
        "both_better,worse_player_relative_error,mmr_seconds,lh_seconds,"
        "lh_status,ne_payoffs\n";
  for (const ComparisonRecord& r : records) {
    os << r.game_index << "," << r.seed << "," << r.rows << "," << r.cols
       << "," << format_double(r.mmr_payoffs.row) << ","
       << format_double(r.mmr_payoffs.col) << ","
       << r.equilibrium_payoffs.size() << ",";
    if (!r.equilibrium_payoffs.empty()) {
      double ne_row = -kInfinity;
      double ne_col = -kInfinity;
      for (const PayoffPair& p : r.equilibrium_payoffs) {
        ne_row = std::max(ne_row, p.row);
        ne_col = std::max(ne_col, p.col);
      }
      os << format_double(ne_row) << "," << format_double(ne_col);
    } else {
      os << ",";
    }
    os << "," << (r.both_better ? 1 : 0) << ",";
    if (r.worse_player_relative_error) {
      os << format_double(*r.worse_player_relative_error);
    }
    os << "," << format_double(r.mmr_seconds) << ","
       << format_double(r.lh_seconds) << "," << to_string(r.lh_status) << ",";
    for (std::size_t k = 0; k < r.equilibrium_payoffs.size(); ++k) {
      if (k > 0) os << ";";
      os << format_double(r.equilibrium_payoffs[k].row) << ":"
         << format_double(r.equilibrium_payoffs[k].col);
    }
    os << "\n";
  }
}

std::vector<ComparisonRecord> read_comparison_csv(std::istream& is) {
  std::vector<ComparisonRecord> records;
  std::string line;
  if (!std::getline(is, line)) return records;  // header
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    while (fields.size() < 15) fields.emplace_back();
    ComparisonRecord r;
    r.game_index = std::stol(fields[0]);
    r.seed = std::stoull(fields[1]);
    r.rows = std::stol(fields[2]);
    r.cols = std::stol(fields[3]);
    r.mmr_payoffs.row = std::stod(fields[4]);
    r.mmr_payoffs.col = std::stod(fields[5]);
    r.both_better = fields[9] == "1";
    if (!fields[10].empty()) {
      r.worse_player_relative_error = std::stod(fields[10]);
    }
    r.mmr_seconds = std::stod(fields[11]);
    r.lh_seconds = std::stod(fields[12]);
    if (fields[13] == "TimedOut") {
      r.lh_status = LhRunStatus::TimedOut;
    } else if (fields[13] == "Degenerate") {
      r.lh_status = LhRunStatus::Degenerate;
    } else {
      r.lh_status = LhRunStatus::Completed;
    }
    if (!fields[14].empty()) {
      std::istringstream ps(fields[14]);
      std::string pair;
      while (std::getline(ps, pair, ';')) {
        const std::size_t colon = pair.find(':');
        PayoffPair p;
        p.row = std::stod(pair.substr(0, colon));
        p.col = std::stod(pair.substr(colon + 1));
        r.equilibrium_payoffs.push_back(p);
      }
    }
    records.push_back(std::move(r));
  }
  return records;
}

void write_sweep_csv(std::ostream& os,
                     const std::vector<ScalingPoint>& points) {
  os << "t,row_payoff,col_payoff,f,lambda_star\n";
  for (const ScalingPoint& p : points) {
    os << format_double(p.t) << "," << format_double(p.row_payoff) << ","
       << format_double(p.col_payoff) << "," << format_double(p.imbalance)
       << "," << format_double(p.mmr.maximin_value) << "\n";
  }
}

std::vector<std::string> generate_games(Eigen::Index rows, Eigen::Index cols,
                                        long count, std::uint64_t seed,
                                        const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create directory '" + out_dir + "'");
  std::vector<std::string> paths;
  paths.reserve(static_cast<std::size_t>(count));
  for (long k = 0; k < count; ++k) {
    const BimatrixGame g = random_game(
        rows, cols, substream_seed(seed, static_cast<std::uint64_t>(k)));
    char name[32];
    std::snprintf(name, sizeof(name), "game_%05ld.json", k);
    const std::string path = (fs::path(out_dir) / name).string();
    write_file(path, emit_game_json(g));
    paths.push_back(path);
  }
  return paths;
}

}  // namespace bimatrix
