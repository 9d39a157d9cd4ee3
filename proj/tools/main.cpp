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

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bimatrix/experiments.hpp"
#include "bimatrix/io.hpp"
#include "bimatrix/lemke_howson.hpp"
#include "bimatrix/mmr.hpp"
#include "bimatrix/scaling.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitSolver = 3;
constexpr int kExitTimeoutBatch = 4;

using bimatrix::Duration;
using ordered_json = nlohmann::ordered_json;

std::string format_vector(const bimatrix::Vector& v) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) os << ", ";
    os << bimatrix::format_double(v(i));
  }
  os << "]";
  return os.str();
}

ordered_json vector_json(const bimatrix::Vector& v) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
  } else {
    bimatrix::write_file(out_path, content);
  }
}

Duration seconds_to_duration(double seconds) {
  return std::chrono::duration_cast<Duration>(
      std::chrono::duration<double>(seconds));
}

bimatrix::MmrMethod parse_method(const std::string& name) {
  if (name == "simplex") return bimatrix::MmrMethod::Simplex;
  return bimatrix::MmrMethod::Direct;
}

int cmd_gen(long n, long m, long count, std::uint64_t seed,
            const std::string& out_dir) {
  const auto paths = bimatrix::generate_games(n, m, count, seed, out_dir);
  std::cout << "wrote " << paths.size() << " game(s) to " << out_dir << "\n";
  return kExitOk;
}

int cmd_solve_mmr(const std::string& game_path, const std::string& method,
                  const std::string& format, const std::string& out_path) {
  const bimatrix::BimatrixGame g = bimatrix::load_game(game_path);
  const bimatrix::MmrSolution sol =
      bimatrix::solve_mmr(g, parse_method(method));
  std::ostringstream os;
  if (format == "json") {
    ordered_json j;
    j["n"] = g.rows();
    j["m"] = g.cols();
    j["x_star"] = vector_json(sol.row_strategy);
    j["y_star"] = vector_json(sol.col_strategy);
    j["alpha_star"] = {sol.weights(0), sol.weights(1)};
    j["delta_star"] = sol.minimax_value;
    j["lambda_star"] = sol.maximin_value;
    j["row_payoff"] = sol.payoffs.row;
    j["col_payoff"] = sol.payoffs.col;
    os << j.dump(2) << "\n";
  } else {
    os << "game: " << g.rows() << "x" << g.cols() << "\n"
       << "x* = " << format_vector(sol.row_strategy) << "\n"
       << "y* = " << format_vector(sol.col_strategy) << "\n"
       << "alpha* = (" << bimatrix::format_double(sol.weights(0)) << ", "
       << bimatrix::format_double(sol.weights(1)) << ")\n"
       << "delta* = " << bimatrix::format_double(sol.minimax_value) << "\n"
       << "lambda* = " << bimatrix::format_double(sol.maximin_value) << "\n"
       << "payoffs: row = " << bimatrix::format_double(sol.payoffs.row)
       << ", col = " << bimatrix::format_double(sol.payoffs.col) << "\n";
  }
  write_output(out_path, os.str());
  return kExitOk;
}

int cmd_solve_lh(const std::string& game_path, double budget_seconds,
                 double perturb, std::uint64_t perturb_seed,
                 const std::string& format, const std::string& out_path) {
  bimatrix::BimatrixGame g = bimatrix::load_game(game_path);
  if (perturb > 0.0) g = bimatrix::perturb_game(g, perturb, perturb_seed);
  const bimatrix::LhEnumeration found =
      bimatrix::lh_enumerate(g, seconds_to_duration(budget_seconds));

  bool any_degenerate = false;
  for (const bimatrix::LabelOutcome& o : found.labels) {
    if (o.status == bimatrix::LabelStatus::Degenerate) any_degenerate = true;
  }

  std::ostringstream os;
  if (format == "json") {
    ordered_json j;
    j["equilibria"] = ordered_json::array();
    for (const bimatrix::NashEquilibrium& eq : found.equilibria) {
      ordered_json e;
      e["x"] = vector_json(eq.row_strategy);
      e["y"] = vector_json(eq.col_strategy);
      e["row_payoff"] = eq.payoffs.row;
      e["col_payoff"] = eq.payoffs.col;
      e["dropped_label"] = eq.origin.dropped_label;
      e["pivots"] = eq.pivots;
      j["equilibria"].push_back(std::move(e));
    }
    j["timed_out"] = found.timed_out;
    j["degenerate_labels"] = any_degenerate;
    os << j.dump(2) << "\n";
  } else {
    os << found.equilibria.size() << " distinct equilibrium(s)";
    if (found.timed_out) os << " [TimedOut: partial label sweep]";
    os << "\n";
    for (std::size_t k = 0; k < found.equilibria.size(); ++k) {
      const bimatrix::NashEquilibrium& eq = found.equilibria[k];
      os << "#" << k + 1 << " x = " << format_vector(eq.row_strategy)
         << " y = " << format_vector(eq.col_strategy)
         << " payoffs = (" << bimatrix::format_double(eq.payoffs.row) << ", "
         << bimatrix::format_double(eq.payoffs.col) << ")"
         << " [label " << eq.origin.dropped_label << ", " << eq.pivots
         << " pivots]\n";
    }
    if (any_degenerate) {
      os << "note: some labels hit degeneracy; rerun with --perturb 1e-9\n";
    }
  }
  write_output(out_path, os.str());
  if (found.equilibria.empty() && any_degenerate && !found.timed_out) {
    std::cerr << "degenerate game: no label completed; try --perturb 1e-9\n";
    return kExitSolver;
  }
  return kExitOk;
}

int cmd_compare(const std::vector<long>& sizes, long count,
                std::uint64_t seed, double budget_seconds, int workers,
                const std::string& out_csv) {
  bimatrix::CompareOptions options;
  for (long s : sizes) options.sizes.push_back(s);
  options.count = count;
  options.seed = seed;
  options.lh_budget = seconds_to_duration(budget_seconds);
  options.workers = workers;
  const bimatrix::BatchResult result = bimatrix::run_compare(options);

  if (!out_csv.empty()) {
    std::ostringstream csv;
    bimatrix::write_comparison_csv(csv, result.records);
    bimatrix::write_file(out_csv, csv.str());
  }

  const bimatrix::BatchSummary& s = result.summary;
  std::cout << "games run:            " << s.games_run << "\n"
            << "lh completed:         " << s.games_lh_completed << "\n"
            << "both better:          " << 100.0 * s.both_better_rate
            << "% of completed\n"
            << "relative error:       " << s.mean_relative_error << " +/- "
            << s.stderr_relative_error << " (n=" << s.relative_error_count
            << ")\n"
            << "lh early termination: " << 100.0 * s.lh_early_termination_rate
            << "%\n"
            << "mean time:            mmr " << s.mmr_seconds_mean << "s, lh "
            << s.lh_seconds_mean << "s\n";
  if (s.games_run > 0 && s.lh_early_termination_rate > 0.5) {
    return kExitTimeoutBatch;
  }
  return kExitOk;
}

int cmd_balance(const std::string& game_path, double tol,
                const std::string& format, const std::string& out_path) {
  const bimatrix::BimatrixGame g = bimatrix::load_game(game_path);
  bimatrix::BalanceOptions options;
  if (tol > 0.0) options.balance_tol = tol;
  const bimatrix::BalanceResult res = bimatrix::balance_bisect(g, options);
  std::ostringstream os;
  if (format == "json") {
    ordered_json j;
    j["status"] = bimatrix::to_string(res.status);
    j["t_star"] = res.t_star;
    j["row_payoff"] = res.final_point.row_payoff;
    j["col_payoff"] = res.final_point.col_payoff;
    j["f"] = res.final_point.imbalance;
    j["bracket"] = {res.bracket_lo, res.bracket_hi};
    j["iterations"] = res.iterations;
    os << j.dump(2) << "\n";
  } else {
    os << "status:    " << bimatrix::to_string(res.status) << "\n"
       << "t* =       " << bimatrix::format_double(res.t_star) << "\n"
       << "payoffs:   row = "
       << bimatrix::format_double(res.final_point.row_payoff) << ", col = "
       << bimatrix::format_double(res.final_point.col_payoff) << "\n"
       << "f(t*) =    " << bimatrix::format_double(res.final_point.imbalance)
       << "\n"
       << "bracket:   [" << bimatrix::format_double(res.bracket_lo) << ", "
       << bimatrix::format_double(res.bracket_hi) << "]\n"
       << "iterations: " << res.iterations << "\n";
  }
  write_output(out_path, os.str());
  if (res.status == bimatrix::BalanceResult::Status::NoSignChange) {
    std::cerr << "no sign change: the scaled payoffs never cross; the game "
                 "violates the balance precondition (one matrix may be "
                 "identically zero)\n";
    return kExitSolver;
  }
  return kExitOk;
}

int cmd_sweep(const std::string& game_path, int points,
              const std::string& out_csv) {
  const bimatrix::BimatrixGame g = bimatrix::load_game(game_path);
  if (points < 2) throw std::invalid_argument("sweep requires points >= 2");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(points) + 1);
  for (int k = 0; k < points; ++k) {
    grid.push_back(static_cast<double>(k) / (points - 1));
  }
  // The reference point t = 0.5 is always part of the sweep.
  bool has_half = false;
  for (double t : grid) has_half = has_half || t == 0.5;
  if (!has_half) {
    grid.push_back(0.5);
    std::sort(grid.begin(), grid.end());
  }
  const std::vector<bimatrix::ScalingPoint> table = bimatrix::sweep(g, grid);
  std::ostringstream csv;
  bimatrix::write_sweep_csv(csv, table);
  write_output(out_csv, csv.str());
  return kExitOk;
}

int cmd_convert(const std::string& in_path, const std::string& out_path) {
  const bimatrix::BimatrixGame g = bimatrix::load_game(in_path);
  bimatrix::save_game(g, out_path);
  std::cout << "wrote " << out_path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bimatrix: minimax-relaxation and Lemke-Howson toolkit"};
  app.require_subcommand(1);

  long n = 10, m = 10, count = 1;
  std::uint64_t seed = 0;
  std::string out;
  std::string game_path;
  std::string format = "text";
  std::string method = "direct";
  double budget = 60.0;
  double tol = 0.0;
  double perturb = 0.0;
  std::uint64_t perturb_seed = 0;
  int points = 101;
  int workers = 0;
  std::vector<long> sizes{10};
  std::string convert_in, convert_out;

  CLI::App* gen = app.add_subcommand("gen", "generate random games");
  gen->add_option("--n", n, "row actions")->check(CLI::PositiveNumber);
  gen->add_option("--m", m, "column actions")->check(CLI::PositiveNumber);
  gen->add_option("--count", count, "number of games")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", seed, "batch seed");
  gen->add_option("--out", out, "output directory")->required();

  CLI::App* mmr = app.add_subcommand("solve-mmr", "solve the relaxation");
  mmr->add_option("game", game_path, "game file (.json or .nfg)")->required();
  mmr->add_option("--method", method, "direct|simplex")
      ->check(CLI::IsMember({"direct", "simplex"}));
  mmr->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  mmr->add_option("--out", out, "output file (default stdout)");

  CLI::App* lh = app.add_subcommand("solve-lh", "enumerate equilibria");
  lh->add_option("game", game_path, "game file")->required();
  lh->add_option("--budget", budget, "time budget in seconds");
  lh->add_option("--perturb", perturb, "perturbation magnitude");
  lh->add_option("--perturb-seed", perturb_seed, "perturbation seed");
  lh->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  lh->add_option("--out", out, "output file (default stdout)");

  CLI::App* cmp = app.add_subcommand("compare", "batch relaxation-vs-LH run");
  cmp->add_option("--sizes", sizes, "square game sizes")->delimiter(',');
  cmp->add_option("--count", count, "games per size");
  cmp->add_option("--seed", seed, "batch seed");
  cmp->add_option("--budget", budget, "LH time budget per game, seconds");
  cmp->add_option("--workers", workers, "worker threads (0 = auto)");
  cmp->add_option("--out", out, "per-game CSV path");

  CLI::App* bal = app.add_subcommand("balance", "find a balanced scaling");
  bal->add_option("game", game_path, "game file")->required();
  bal->add_option("--tol", tol, "balance tolerance (default 1e-6)");
  bal->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  bal->add_option("--out", out, "output file (default stdout)");

  CLI::App* sw = app.add_subcommand("sweep", "scaling sweep CSV");
  sw->add_option("game", game_path, "game file")->required();
  sw->add_option("--points", points, "grid size (>= 2)");
  sw->add_option("--out", out, "CSV path (default stdout)");

  CLI::App* conv = app.add_subcommand("convert", "convert between nfg/json");
  conv->add_option("input", convert_in, "input game file")->required();
  conv->add_option("output", convert_out, "output game file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (gen->parsed()) return cmd_gen(n, m, count, seed, out);
    if (mmr->parsed()) return cmd_solve_mmr(game_path, method, format, out);
    if (lh->parsed()) {
      return cmd_solve_lh(game_path, budget, perturb, perturb_seed, format,
                          out);
    }
    if (cmp->parsed()) {
      return cmd_compare(sizes, count, seed, budget, workers, out);
    }
    if (bal->parsed()) return cmd_balance(game_path, tol, format, out);
    if (sw->parsed()) return cmd_sweep(game_path, points, out);
    if (conv->parsed()) return cmd_convert(convert_in, convert_out);
  } catch (const bimatrix::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const bimatrix::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  }
  return kExitOk;
}
