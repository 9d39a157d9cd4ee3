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

#ifndef BIMATRIX_MMR_HPP_
#define BIMATRIX_MMR_HPP_

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "bimatrix/game.hpp"
#include "bimatrix/lemke_howson.hpp"
#include "bimatrix/lp.hpp"

namespace bimatrix {

// Optimum of the weighted-payoff minimization
//   min over alpha in S_2 of max over cells of alpha_1 R_ij + alpha_2 C_ij.
// The minimizing set of this piecewise-linear convex function is an
// interval [interval_lo, interval_hi] in alpha_1; `weights` is its midpoint.
struct WeightOptimum {
  Eigen::Vector2d weights;
  double value = 0.0;
  double interval_lo = 0.0;
  double interval_hi = 0.0;
};

// Joint-distribution solution of the relaxation. minimax_value is the
// optimum of the weight program, maximin_value the optimum of the
// joint-distribution program; strong duality makes them equal up to
// solver tolerance.
struct MmrSolution {
  Matrix joint;              // optimal distribution over action cells
  Vector row_strategy;       // row sums of joint, renormalized
  Vector col_strategy;       // column sums of joint, renormalized
  Eigen::Vector2d weights;   // optimal player weights
  double minimax_value = 0.0;
  double maximin_value = 0.0;
  PayoffPair payoffs;        // at (row_strategy, col_strategy)
  double row_marginal_error = 0.0;  // |sum of row marginals - 1| pre-normalization
  double col_marginal_error = 0.0;
};

struct DominanceEntry {
  std::size_t equilibrium = 0;
  bool row_better = false;  // relaxation row payoff >= equilibrium row payoff
  bool col_better = false;
  double weighted_slack = 0.0;  // minimax_value - weighted payoff at the equilibrium
};

struct DominanceReport {
  std::vector<DominanceEntry> entries;
  bool both_better_vs_all = true;
  bool one_player_optimal_vs_all = true;
};

struct DualityGapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoConsistentPair : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAnEquilibrium : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class MmrMethod : char {
  // Minimize the weight program exactly over its breakpoints, then recover
  // a joint distribution supported on at most two tied cells. O(nm log nm).
  Direct,
  // Build the joint-distribution LP and run the generic simplex.
  Simplex,
};

// The joint-distribution LP: variables q_11..q_nm (row-major) plus a free
// value variable; maximize the value subject to both players' expected
// payoffs under q covering it and q summing to one.
LpProblem build_dlp(const BimatrixGame& g);

// Exact minimizer of the weighted-payoff upper bound via the upper envelope
// of the nm cell lines; no iterative solver. Flat minima resolve to the
// interval midpoint.
WeightOptimum minimize_alpha(const BimatrixGame& g);

// Recovers optimal weights from a known optimal value by solving the
// two-equation tightness system per cell, as a cross-check path independent
// of minimize_alpha's envelope walk. Throws NoConsistentPair when no cell
// admits feasible weights.
Eigen::Vector2d recover_alpha_tight(const BimatrixGame& g, double value);

MmrSolution solve_mmr(const BimatrixGame& g,
                      MmrMethod method = MmrMethod::Direct,
                      const LpOptions& lp_options = {});

// Compares the relaxation payoffs against verified Nash equilibria.
// Equilibria must pass is_nash at 1e-6 (NotAnEquilibrium otherwise).
// Payoff comparisons treat differences within 1e-9 as ties in the
// relaxation's favor.
DominanceReport dominance_report(const BimatrixGame& g, const MmrSolution& sol,
                                 const std::vector<NashEquilibrium>& equilibria);

}  // namespace bimatrix

#endif  // BIMATRIX_MMR_HPP_
