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

#ifndef BIMATRIX_SCALING_HPP_
#define BIMATRIX_SCALING_HPP_

#include <vector>

#include "bimatrix/game.hpp"
#include "bimatrix/mmr.hpp"

namespace bimatrix {

// The relaxation solved on the scaled pair (t R, (1-t) C). row_payoff and
// col_payoff are the scaled-game payoffs at the extracted marginals;
// imbalance = row_payoff - col_payoff is the function driven to zero by
// balance_bisect. joint_row_value / joint_col_value record the expected
// payouts under the joint distribution itself, which can differ from the
// marginal-product payoffs on non-product supports.
struct ScalingPoint {
  double t = 0.0;
  MmrSolution mmr;
  double row_payoff = 0.0;
  double col_payoff = 0.0;
  double imbalance = 0.0;
  double joint_row_value = 0.0;
  double joint_col_value = 0.0;
};

struct BalanceResult {
  enum class Status : char { Balanced, BracketOnly, NoSignChange };
  Status status = Status::NoSignChange;
  double t_star = 0.0;
  ScalingPoint final_point;
  double bracket_lo = 0.0;
  double bracket_hi = 1.0;
  int iterations = 0;
};

const char* to_string(BalanceResult::Status s);

struct BalanceOptions {
  double balance_tol = 1e-6;
  double interval_tol = 1e-9;
  int max_iterations = 200;
};

// (t R, (1-t) C). Throws std::out_of_range for t outside [0, 1].
BimatrixGame scaled_game(const BimatrixGame& g, double t);

ScalingPoint mmr_scaled(const BimatrixGame& g, double t,
                        MmrMethod method = MmrMethod::Direct);

// Bisection on the payoff imbalance over t in [0, 1]. Requires matrices
// that are not both identically zero; intended for games with nonnegative
// entries, where the endpoint signs imbalance(0) <= 0 <= imbalance(1) hold.
// Returns Balanced when |imbalance| meets balance_tol, BracketOnly when the
// sign-change bracket shrinks below interval_tol first (the realized
// imbalance can jump across zero when the optimal support switches), and
// NoSignChange when the endpoint signs already fail.
BalanceResult balance_bisect(const BimatrixGame& g,
                             const BalanceOptions& options = {});

// One ScalingPoint per grid value; grid values must be sorted and in [0, 1].
std::vector<ScalingPoint> sweep(const BimatrixGame& g,
                                const std::vector<double>& grid,
                                MmrMethod method = MmrMethod::Direct);

}  // namespace bimatrix

#endif  // BIMATRIX_SCALING_HPP_
