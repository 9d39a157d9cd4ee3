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

#include "bimatrix/scaling.hpp"

#include <cmath>
#include <stdexcept>

namespace bimatrix {

const char* to_string(BalanceResult::Status s) {
  switch (s) {
    case BalanceResult::Status::Balanced: return "Balanced";
    case BalanceResult::Status::BracketOnly: return "BracketOnly";
    case BalanceResult::Status::NoSignChange: return "NoSignChange";
  }
  return "?";
}

BimatrixGame scaled_game(const BimatrixGame& g, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::out_of_range("scaling weight must lie in [0, 1]");
  }
  return make_game(t * g.row_payoffs, (1.0 - t) * g.col_payoffs);
}

ScalingPoint mmr_scaled(const BimatrixGame& g, double t, MmrMethod method) {
  ScalingPoint pt;
  pt.t = t;
  const BimatrixGame scaled = scaled_game(g, t);
  pt.mmr = solve_mmr(scaled, method);
  pt.row_payoff = pt.mmr.payoffs.row;
  pt.col_payoff = pt.mmr.payoffs.col;
  pt.imbalance = pt.row_payoff - pt.col_payoff;
  pt.joint_row_value =
      (scaled.row_payoffs.array() * pt.mmr.joint.array()).sum();
  pt.joint_col_value =
      (scaled.col_payoffs.array() * pt.mmr.joint.array()).sum();
  return pt;
}

BalanceResult balance_bisect(const BimatrixGame& g,
                             const BalanceOptions& options) {
  if (g.row_payoffs.isZero(0.0) && g.col_payoffs.isZero(0.0)) {
    throw std::invalid_argument(
        "balance requires matrices that are not both identically zero");
  }

  BalanceResult res;
  ScalingPoint lo_pt = mmr_scaled(g, 0.0);
  if (std::abs(lo_pt.imbalance) <= options.balance_tol) {
    res.status = BalanceResult::Status::Balanced;
    res.t_star = 0.0;
    res.final_point = std::move(lo_pt);
    return res;
  }
  ScalingPoint hi_pt = mmr_scaled(g, 1.0);
  if (std::abs(hi_pt.imbalance) <= options.balance_tol) {
    res.status = BalanceResult::Status::Balanced;
    res.t_star = 1.0;
    res.final_point = std::move(hi_pt);
    return res;
  }
  if (lo_pt.imbalance > 0.0 || hi_pt.imbalance < 0.0) {
    res.status = BalanceResult::Status::NoSignChange;
    res.final_point = lo_pt.imbalance > 0.0 ? std::move(lo_pt) : std::move(hi_pt);
    res.t_star = res.final_point.t;
    return res;
  }

  double lo = 0.0;
  double hi = 1.0;
  ScalingPoint mid_pt;
  for (int it = 0; it < options.max_iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    mid_pt = mmr_scaled(g, mid);
    res.iterations = it + 1;
    if (std::abs(mid_pt.imbalance) <= options.balance_tol) {
      res.status = BalanceResult::Status::Balanced;
      res.t_star = mid;
      res.final_point = std::move(mid_pt);
      res.bracket_lo = lo;
      res.bracket_hi = hi;
      return res;
    }
    if (mid_pt.imbalance < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= options.interval_tol) {
      res.status = BalanceResult::Status::BracketOnly;
      res.t_star = 0.5 * (lo + hi);
      res.final_point = std::move(mid_pt);
      res.bracket_lo = lo;
      res.bracket_hi = hi;
      return res;
    }
  }
  res.status = BalanceResult::Status::BracketOnly;
  res.t_star = 0.5 * (lo + hi);
  res.final_point = std::move(mid_pt);
  res.bracket_lo = lo;
  res.bracket_hi = hi;
  return res;
}

std::vector<ScalingPoint> sweep(const BimatrixGame& g,
                                const std::vector<double>& grid,
                                MmrMethod method) {
  std::vector<ScalingPoint> points;
  points.reserve(grid.size());
  double prev = -1.0;
  for (double t : grid) {
    if (!(t >= 0.0 && t <= 1.0) || t < prev) {
      throw std::invalid_argument("grid must be sorted within [0, 1]");
    }
    prev = t;
    points.push_back(mmr_scaled(g, t, method));
  }
  return points;
}

}  // namespace bimatrix
