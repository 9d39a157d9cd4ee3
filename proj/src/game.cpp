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

#include "bimatrix/game.hpp"

#include <algorithm>
#include <cmath>

#include "bimatrix/rng.hpp"

namespace bimatrix {

void validate_profile(const MixedProfile& p, double tol) {
  if (p.row_strategy.size() == 0 || p.col_strategy.size() == 0) {
    throw InvalidProfile("profile strategies must be nonempty");
  }
  if (!is_simplex_vector(p.row_strategy, tol)) {
    throw InvalidProfile("row strategy is not a probability vector");
  }
  if (!is_simplex_vector(p.col_strategy, tol)) {
    throw InvalidProfile("col strategy is not a probability vector");
  }
}

BimatrixGame make_game(Matrix row_payoffs, Matrix col_payoffs) {
  if (row_payoffs.size() == 0 || col_payoffs.size() == 0) {
    throw EmptyMatrix("payoff matrices must be nonempty");
  }
  if (row_payoffs.rows() != col_payoffs.rows() ||
      row_payoffs.cols() != col_payoffs.cols()) {
    throw DimensionMismatch("payoff matrices must have identical shape");
  }
  if (!row_payoffs.allFinite() || !col_payoffs.allFinite()) {
    throw NonFiniteEntry("payoff matrices must have finite entries");
  }
  const bool in_unit = (row_payoffs.array() >= 0.0).all() &&
                       (row_payoffs.array() <= 1.0).all() &&
                       (col_payoffs.array() >= 0.0).all() &&
                       (col_payoffs.array() <= 1.0).all();
  return BimatrixGame{std::move(row_payoffs), std::move(col_payoffs), in_unit};
}

PayoffPair payoff(const BimatrixGame& g, const MixedProfile& p) {
  if (p.row_strategy.size() != g.rows() || p.col_strategy.size() != g.cols()) {
    throw DimensionMismatch("profile dimensions do not match game");
  }
  return PayoffPair{
      bilinear_value(g.row_payoffs, p.row_strategy, p.col_strategy),
      bilinear_value(g.col_payoffs, p.row_strategy, p.col_strategy)};
}

double weighted_payoff(const Eigen::Vector2d& alpha, const BimatrixGame& g,
                       const MixedProfile& p) {
  if (alpha(0) < -1e-9 || alpha(1) < -1e-9 ||
      std::abs(alpha.sum() - 1.0) > 1e-9) {
    throw InvalidWeight("weight vector must lie on the unit simplex");
  }
  const PayoffPair pay = payoff(g, p);
  return alpha(0) * pay.row + alpha(1) * pay.col;
}

PureMinimax pure_minimax(const BimatrixGame& g) {
  const double max_row = g.row_payoffs.maxCoeff();
  const double max_col = g.col_payoffs.maxCoeff();
  const double max_min = g.row_payoffs.cwiseMin(g.col_payoffs).maxCoeff();
  return PureMinimax{std::min(max_row, max_col), max_min};
}

BimatrixGame random_game(Eigen::Index rows, Eigen::Index cols,
                         std::uint64_t seed) {
  if (rows < 1 || cols < 1) {
    throw EmptyMatrix("game dimensions must be at least 1x1");
  }
  UnitUniformRng rng(seed);
  Matrix r(rows, cols);
  Matrix c(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) r(i, j) = rng.next();
  }
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) c(i, j) = rng.next();
  }
  return make_game(std::move(r), std::move(c));
}

}  // namespace bimatrix
