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

#ifndef BIMATRIX_GAME_HPP_
#define BIMATRIX_GAME_HPP_

#include <Eigen/Core>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bimatrix {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NonFiniteEntry : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct EmptyMatrix : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidWeight : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidProfile : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A two-player game in strategic form. Both payoff matrices are
// rows x cols: entry (i, j) is the payoff when the row player picks
// action i and the column player picks action j.
struct BimatrixGame {
  Matrix row_payoffs;  // payoffs for the row player
  Matrix col_payoffs;  // payoffs for the column player
  bool normalized = false;  // true iff every entry of both matrices is in [0, 1]

  Eigen::Index rows() const { return row_payoffs.rows(); }
  Eigen::Index cols() const { return row_payoffs.cols(); }
};

// A pair of mixed strategies. Valid profiles are entrywise nonnegative and
// sum to one (see validate_profile); evaluation routines only require
// matching dimensions.
struct MixedProfile {
  Vector row_strategy;
  Vector col_strategy;
};

struct PayoffPair {
  double row = 0.0;
  double col = 0.0;
};

// Expected-payoff values under the pure-action reading of the meta game:
// min_max is the best worst-case cell payout over the choice of player,
// max_min the players' best guaranteed payout. min_max >= max_min always.
struct PureMinimax {
  double min_max = 0.0;
  double max_min = 0.0;
};

inline bool is_simplex_vector(const Vector& v, double tol = 1e-9) {
  if (v.size() == 0) return false;
  if ((v.array() < -tol).any()) return false;
  return std::abs(v.sum() - 1.0) <= tol;
}

// Throws InvalidProfile / DimensionMismatch unless both strategies are
// simplex vectors within `tol`.
void validate_profile(const MixedProfile& p, double tol = 1e-9);

// Validates and assembles a game. Throws EmptyMatrix, DimensionMismatch or
// NonFiniteEntry; sets the `normalized` flag from the entry range.
BimatrixGame make_game(Matrix row_payoffs, Matrix col_payoffs);

// Bilinear payoff evaluation x^T A y for any compatible expressions.
template <typename DerivedA, typename DerivedX, typename DerivedY>
double bilinear_value(const Eigen::MatrixBase<DerivedA>& payoffs,
                      const Eigen::MatrixBase<DerivedX>& x,
                      const Eigen::MatrixBase<DerivedY>& y) {
  return x.dot(payoffs * y);
}

// Expected payoffs (x^T R y, x^T C y). Requires matching dimensions only;
// callers wanting simplex validation use validate_profile first.
PayoffPair payoff(const BimatrixGame& g, const MixedProfile& p);

// alpha_1 * row payoff + alpha_2 * col payoff for a weight vector on the
// two players. Throws InvalidWeight unless alpha is a simplex vector.
double weighted_payoff(const Eigen::Vector2d& alpha, const BimatrixGame& g,
                       const MixedProfile& p);

// Pure-action minimax values over the stacked cell payouts; see PureMinimax.
PureMinimax pure_minimax(const BimatrixGame& g);

// A rows x cols game with entries i.i.d. uniform on [0, 1). The stream is
// UnitUniformRng(seed); R is filled row-major first, then C. Identical
// (rows, cols, seed) triples produce bitwise-identical games on every
// platform.
BimatrixGame random_game(Eigen::Index rows, Eigen::Index cols,
                         std::uint64_t seed);

}  // namespace bimatrix

#endif  // BIMATRIX_GAME_HPP_
