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

#include <cmath>

#include "bimatrix/mmr.hpp"
#include "bimatrix/rng.hpp"
#include "oracles.hpp"

using namespace bimatrix;
using testing::example_2x2;
using testing::example_3x3;
using testing::grid_min_alpha;
using testing::matrix_from;

TEST_CASE("dual program coefficients") {
  const LpProblem dlp = build_dlp(example_2x2());
  CHECK(dlp.num_vars() == 5);
  CHECK(dlp.num_rows() == 3);
  CHECK(dlp.sense == ObjectiveSense::Maximize);
  const Eigen::VectorXd row0 = dlp.constraints.row(0).head(4);
  const Eigen::VectorXd row1 = dlp.constraints.row(1).head(4);
  CHECK(row0(0) == 5.0);
  CHECK(row0(1) == 3.0);
  CHECK(row0(2) == 3.0);
  CHECK(row0(3) == 4.0);
  CHECK(row1(0) == 3.0);
  CHECK(row1(1) == 2.0);
  CHECK(row1(2) == 2.0);
  CHECK(row1(3) == 1.0);
  CHECK(dlp.constraints(0, 4) == -1.0);
  CHECK(dlp.constraints(2, 4) == 0.0);
  CHECK((dlp.constraints.row(2).head(4).array() == 1.0).all());
  CHECK(dlp.rhs(2) == 1.0);
  CHECK(dlp.lower(4) == -kInfinity);

  const LpProblem dlp3 = build_dlp(example_3x3());
  CHECK(dlp3.num_vars() == 10);
  CHECK(dlp3.constraints(0, 0) == 0.388);
  CHECK(dlp3.constraints(0, 1) == 0.600);
  CHECK(dlp3.constraints(0, 8) == 0.031);
  CHECK(dlp3.constraints(1, 0) == 1.0);
  CHECK(dlp3.constraints(1, 8) == 0.905);
}

TEST_CASE("minimize_alpha on the 2x2 example") {
  const WeightOptimum wo = minimize_alpha(example_2x2());
  CHECK(wo.weights(0) == 0.0);
  CHECK(wo.weights(1) == 1.0);
  CHECK(wo.value == doctest::Approx(3.0).epsilon(1e-12));

  const auto [grid_alpha, grid_value] = grid_min_alpha(example_2x2(), 1e-4);
  CHECK(std::abs(wo.value - grid_value) <= 1e-4);
  CHECK(std::abs(wo.weights(0) - grid_alpha) <= 1e-4);
}

TEST_CASE("minimize_alpha on the 3x3 example") {
  const WeightOptimum wo = minimize_alpha(example_3x3());
  CHECK(wo.weights(0) == 1.0);
  CHECK(wo.weights(1) == 0.0);
  CHECK(wo.value == doctest::Approx(0.850).epsilon(1e-12));

  const auto [grid_alpha, grid_value] = grid_min_alpha(example_3x3(), 1e-4);
  CHECK(std::abs(wo.value - grid_value) <= 1e-4);
}

TEST_CASE("minimize_alpha resolves flat minima to the midpoint") {
  const Matrix same = matrix_from({{0.3, 0.8}, {0.1, 0.4}});
  const WeightOptimum wo = minimize_alpha(make_game(same, same));
  CHECK(wo.weights(0) == 0.5);
  CHECK(wo.value == 0.8);
  CHECK(wo.interval_lo == 0.0);
  CHECK(wo.interval_hi == 1.0);
}

TEST_CASE("grid oracle equivalence on random games") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const BimatrixGame g = random_game(10, 10, substream_seed(91, seed));
    const WeightOptimum wo = minimize_alpha(g);
    const auto [grid_alpha, grid_value] = grid_min_alpha(g, 1e-5);
    CHECK(std::abs(wo.value - grid_value) <= 1e-4);
  }
}

TEST_CASE("solve_mmr on the 2x2 example") {
  const MmrSolution sol = solve_mmr(example_2x2());
  CHECK(sol.row_strategy(0) == 1.0);
  CHECK(sol.row_strategy(1) == 0.0);
  CHECK(sol.col_strategy(0) == 1.0);
  CHECK(sol.col_strategy(1) == 0.0);
  CHECK(sol.payoffs.row == 5.0);
  CHECK(sol.payoffs.col == 3.0);
  CHECK(sol.minimax_value == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(sol.maximin_value == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(sol.weights(0) == 0.0);
  CHECK(sol.joint(0, 0) == 1.0);
}

TEST_CASE("solve_mmr on the 3x3 example") {
  const BimatrixGame g = example_3x3();
  const MmrSolution sol = solve_mmr(g);
  CHECK(sol.row_strategy(2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sol.col_strategy(1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(sol.payoffs.row - g.row_payoffs(2, 1)) <= 1e-9);
  CHECK(std::abs(sol.payoffs.col - g.col_payoffs(2, 1)) <= 1e-9);
  CHECK(sol.payoffs.row == doctest::Approx(0.850).epsilon(1e-9));
  CHECK(sol.payoffs.col == doctest::Approx(0.904).epsilon(1e-9));
}

TEST_CASE("solve_mmr on a 1x1 game") {
  const BimatrixGame g = make_game(matrix_from({{2.5}}), matrix_from({{0.75}}));
  const MmrSolution sol = solve_mmr(g);
  CHECK(sol.row_strategy(0) == 1.0);
  CHECK(sol.col_strategy(0) == 1.0);
  CHECK(sol.maximin_value == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(sol.payoffs.row == 2.5);
  CHECK(sol.payoffs.col == 0.75);
}

TEST_CASE("simplex and direct paths agree") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Eigen::Index size = 2 + static_cast<Eigen::Index>(seed % 7) * 8;
    const BimatrixGame g = random_game(size, std::max<Eigen::Index>(2, size - 1),
                                       substream_seed(17, seed));
    const MmrSolution direct = solve_mmr(g, MmrMethod::Direct);
    const MmrSolution simplex = solve_mmr(g, MmrMethod::Simplex);
    // Two different algebraic routes; agreement to near machine precision.
    CHECK(std::abs(direct.maximin_value - simplex.maximin_value) <=
          1e-12 * (1.0 + std::abs(direct.maximin_value)));
  }
}

TEST_CASE("duality and support invariants on random games") {
  UnitUniformRng size_rng(5);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(size_rng.next() * 28);
    const Eigen::Index m = 2 + static_cast<Eigen::Index>(size_rng.next() * 28);
    const BimatrixGame g = random_game(n, m, substream_seed(31, seed));
    const MmrSolution sol = solve_mmr(g);

    CHECK(std::abs(sol.minimax_value - sol.maximin_value) <=
          1e-8 * (1.0 + std::abs(sol.minimax_value)));

    // Support lies on maximizing cells of the weighted matrix.
    const Matrix weighted =
        sol.weights(0) * g.row_payoffs + sol.weights(1) * g.col_payoffs;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < m; ++j) {
        if (sol.joint(i, j) > 1e-7) {
          CHECK(weighted(i, j) >= sol.minimax_value - 1e-7);
        }
      }
    }

    // A single-cell distribution is feasible, so the optimum covers it.
    CHECK(sol.maximin_value >=
          g.row_payoffs.cwiseMin(g.col_payoffs).maxCoeff() - 1e-9);

    CHECK(sol.row_marginal_error <= 1e-7);
    CHECK(sol.col_marginal_error <= 1e-7);

    // The optimum bounds the weighted payoff of every profile.
    UnitUniformRng profile_rng(seed);
    for (int trial = 0; trial < 5; ++trial) {
      Vector x(n), y(m);
      for (Eigen::Index i = 0; i < n; ++i) x(i) = profile_rng.next();
      for (Eigen::Index j = 0; j < m; ++j) y(j) = profile_rng.next();
      x /= x.sum();
      y /= y.sum();
      CHECK(weighted_payoff(sol.weights, g, {x, y}) <=
            sol.minimax_value + 1e-8);
    }
    CHECK(weighted.maxCoeff() <= sol.minimax_value + 1e-8);  // all vertices
  }
}

TEST_CASE("recover_alpha_tight on the worked examples") {
  const Eigen::Vector2d a2 = recover_alpha_tight(example_2x2(), 3.0);
  CHECK(a2(0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(a2(1) == doctest::Approx(1.0).epsilon(1e-12));

  const Eigen::Vector2d a3 = recover_alpha_tight(example_3x3(), 0.850);
  CHECK(a3(0) == doctest::Approx(1.0).epsilon(1e-12));

  // Same optimal value as minimize_alpha on random games.
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const BimatrixGame g = random_game(6, 6, substream_seed(47, seed));
    const WeightOptimum wo = minimize_alpha(g);
    const Eigen::Vector2d rec = recover_alpha_tight(g, wo.value);
    const double v_rec =
        (rec(0) * g.row_payoffs + rec(1) * g.col_payoffs).maxCoeff();
    CHECK(v_rec == doctest::Approx(wo.value).epsilon(1e-9));
  }
}

TEST_CASE("recover_alpha_tight degenerate and inconsistent cases") {
  const Matrix constant = Matrix::Constant(2, 2, 0.5);
  const BimatrixGame flat = make_game(constant, constant);
  const Eigen::Vector2d a = recover_alpha_tight(flat, 0.5);
  CHECK(a(0) == 0.5);  // canonical fallback

  CHECK_THROWS_AS(recover_alpha_tight(example_2x2(), 2.0), NoConsistentPair);
}

TEST_CASE("dominance report on the worked examples") {
  const BimatrixGame g3 = example_3x3();
  const MmrSolution sol3 = solve_mmr(g3);
  const std::vector<NashEquilibrium> eqs3 = support_enumeration(g3);
  REQUIRE(eqs3.size() == 3);
  const DominanceReport rep3 = dominance_report(g3, sol3, eqs3);
  REQUIRE(rep3.entries.size() == 3);
  for (const DominanceEntry& e : rep3.entries) {
    CHECK(e.row_better);  // 0.850 beats 0.482, 0.716, 0.806
    CHECK(e.weighted_slack >= -1e-7);
  }
  CHECK(rep3.one_player_optimal_vs_all);

  const BimatrixGame g2 = example_2x2();
  const MmrSolution sol2 = solve_mmr(g2);
  const std::vector<NashEquilibrium> eqs2 = support_enumeration(g2);
  REQUIRE(eqs2.size() == 1);
  const DominanceReport rep2 = dominance_report(g2, sol2, eqs2);
  CHECK(rep2.entries[0].row_better);
  CHECK(rep2.entries[0].col_better);
  CHECK(rep2.entries[0].weighted_slack >= -1e-9);
  CHECK(rep2.both_better_vs_all);
  CHECK(rep2.one_player_optimal_vs_all);

  const DominanceReport empty = dominance_report(g2, sol2, {});
  CHECK(empty.entries.empty());
  CHECK(empty.both_better_vs_all);
  CHECK(empty.one_player_optimal_vs_all);
}

TEST_CASE("dominance report rejects non-equilibria") {
  const BimatrixGame g = example_2x2();
  const MmrSolution sol = solve_mmr(g);
  NashEquilibrium fake;
  fake.row_strategy = testing::vector_from({0.0, 1.0});
  fake.col_strategy = testing::vector_from({0.0, 1.0});
  fake.payoffs = payoff(g, {fake.row_strategy, fake.col_strategy});
  CHECK_THROWS_AS(dominance_report(g, sol, {fake}), NotAnEquilibrium);
}
