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

#include "bimatrix/mmr.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace bimatrix {

namespace {

struct Line {
  double slope;
  double intercept;
  double eval(double x) const { return intercept + slope * x; }
};

double intersect(const Line& a, const Line& b) {
  return (b.intercept - a.intercept) / (a.slope - b.slope);
}

// Upper envelope of the cell lines alpha -> alpha R_ij + (1 - alpha) C_ij,
// returned as hull lines of ascending slope plus their breakpoints.
struct Envelope {
  std::vector<Line> lines;
  std::vector<double> breaks;  // breaks[i] between lines[i] and lines[i+1]

  double value(double x) const {
    const auto it = std::upper_bound(breaks.begin(), breaks.end(), x);
    return lines[static_cast<std::size_t>(it - breaks.begin())].eval(x);
  }
};

Envelope upper_envelope(const BimatrixGame& g) {
  std::vector<Line> lines;
  lines.reserve(static_cast<std::size_t>(g.rows() * g.cols()));
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      const double r = g.row_payoffs(i, j);
      const double c = g.col_payoffs(i, j);
      lines.push_back(Line{r - c, c});
    }
  }
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
    return a.slope < b.slope || (a.slope == b.slope && a.intercept < b.intercept);
  });
  // Per slope only the highest intercept can ever be on top.
  std::vector<Line> unique_lines;
  for (const Line& l : lines) {
    if (!unique_lines.empty() && unique_lines.back().slope == l.slope) {
      unique_lines.back() = l;
    } else {
      unique_lines.push_back(l);
    }
  }

  Envelope env;
  for (const Line& l : unique_lines) {
    while (env.lines.size() >= 2) {
      const Line& a = env.lines[env.lines.size() - 2];
      const Line& b = env.lines.back();
      if (intersect(b, l) <= intersect(a, b)) {
        env.lines.pop_back();
      } else {
        break;
      }
    }
    env.lines.push_back(l);
  }
  env.breaks.resize(env.lines.size() - 1);
  for (std::size_t i = 0; i + 1 < env.lines.size(); ++i) {
    env.breaks[i] = intersect(env.lines[i], env.lines[i + 1]);
  }
  return env;
}

struct Cell {
  Eigen::Index row;
  Eigen::Index col;
};

}  // namespace

LpProblem build_dlp(const BimatrixGame& g) {
  const Eigen::Index n = g.rows();
  const Eigen::Index m = g.cols();
  const Eigen::Index cells = n * m;
  LpProblem p = LpProblem::make(ObjectiveSense::Maximize, cells + 1, 3);
  p.objective(cells) = 1.0;  // maximize the value variable
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      p.constraints(0, i * m + j) = g.row_payoffs(i, j);
      p.constraints(1, i * m + j) = g.col_payoffs(i, j);
      p.constraints(2, i * m + j) = 1.0;
    }
  }
  p.constraints(0, cells) = -1.0;
  p.constraints(1, cells) = -1.0;
  p.row_sense = {RowSense::GreaterEqual, RowSense::GreaterEqual,
                 RowSense::Equal};
  p.rhs << 0.0, 0.0, 1.0;
  p.lower(cells) = -kInfinity;  // the value variable is free
  return p;
}

WeightOptimum minimize_alpha(const BimatrixGame& g) {
  const Envelope env = upper_envelope(g);

  std::vector<double> candidates;
  candidates.push_back(0.0);
  for (double b : env.breaks) {
    if (b > 0.0 && b < 1.0) candidates.push_back(b);
  }
  candidates.push_back(1.0);

  double best = std::numeric_limits<double>::infinity();
  for (double x : candidates) best = std::min(best, env.value(x));

  const double tie = 1e-12 * (1.0 + std::abs(best));
  double lo = 1.0;
  double hi = 0.0;
  for (double x : candidates) {
    if (env.value(x) <= best + tie) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  }

  WeightOptimum out;
  out.interval_lo = lo;
  out.interval_hi = hi;
  const double alpha1 = 0.5 * (lo + hi);
  out.weights = Eigen::Vector2d(alpha1, 1.0 - alpha1);
  out.value = best;
  return out;
}

Eigen::Vector2d recover_alpha_tight(const BimatrixGame& g, double value) {
  const double feas_tol = 1e-8 * (1.0 + std::abs(value));
  const auto feasible = [&](double alpha1) {
    const double alpha2 = 1.0 - alpha1;
    const double peak =
        (alpha1 * g.row_payoffs + alpha2 * g.col_payoffs).maxCoeff();
    return peak <= value + feas_tol;
  };

  bool degenerate_seen = false;
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      const double r = g.row_payoffs(i, j);
      const double c = g.col_payoffs(i, j);
      const double denom = r - c;
      if (std::abs(denom) <= 1e-12 * (1.0 + std::abs(r))) {
        // Rank-deficient tightness system; usable only when the cell value
        // already sits at the optimum, in which case any weight solves it.
        if (std::abs(r - value) <= feas_tol) degenerate_seen = true;
        continue;
      }
      double alpha1 = (value - c) / denom;
      if (alpha1 < -1e-9 || alpha1 > 1.0 + 1e-9) continue;
      alpha1 = std::clamp(alpha1, 0.0, 1.0);
      if (feasible(alpha1)) return Eigen::Vector2d(alpha1, 1.0 - alpha1);
    }
  }
  if (degenerate_seen) {
    const Eigen::Vector2d alpha = minimize_alpha(g).weights;
    if (feasible(alpha(0))) return alpha;
  }
  throw NoConsistentPair(
      "no cell yields weights consistent with the given optimum");
}

namespace {

MmrSolution assemble_solution(const BimatrixGame& g, Matrix joint,
                              const WeightOptimum& wo, double maximin) {
  MmrSolution sol;
  sol.joint = std::move(joint);
  sol.weights = wo.weights;
  sol.minimax_value = wo.value;
  sol.maximin_value = maximin;

  Vector row_sums = sol.joint.rowwise().sum();
  Vector col_sums = sol.joint.colwise().sum().transpose();
  sol.row_marginal_error = std::abs(row_sums.sum() - 1.0);
  sol.col_marginal_error = std::abs(col_sums.sum() - 1.0);
  sol.row_strategy = row_sums / row_sums.sum();
  sol.col_strategy = col_sums / col_sums.sum();
  sol.payoffs = payoff(g, {sol.row_strategy, sol.col_strategy});

  const double gap = std::abs(sol.minimax_value - sol.maximin_value);
  if (gap > 1e-8 * (1.0 + std::abs(sol.minimax_value))) {
    std::ostringstream os;
    os << "duality gap " << gap << " exceeds tolerance";
    throw DualityGapExceeded(os.str());
  }
  return sol;
}

MmrSolution solve_direct(const BimatrixGame& g) {
  const WeightOptimum wo = minimize_alpha(g);
  const double delta = wo.value;
  const double alpha1 = wo.weights(0);
  const double alpha2 = wo.weights(1);
  const double support_tol = 1e-9 * (1.0 + std::abs(delta));

  const Matrix weighted = alpha1 * g.row_payoffs + alpha2 * g.col_payoffs;
  std::vector<Cell> tied;
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      if (weighted(i, j) >= delta - support_tol) tied.push_back(Cell{i, j});
    }
  }

  Matrix joint = Matrix::Zero(g.rows(), g.cols());
  if (alpha1 == 0.0 || alpha1 == 1.0) {
    // Only one payoff constraint binds; among the tied cells the slack
    // player's best cell keeps the joint distribution feasible.
    const Matrix& slack_payoffs =
        alpha1 == 0.0 ? g.row_payoffs : g.col_payoffs;
    const Cell* pick = &tied.front();
    for (const Cell& c : tied) {
      if (slack_payoffs(c.row, c.col) >
          slack_payoffs(pick->row, pick->col)) {
        pick = &c;
      }
    }
    joint(pick->row, pick->col) = 1.0;
  } else {
    // Both constraints bind: mix the extreme tied cells so the row payout
    // meets the optimum exactly; the column payout then matches too.
    const Cell* hi = &tied.front();
    const Cell* lo = &tied.front();
    for (const Cell& c : tied) {
      if (g.row_payoffs(c.row, c.col) > g.row_payoffs(hi->row, hi->col)) {
        hi = &c;
      }
      if (g.row_payoffs(c.row, c.col) < g.row_payoffs(lo->row, lo->col)) {
        lo = &c;
      }
    }
    const double r_hi = g.row_payoffs(hi->row, hi->col);
    const double r_lo = g.row_payoffs(lo->row, lo->col);
    if (r_hi - r_lo <= 1e-12 * (1.0 + std::abs(r_hi))) {
      joint(hi->row, hi->col) = 1.0;
    } else {
      const double w = std::clamp((delta - r_lo) / (r_hi - r_lo), 0.0, 1.0);
      joint(hi->row, hi->col) = w;
      joint(lo->row, lo->col) += 1.0 - w;
    }
  }

  const double row_value = (g.row_payoffs.array() * joint.array()).sum();
  const double col_value = (g.col_payoffs.array() * joint.array()).sum();
  return assemble_solution(g, std::move(joint), wo,
                           std::min(row_value, col_value));
}

MmrSolution solve_via_simplex(const BimatrixGame& g,
                              const LpOptions& lp_options) {
  const LpProblem dlp = build_dlp(g);
  const LpSolution lp = solve_lp(dlp, lp_options);
  if (lp.status != LpStatus::Optimal) {
    std::ostringstream os;
    os << "joint-distribution LP ended with status " << to_string(lp.status);
    throw NumericalBreakdown(os.str());
  }
  const Eigen::Index n = g.rows();
  const Eigen::Index m = g.cols();
  Matrix joint(n, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) joint(i, j) = lp.x(i * m + j);
  }
  const WeightOptimum wo = minimize_alpha(g);
  return assemble_solution(g, std::move(joint), wo, lp.x(n * m));
}

}  // namespace

MmrSolution solve_mmr(const BimatrixGame& g, MmrMethod method,
                      const LpOptions& lp_options) {
  return method == MmrMethod::Direct ? solve_direct(g)
                                     : solve_via_simplex(g, lp_options);
}

DominanceReport dominance_report(
    const BimatrixGame& g, const MmrSolution& sol,
    const std::vector<NashEquilibrium>& equilibria) {
  DominanceReport report;
  bool all_row = true;
  bool all_col = true;
  for (std::size_t k = 0; k < equilibria.size(); ++k) {
    const NashEquilibrium& eq = equilibria[k];
    const MixedProfile p{eq.row_strategy, eq.col_strategy};
    if (!is_nash(g, p, 1e-6)) {
      std::ostringstream os;
      os << "input " << k << " fails the equilibrium check at 1e-6";
      throw NotAnEquilibrium(os.str());
    }
    const PayoffPair pay = payoff(g, p);
    DominanceEntry entry;
    entry.equilibrium = k;
    entry.row_better = sol.payoffs.row >= pay.row - 1e-9;
    entry.col_better = sol.payoffs.col >= pay.col - 1e-9;
    entry.weighted_slack =
        sol.minimax_value -
        (sol.weights(0) * pay.row + sol.weights(1) * pay.col);
    all_row = all_row && entry.row_better;
    all_col = all_col && entry.col_better;
    report.entries.push_back(entry);
  }
  report.both_better_vs_all = all_row && all_col;
  report.one_player_optimal_vs_all = all_row || all_col;
  return report;
}

}  // namespace bimatrix
