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

#include "bimatrix/lp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bimatrix {

namespace {

using RowMajorMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

bool finite_or_inf(double v) { return !std::isnan(v); }

}  // namespace

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "Optimal";
    case LpStatus::Infeasible: return "Infeasible";
    case LpStatus::Unbounded: return "Unbounded";
    case LpStatus::IterationLimit: return "IterationLimit";
  }
  return "?";
}

LpProblem LpProblem::make(ObjectiveSense sense, Eigen::Index vars,
                          Eigen::Index rows) {
  LpProblem p;
  p.sense = sense;
  p.objective = Eigen::VectorXd::Zero(vars);
  p.constraints = Eigen::MatrixXd::Zero(rows, vars);
  p.row_sense.assign(static_cast<std::size_t>(rows), RowSense::LessEqual);
  p.rhs = Eigen::VectorXd::Zero(rows);
  p.lower = Eigen::VectorXd::Zero(vars);
  p.upper = Eigen::VectorXd::Constant(vars, kInfinity);
  return p;
}

void validate(const LpProblem& p) {
  const Eigen::Index n = p.num_vars();
  const Eigen::Index m = p.num_rows();
  if (n < 1) throw std::invalid_argument("lp: no variables");
  if (p.constraints.rows() != m || p.constraints.cols() != n ||
      static_cast<Eigen::Index>(p.row_sense.size()) != m ||
      p.lower.size() != n || p.upper.size() != n) {
    throw std::invalid_argument("lp: inconsistent dimensions");
  }
  if (!p.objective.allFinite() || !p.constraints.allFinite() ||
      !p.rhs.allFinite()) {
    throw std::invalid_argument("lp: non-finite problem data");
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    if (!finite_or_inf(p.lower(j)) || !finite_or_inf(p.upper(j)) ||
        p.lower(j) > p.upper(j)) {
      throw std::invalid_argument("lp: invalid variable bounds");
    }
    if (p.lower(j) == kInfinity || p.upper(j) == -kInfinity) {
      throw std::invalid_argument("lp: invalid variable bounds");
    }
  }
}

Eigen::VectorXd StandardForm::recover(const Eigen::VectorXd& x_std) const {
  Eigen::VectorXd x = shift;
  for (std::size_t j = 0; j < var_map.size(); ++j) {
    for (const VarTerm& t : var_map[j]) {
      x(static_cast<Eigen::Index>(j)) += t.sign * x_std(t.column);
    }
  }
  return x;
}

StandardForm to_standard_form(const LpProblem& p) {
  validate(p);
  const Eigen::Index n = p.num_vars();
  const Eigen::Index m = p.num_rows();
  const double csign = p.sense == ObjectiveSense::Maximize ? -1.0 : 1.0;

  StandardForm sf;
  sf.objective_sign = csign;
  sf.original_rows = m;
  sf.shift = Eigen::VectorXd::Zero(n);
  sf.var_map.resize(static_cast<std::size_t>(n));

  // Column plan per original variable.
  Eigen::Index cols = 0;
  std::vector<Eigen::Index> bounded;  // vars needing an explicit range row
  for (Eigen::Index j = 0; j < n; ++j) {
    const double lo = p.lower(j);
    const double hi = p.upper(j);
    if (lo != -kInfinity) {
      sf.shift(j) = lo;
      sf.var_map[static_cast<std::size_t>(j)] = {{cols++, 1.0}};
      if (hi != kInfinity) bounded.push_back(j);
    } else if (hi != kInfinity) {
      // Mirror: x = hi - x'.
      sf.shift(j) = hi;
      sf.var_map[static_cast<std::size_t>(j)] = {{cols++, -1.0}};
    } else {
      sf.var_map[static_cast<std::size_t>(j)] = {{cols, 1.0}, {cols + 1, -1.0}};
      cols += 2;
    }
  }

  Eigen::Index slack_count = 0;
  for (RowSense s : p.row_sense) {
    if (s != RowSense::Equal) ++slack_count;
  }
  const Eigen::Index range_rows = static_cast<Eigen::Index>(bounded.size());
  const Eigen::Index total_rows = m + range_rows;
  const Eigen::Index total_cols = cols + slack_count + range_rows;

  LpProblem std_p = LpProblem::make(ObjectiveSense::Minimize, total_cols,
                                    total_rows);
  std_p.row_sense.assign(static_cast<std::size_t>(total_rows), RowSense::Equal);

  for (Eigen::Index j = 0; j < n; ++j) {
    for (const StandardForm::VarTerm& t : sf.var_map[static_cast<std::size_t>(j)]) {
      std_p.objective(t.column) = csign * t.sign * p.objective(j);
      std_p.constraints.col(t.column).head(m) = t.sign * p.constraints.col(j);
    }
    sf.objective_offset += p.objective(j) * sf.shift(j);
  }
  std_p.rhs.head(m) = p.rhs - p.constraints * sf.shift;

  Eigen::Index slack_col = cols;
  for (Eigen::Index i = 0; i < m; ++i) {
    switch (p.row_sense[static_cast<std::size_t>(i)]) {
      case RowSense::LessEqual:
        std_p.constraints(i, slack_col++) = 1.0;
        break;
      case RowSense::GreaterEqual:
        std_p.constraints(i, slack_col++) = -1.0;
        break;
      case RowSense::Equal:
        break;
    }
  }
  for (Eigen::Index k = 0; k < range_rows; ++k) {
    const Eigen::Index j = bounded[static_cast<std::size_t>(k)];
    const Eigen::Index row = m + k;
    std_p.constraints(row, sf.var_map[static_cast<std::size_t>(j)][0].column) =
        1.0;
    std_p.constraints(row, slack_col++) = 1.0;
    std_p.rhs(row) = p.upper(j) - p.lower(j);
  }

  sf.problem = std::move(std_p);
  return sf;
}

namespace {

// Dense two-phase tableau. Layout: structural columns [0, n), artificial
// columns [n, n+m), rhs column n+m. Row m holds phase-2 reduced costs, row
// m+1 phase-1 reduced costs; their rhs entries hold the negated objective
// values.
class SimplexTableau {
 public:
  SimplexTableau(const LpProblem& std_problem, const LpOptions& options)
      : opts_(options),
        m_(std_problem.num_rows()),
        n_(std_problem.num_vars()),
        rhs_col_(n_ + m_),
        cost_(std_problem.objective),
        row_flip_(Eigen::VectorXd::Ones(m_)),
        tab_(m_ + 2, n_ + m_ + 1) {
    tab_.setZero();
    tab_.block(0, 0, m_, n_) = std_problem.constraints;
    tab_.col(rhs_col_).head(m_) = std_problem.rhs;
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (tab_(i, rhs_col_) < 0.0) {
        tab_.row(i) = -tab_.row(i);
        row_flip_(i) = -1.0;
      }
      tab_(i, n_ + i) = 1.0;
    }
    basis_.resize(static_cast<std::size_t>(m_));
    in_basis_.assign(static_cast<std::size_t>(n_ + m_), false);
    for (Eigen::Index i = 0; i < m_; ++i) {
      basis_[static_cast<std::size_t>(i)] = n_ + i;
      in_basis_[static_cast<std::size_t>(n_ + i)] = true;
    }
    // Phase-2 reduced costs: all-artificial basis has zero cost.
    tab_.row(m_).head(n_) = cost_.transpose();
    // Phase-1 reduced costs: minimize the sum of artificials.
    for (Eigen::Index j = 0; j <= rhs_col_; ++j) {
      double colsum = tab_.col(j).head(m_).sum();
      tab_(m_ + 1, j) = (j >= n_ && j < n_ + m_ ? 1.0 : 0.0) - colsum;
    }
    max_iterations_ = options.max_iterations > 0
                          ? options.max_iterations
                          : 50 * static_cast<long>(m_ + n_);
  }

  long iterations() const { return iterations_; }
  const std::vector<Eigen::Index>& basis() const { return basis_; }

  double phase1_objective() const { return -tab_(m_ + 1, rhs_col_); }
  double phase2_objective() const { return -tab_(m_, rhs_col_); }

  enum class Step { Optimal, Pivoted, Unbounded, IterationLimit };

  // One simplex iteration against the given cost row.
  Step step(Eigen::Index cost_row, bool allow_artificial_entering) {
    if (iterations_ >= max_iterations_) return Step::IterationLimit;
    const Eigen::Index limit = allow_artificial_entering ? n_ + m_ : n_;
    Eigen::Index entering = -1;
    double best = -opts_.feas_tol;
    if (opts_.rule == PivotRule::Bland) {
      for (Eigen::Index j = 0; j < limit; ++j) {
        if (in_basis_[static_cast<std::size_t>(j)]) continue;
        if (tab_(cost_row, j) < best) {
          entering = j;
          break;
        }
      }
    } else {
      for (Eigen::Index j = 0; j < limit; ++j) {
        if (in_basis_[static_cast<std::size_t>(j)]) continue;
        if (tab_(cost_row, j) < best) {
          best = tab_(cost_row, j);
          entering = j;
        }
      }
    }
    if (entering < 0) return Step::Optimal;

    Eigen::Index row = choose_leaving(entering);
    if (row < 0) {
      // No admissible pivot in this column. Any other improving column may
      // still work; only give up when none does.
      Eigen::Index fallback = -1;
      for (Eigen::Index j = 0; j < limit && fallback < 0; ++j) {
        if (in_basis_[static_cast<std::size_t>(j)] || j == entering) continue;
        if (tab_(cost_row, j) < -opts_.feas_tol && choose_leaving(j) >= 0) {
          fallback = j;
        }
      }
      if (fallback < 0) {
        if (column_has_positive(entering)) {
          throw NumericalBreakdown(
              "simplex: pivot candidates below pivot tolerance");
        }
        unbounded_column_ = entering;
        return Step::Unbounded;
      }
      entering = fallback;
      row = choose_leaving(entering);
    }
    pivot(row, entering);
    ++iterations_;
    return Step::Pivoted;
  }

  // Pivot zero-level artificials out of the basis after phase 1. Rows that
  // cannot be cleared are redundant and stay inert with the artificial
  // pinned at zero.
  void drive_out_artificials() {
    for (Eigen::Index r = 0; r < m_; ++r) {
      if (basis_[static_cast<std::size_t>(r)] < n_) continue;
      for (Eigen::Index j = 0; j < n_; ++j) {
        if (in_basis_[static_cast<std::size_t>(j)]) continue;
        if (std::abs(tab_(r, j)) > opts_.pivot_tol) {
          pivot(r, j);
          break;
        }
      }
    }
  }

  Eigen::VectorXd primal() const {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n_);
    for (Eigen::Index r = 0; r < m_; ++r) {
      const Eigen::Index col = basis_[static_cast<std::size_t>(r)];
      if (col < n_) x(col) = tab_(r, rhs_col_);
    }
    return x;
  }

  // Duals of the standard-form rows, read off the artificial columns. The
  // internal sign flips applied to make b >= 0 are undone here.
  Eigen::VectorXd duals(Eigen::Index cost_row) const {
    Eigen::VectorXd y(m_);
    for (Eigen::Index i = 0; i < m_; ++i) {
      const double base = cost_row == m_ + 1 ? 1.0 : 0.0;
      y(i) = row_flip_(i) * (base - tab_(cost_row, n_ + i));
    }
    return y;
  }

  Eigen::VectorXd reduced_costs() const {
    return tab_.row(m_).head(n_).transpose();
  }

  std::string unbounded_note() const {
    std::ostringstream os;
    os << "unbounded ray along standard-form column " << unbounded_column_;
    return os.str();
  }

 private:
  bool column_has_positive(Eigen::Index col) const {
    for (Eigen::Index r = 0; r < m_; ++r) {
      if (tab_(r, col) > 0.0) return true;
    }
    return false;
  }

  Eigen::Index choose_leaving(Eigen::Index entering) const {
    // An artificial stuck in the basis at level zero must leave as soon as
    // its row meets the entering column, or it could drift positive.
    for (Eigen::Index r = 0; r < m_; ++r) {
      if (basis_[static_cast<std::size_t>(r)] >= n_ &&
          std::abs(tab_(r, entering)) > opts_.pivot_tol &&
          tab_(r, rhs_col_) <= opts_.feas_tol) {
        return r;
      }
    }
    Eigen::Index best = -1;
    for (Eigen::Index r = 0; r < m_; ++r) {
      if (tab_(r, entering) <= opts_.pivot_tol) continue;
      if (best < 0) {
        best = r;
        continue;
      }
      if (opts_.rule == PivotRule::Bland) {
        const double ratio_r = tab_(r, rhs_col_) / tab_(r, entering);
        const double ratio_b = tab_(best, rhs_col_) / tab_(best, entering);
        const double tie = 1e-12 * (1.0 + std::abs(ratio_b));
        if (ratio_r < ratio_b - tie ||
            (std::abs(ratio_r - ratio_b) <= tie &&
             basis_[static_cast<std::size_t>(r)] <
                 basis_[static_cast<std::size_t>(best)])) {
          best = r;
        }
      } else if (lex_less(r, best, entering)) {
        best = r;
      }
    }
    return best;
  }

  // Lexicographic ratio comparison over (rhs, B^-1) scaled by the entering
  // column; exact ties fall through to the next component. Full ties are
  // impossible for linearly independent B^-1 rows.
  bool lex_less(Eigen::Index r, Eigen::Index s, Eigen::Index entering) const {
    const double pr = tab_(r, entering);
    const double ps = tab_(s, entering);
    double a = tab_(r, rhs_col_) / pr;
    double b = tab_(s, rhs_col_) / ps;
    if (a != b) return a < b;
    for (Eigen::Index k = 0; k < m_; ++k) {
      a = tab_(r, n_ + k) / pr;
      b = tab_(s, n_ + k) / ps;
      if (a != b) return a < b;
    }
    return false;
  }

  void pivot(Eigen::Index row, Eigen::Index col) {
    const double inv = 1.0 / tab_(row, col);
    tab_.row(row) *= inv;
    tab_(row, col) = 1.0;  // exact
    for (Eigen::Index r = 0; r < m_ + 2; ++r) {
      if (r == row) continue;
      const double factor = tab_(r, col);
      if (factor != 0.0) {
        tab_.row(r) -= factor * tab_.row(row);
        tab_(r, col) = 0.0;  // exact
      }
    }
    in_basis_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(row)])] =
        false;
    basis_[static_cast<std::size_t>(row)] = col;
    in_basis_[static_cast<std::size_t>(col)] = true;
  }

  LpOptions opts_;
  Eigen::Index m_;
  Eigen::Index n_;
  Eigen::Index rhs_col_;
  Eigen::VectorXd cost_;
  Eigen::VectorXd row_flip_;
  RowMajorMatrix tab_;
  std::vector<Eigen::Index> basis_;
  std::vector<bool> in_basis_;
  long iterations_ = 0;
  long max_iterations_ = 0;
  Eigen::Index unbounded_column_ = -1;
};

double scaled_primal_residual(const LpProblem& p, const Eigen::VectorXd& x) {
  double worst = 0.0;
  const Eigen::VectorXd ax = p.constraints * x;
  for (Eigen::Index i = 0; i < p.num_rows(); ++i) {
    const double scale = 1.0 + std::abs(p.rhs(i));
    double viol = 0.0;
    switch (p.row_sense[static_cast<std::size_t>(i)]) {
      case RowSense::LessEqual: viol = ax(i) - p.rhs(i); break;
      case RowSense::GreaterEqual: viol = p.rhs(i) - ax(i); break;
      case RowSense::Equal: viol = std::abs(ax(i) - p.rhs(i)); break;
    }
    worst = std::max(worst, viol / scale);
  }
  for (Eigen::Index j = 0; j < p.num_vars(); ++j) {
    if (p.lower(j) != -kInfinity) {
      worst = std::max(worst, (p.lower(j) - x(j)) / (1.0 + std::abs(p.lower(j))));
    }
    if (p.upper(j) != kInfinity) {
      worst = std::max(worst, (x(j) - p.upper(j)) / (1.0 + std::abs(p.upper(j))));
    }
  }
  return std::max(worst, 0.0);
}

}  // namespace

LpSolution solve_lp(const LpProblem& p, const LpOptions& options) {
  const StandardForm sf = to_standard_form(p);
  const LpProblem& sp = sf.problem;
  SimplexTableau tableau(sp, options);

  LpSolution sol;

  // Phase 1.
  bool limit_hit = false;
  while (true) {
    const auto step = tableau.step(sp.num_rows() + 1, true);
    if (step == SimplexTableau::Step::Optimal) break;
    if (step == SimplexTableau::Step::IterationLimit) {
      limit_hit = true;
      break;
    }
    if (step == SimplexTableau::Step::Unbounded) {
      throw NumericalBreakdown("simplex: phase-1 objective unbounded");
    }
  }

  if (!limit_hit && tableau.phase1_objective() > options.feas_tol) {
    sol.status = LpStatus::Infeasible;
    sol.iterations = tableau.iterations();
    const Eigen::VectorXd y1 = tableau.duals(sp.num_rows() + 1);
    sol.farkas = y1.head(sf.original_rows);
    std::ostringstream os;
    os << "infeasible: phase-1 optimum " << tableau.phase1_objective()
       << " > 0; Farkas duals recorded";
    sol.reason = os.str();
    return sol;
  }

  if (!limit_hit) {
    tableau.drive_out_artificials();
    // Phase 2.
    while (true) {
      const auto step = tableau.step(sp.num_rows(), false);
      if (step == SimplexTableau::Step::Optimal) break;
      if (step == SimplexTableau::Step::IterationLimit) {
        limit_hit = true;
        break;
      }
      if (step == SimplexTableau::Step::Unbounded) {
        sol.status = LpStatus::Unbounded;
        sol.iterations = tableau.iterations();
        sol.reason = tableau.unbounded_note();
        return sol;
      }
    }
  }

  const Eigen::VectorXd x_std = tableau.primal();
  const Eigen::VectorXd y_std = tableau.duals(sp.num_rows());
  const Eigen::VectorXd d_std = tableau.reduced_costs();

  sol.status = limit_hit ? LpStatus::IterationLimit : LpStatus::Optimal;
  sol.iterations = tableau.iterations();
  sol.x = sf.recover(x_std);
  sol.objective = sf.recover_objective(sp.objective.dot(x_std));
  sol.dual_objective = sf.recover_objective(sp.rhs.dot(y_std));
  sol.y = sf.objective_sign * y_std.head(sf.original_rows);
  sol.reduced_costs.resize(p.num_vars());
  for (Eigen::Index j = 0; j < p.num_vars(); ++j) {
    const StandardForm::VarTerm& t =
        sf.var_map[static_cast<std::size_t>(j)].front();
    sol.reduced_costs(j) = sf.objective_sign * t.sign * d_std(t.column);
  }
  sol.basis.reserve(tableau.basis().size());
  for (Eigen::Index col : tableau.basis()) {
    sol.basis.push_back(static_cast<int>(col));
  }
  sol.primal_residual = scaled_primal_residual(p, sol.x);
  const double cost_scale = 1.0 + sp.objective.cwiseAbs().maxCoeff();
  sol.dual_residual = std::max(0.0, -d_std.minCoeff()) / cost_scale;
  sol.duality_gap = std::abs(sol.objective - sol.dual_objective);
  return sol;
}

}  // namespace bimatrix
