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

#ifndef BIMATRIX_LP_HPP_
#define BIMATRIX_LP_HPP_

#include <Eigen/Core>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace bimatrix {

enum class RowSense : char { LessEqual, Equal, GreaterEqual };
enum class ObjectiveSense : char { Minimize, Maximize };

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// A dense linear program
//   min/max  c^T x
//   s.t.     A x {<=,=,>=} b   (per-row sense)
//            lower <= x <= upper
// Lower bounds default to 0, upper bounds to +infinity; lower = -infinity
// declares a free variable.
struct LpProblem {
  ObjectiveSense sense = ObjectiveSense::Minimize;
  Eigen::VectorXd objective;          // c, length vars
  Eigen::MatrixXd constraints;        // A, rows x vars
  std::vector<RowSense> row_sense;    // length rows
  Eigen::VectorXd rhs;                // b, length rows
  Eigen::VectorXd lower;              // length vars (may be -inf)
  Eigen::VectorXd upper;              // length vars (may be +inf)

  Eigen::Index num_vars() const { return objective.size(); }
  Eigen::Index num_rows() const { return rhs.size(); }

  // A problem with default bounds (x >= 0) ready for row/objective fill-in.
  static LpProblem make(ObjectiveSense sense, Eigen::Index vars,
                        Eigen::Index rows);
};

// Throws std::invalid_argument when shapes disagree or data is non-finite
// (bounds may be infinite).
void validate(const LpProblem& p);

enum class LpStatus : char { Optimal, Infeasible, Unbounded, IterationLimit };

const char* to_string(LpStatus s);

struct LpSolution {
  LpStatus status = LpStatus::IterationLimit;
  Eigen::VectorXd x;              // primal values, original variables
  Eigen::VectorXd y;              // duals for the original rows
  Eigen::VectorXd reduced_costs;  // per original variable
  double objective = std::numeric_limits<double>::quiet_NaN();
  double dual_objective = std::numeric_limits<double>::quiet_NaN();
  std::vector<int> basis;         // standard-form basic columns
  double primal_residual = 0.0;   // scaled feasibility violation
  double dual_residual = 0.0;
  double duality_gap = 0.0;       // |objective - dual_objective|
  std::string reason;             // Farkas / ray note when not Optimal
  Eigen::VectorXd farkas;         // infeasibility certificate over rows
  long iterations = 0;
};

enum class PivotRule : char { Lexicographic, Bland };

struct LpOptions {
  double pivot_tol = 1e-10;
  double feas_tol = 1e-8;
  long max_iterations = 0;  // 0 -> 50 * (rows + vars)
  PivotRule rule = PivotRule::Lexicographic;
};

// Pivot element below tolerance with no admissible alternative; the problem
// is too ill-conditioned for the tableau. Callers may retry after
// perturbing the data.
struct NumericalBreakdown : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Result of to_standard_form: an equivalent
//   min c^T x, A x = b, x >= 0
// together with the bookkeeping needed to map a standard-form point back to
// the original variables and objective.
struct StandardForm {
  LpProblem problem;

  struct VarTerm {
    Eigen::Index column;  // standard-form column
    double sign;          // +1 or -1
  };
  // x_original[j] = shift[j] + sum of sign * x_std[column] over var_map[j]
  std::vector<std::vector<VarTerm>> var_map;
  Eigen::VectorXd shift;

  double objective_sign = 1.0;    // -1 when the original sense was Maximize
  double objective_offset = 0.0;  // c . shift contribution
  Eigen::Index original_rows = 0; // std rows [0, original_rows) mirror input rows

  Eigen::VectorXd recover(const Eigen::VectorXd& x_std) const;
  double recover_objective(double std_objective) const {
    return objective_sign * std_objective + objective_offset;
  }
};

StandardForm to_standard_form(const LpProblem& p);

// Two-phase dense tableau simplex with lexicographic (default) or Bland
// pivoting. Optimal solutions come back with a primal/dual certificate;
// infeasible problems record a Farkas ray over the original rows.
LpSolution solve_lp(const LpProblem& p, const LpOptions& options = {});

}  // namespace bimatrix

#endif  // BIMATRIX_LP_HPP_
