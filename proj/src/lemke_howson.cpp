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

#include "bimatrix/lemke_howson.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <cmath>
#include <functional>
#include <numeric>

#include "bimatrix/rng.hpp"

namespace bimatrix {

double deviation_gap(const BimatrixGame& g, const MixedProfile& p) {
  if (p.row_strategy.size() != g.rows() || p.col_strategy.size() != g.cols()) {
    throw DimensionMismatch("profile dimensions do not match game");
  }
  const Vector row_payout = g.row_payoffs * p.col_strategy;   // per pure row
  const Vector col_payout = g.col_payoffs.transpose() * p.row_strategy;
  const double row_value = p.row_strategy.dot(row_payout);
  const double col_value = p.col_strategy.dot(col_payout);
  return std::max(row_payout.maxCoeff() - row_value,
                  col_payout.maxCoeff() - col_value);
}

bool is_nash(const BimatrixGame& g, const MixedProfile& p, double eps) {
  if (eps < 0.0) throw std::invalid_argument("eps must be nonnegative");
  return deviation_gap(g, p) <= eps;
}

namespace {

using Rational = boost::multiprecision::cpp_rational;

template <typename Scalar>
struct Arith;

template <>
struct Arith<double> {
  static bool admissible_pivot(double v) { return v > 1e-10; }
  // Three-way comparison with a relative tie band; ties feed the next
  // lexicographic component.
  static int compare(double a, double b) {
    const double tol = 1e-12 * (1.0 + std::max(std::abs(a), std::abs(b)));
    if (a < b - tol) return -1;
    if (b < a - tol) return 1;
    return 0;
  }
  static double to_double(double v) { return v; }
};

template <>
struct Arith<Rational> {
  static bool admissible_pivot(const Rational& v) { return v > 0; }
  static int compare(const Rational& a, const Rational& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
  }
  static double to_double(const Rational& v) { return v.convert_to<double>(); }
};

// One of the two complementary systems: `rows` constraints over
// `structural` decision variables plus one slack per row, rhs all ones.
// Variable ids: [0, structural) structural, [structural, structural+rows)
// slacks.
template <typename Scalar>
class PivotSystem {
 public:
  PivotSystem(int rows, int structural)
      : rows_(rows),
        structural_(structural),
        width_(structural + rows + 1),
        data_(static_cast<std::size_t>(rows) * width_, Scalar(0)),
        basis_(rows),
        basic_(structural + rows, false) {
    for (int r = 0; r < rows_; ++r) {
      at(r, structural_ + r) = Scalar(1);
      rhs(r) = Scalar(1);
      basis_[r] = structural_ + r;
      basic_[static_cast<std::size_t>(structural_ + r)] = true;
    }
  }

  Scalar& at(int r, int c) {
    return data_[static_cast<std::size_t>(r) * width_ + c];
  }
  const Scalar& at(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * width_ + c];
  }
  Scalar& rhs(int r) { return at(r, structural_ + rows_); }
  const Scalar& rhs(int r) const { return at(r, structural_ + rows_); }

  bool is_basic(int var) const { return basic_[static_cast<std::size_t>(var)]; }

  // Min-ratio pivot with lexicographic tie-breaking over the structural
  // columns. An unresolved tie means a degenerate game.
  int pivot_in(int entering) {
    assert(!is_basic(entering));
    std::vector<int> ties;
    for (int r = 0; r < rows_; ++r) {
      if (!Arith<Scalar>::admissible_pivot(at(r, entering))) continue;
      if (ties.empty()) {
        ties.push_back(r);
        continue;
      }
      const int cmp = compare_ratio(r, ties.front(), structural_ + rows_,
                                    entering);
      if (cmp < 0) {
        ties.assign(1, r);
      } else if (cmp == 0) {
        ties.push_back(r);
      }
    }
    if (ties.empty()) {
      // The complementary path is bounded for positive payoff matrices; a
      // missing blocking row means numerics have broken down.
      throw VerificationFailed("pivot column has no admissible blocking row");
    }
    for (int c = 0; c < structural_ && ties.size() > 1; ++c) {
      std::vector<int> next{ties.front()};
      for (std::size_t k = 1; k < ties.size(); ++k) {
        const int cmp = compare_ratio(ties[k], next.front(), c, entering);
        if (cmp < 0) {
          next.assign(1, ties[k]);
        } else if (cmp == 0) {
          next.push_back(ties[k]);
        }
      }
      next.swap(ties);
    }
    if (ties.size() > 1) {
      throw DegenerateGame("ratio-test tie unresolved by lexicographic rule");
    }
    const int row = ties.front();
    const int leaving = basis_[row];
    pivot(row, entering);
#ifndef NDEBUG
    for (int r = 0; r < rows_; ++r) {
      assert(Arith<Scalar>::to_double(rhs(r)) >= -1e-10);
    }
#endif
    return leaving;
  }

  Vector structural_values() const {
    Vector v = Vector::Zero(structural_);
    for (int r = 0; r < rows_; ++r) {
      if (basis_[r] < structural_) {
        v(basis_[r]) = Arith<Scalar>::to_double(rhs(r));
      }
    }
    return v;
  }

 private:
  // Compares column c scaled by the entering coefficient between rows a, b.
  int compare_ratio(int a, int b, int c, int entering) const {
    return Arith<Scalar>::compare(at(a, c) / at(a, entering),
                                  at(b, c) / at(b, entering));
  }

  void pivot(int row, int col) {
    const Scalar inv = Scalar(1) / at(row, col);
    for (int c = 0; c < width_; ++c) at(row, c) *= inv;
    at(row, col) = Scalar(1);
    for (int r = 0; r < rows_; ++r) {
      if (r == row) continue;
      const Scalar factor = at(r, col);
      if (factor == Scalar(0)) continue;
      for (int c = 0; c < width_; ++c) at(r, c) -= factor * at(row, c);
      at(r, col) = Scalar(0);
    }
    basic_[static_cast<std::size_t>(basis_[row])] = false;
    basis_[row] = col;
    basic_[static_cast<std::size_t>(col)] = true;
  }

  int rows_;
  int structural_;
  int width_;
  std::vector<Scalar> data_;
  std::vector<int> basis_;
  std::vector<bool> basic_;
};

struct Deadline {
  std::chrono::steady_clock::time_point at;
  bool expired() const { return std::chrono::steady_clock::now() >= at; }
};

// Complementary pivoting on the pair of best-response systems. Labels are
// 1..n for row actions and n+1..n+m for column actions; the variable
// carrying a label is the action variable in its own system and the
// opponent's slack in the other.
template <typename Scalar>
NashEquilibrium lh_run(const BimatrixGame& g, int dropped_label,
                       const LhOptions& options, const Deadline& deadline) {
  const int n = static_cast<int>(g.rows());
  const int m = static_cast<int>(g.cols());
  const double min_entry =
      std::min(g.row_payoffs.minCoeff(), g.col_payoffs.minCoeff());
  const double offset = 1.0 + std::max(0.0, -min_entry);

  PivotSystem<Scalar> row_system(n, m);  // rows: R' y + slack = 1
  PivotSystem<Scalar> col_system(m, n);  // rows: C'^T x + slack = 1
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      row_system.at(i, j) = Scalar(g.row_payoffs(i, j)) + Scalar(offset);
      col_system.at(j, i) = Scalar(g.col_payoffs(i, j)) + Scalar(offset);
    }
  }

  // Label of a variable, per system.
  const auto row_sys_label = [&](int var) {
    return var < m ? n + 1 + var : var - m + 1;
  };
  const auto col_sys_label = [&](int var) {
    return var < n ? var + 1 : n + 1 + (var - n);
  };
  const auto row_sys_var = [&](int label) {
    return label > n ? label - n - 1 : m + label - 1;
  };
  const auto col_sys_var = [&](int label) {
    return label <= n ? label - 1 : n + label - n - 1;
  };

  bool in_row_system = dropped_label > n;
  int entering = in_row_system ? row_sys_var(dropped_label)
                               : col_sys_var(dropped_label);
  long pivots = 0;
  while (true) {
    if (pivots >= options.pivot_limit) {
      throw PivotLimitExceeded("pivot budget exceeded");
    }
    if (deadline.expired()) throw PivotTimeout("time budget exceeded");
    const int leaving = in_row_system ? row_system.pivot_in(entering)
                                      : col_system.pivot_in(entering);
    ++pivots;
    const int label =
        in_row_system ? row_sys_label(leaving) : col_sys_label(leaving);
    if (label == dropped_label) break;
    in_row_system = !in_row_system;
    entering = in_row_system ? row_sys_var(label) : col_sys_var(label);
  }

  Vector x = col_system.structural_values();
  Vector y = row_system.structural_values();
  const double xs = x.sum();
  const double ys = y.sum();
  if (xs <= 0.0 || ys <= 0.0) {
    throw VerificationFailed("pivoting ended at the artificial vertex");
  }
  x /= xs;
  y /= ys;
  x = x.cwiseMax(0.0);
  y = y.cwiseMax(0.0);
  x /= x.sum();
  y /= y.sum();

  NashEquilibrium eq;
  eq.row_strategy = std::move(x);
  eq.col_strategy = std::move(y);
  eq.payoffs = payoff(g, {eq.row_strategy, eq.col_strategy});
  eq.origin.kind = NashEquilibrium::Origin::Kind::DroppedLabel;
  eq.origin.dropped_label = dropped_label;
  eq.pivots = pivots;
  const double gap = deviation_gap(g, {eq.row_strategy, eq.col_strategy});
  if (gap > 1e-7) {
    throw VerificationFailed("pivoting result fails the equilibrium check");
  }
  eq.verified_eps = std::max(gap, 0.0);
  return eq;
}

void for_each_subset(int universe, int size, std::vector<int>& scratch,
                     const std::function<void(const std::vector<int>&)>& fn,
                     int start = 0) {
  if (static_cast<int>(scratch.size()) == size) {
    fn(scratch);
    return;
  }
  for (int v = start; v < universe; ++v) {
    scratch.push_back(v);
    for_each_subset(universe, size, scratch, fn, v + 1);
    scratch.pop_back();
  }
}

}  // namespace

double profile_distance(const NashEquilibrium& a, const NashEquilibrium& b) {
  return std::max(
      (a.row_strategy - b.row_strategy).cwiseAbs().maxCoeff(),
      (a.col_strategy - b.col_strategy).cwiseAbs().maxCoeff());
}

NashEquilibrium lh_solve(const BimatrixGame& g, int dropped_label,
                         const LhOptions& options) {
  if (dropped_label < 1 || dropped_label > g.rows() + g.cols()) {
    throw std::invalid_argument("dropped label out of range");
  }
  if (options.exact_arithmetic && (g.rows() > 10 || g.cols() > 10)) {
    throw SizeGuard("exact arithmetic supported up to 10x10");
  }
  const Deadline deadline{std::chrono::steady_clock::now() +
                          options.time_budget};
  if (options.exact_arithmetic) {
    return lh_run<Rational>(g, dropped_label, options, deadline);
  }
  return lh_run<double>(g, dropped_label, options, deadline);
}

LhEnumeration lh_enumerate(const BimatrixGame& g, Duration time_budget,
                           const LhOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  LhEnumeration out;
  const int labels = static_cast<int>(g.rows() + g.cols());
  for (int label = 1; label <= labels; ++label) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    if (elapsed >= time_budget) {
      out.timed_out = true;
      break;
    }
    LhOptions per_label = options;
    per_label.time_budget = time_budget - elapsed;
    LabelOutcome outcome;
    outcome.dropped_label = label;
    try {
      NashEquilibrium eq = lh_solve(g, label, per_label);
      outcome.pivots = eq.pivots;
      int found = -1;
      for (std::size_t k = 0; k < out.equilibria.size(); ++k) {
        if (profile_distance(eq, out.equilibria[k]) <= 1e-6) {
          found = static_cast<int>(k);
          break;
        }
      }
      if (found >= 0) {
        outcome.status = LabelStatus::Duplicate;
        outcome.equilibrium = found;
      } else {
        outcome.status = LabelStatus::Found;
        outcome.equilibrium = static_cast<int>(out.equilibria.size());
        out.equilibria.push_back(std::move(eq));
      }
    } catch (const DegenerateGame&) {
      outcome.status = LabelStatus::Degenerate;
    } catch (const PivotLimitExceeded&) {
      outcome.status = LabelStatus::PivotLimit;
    } catch (const PivotTimeout&) {
      outcome.status = LabelStatus::TimedOut;
      out.timed_out = true;
    } catch (const VerificationFailed&) {
      outcome.status = LabelStatus::Failed;
    }
    out.labels.push_back(outcome);
    if (out.timed_out) break;
  }
  return out;
}

std::vector<NashEquilibrium> support_enumeration(const BimatrixGame& g) {
  const int n = static_cast<int>(g.rows());
  const int m = static_cast<int>(g.cols());
  if (n > 6 || m > 6) {
    throw SizeGuard("support enumeration guarded to games up to 6x6");
  }
  std::vector<NashEquilibrium> found;

  const auto try_supports = [&](const std::vector<int>& rows,
                                const std::vector<int>& cols) {
    const int k = static_cast<int>(rows.size());
    // Column strategy making the support rows indifferent, plus the common
    // row payout u: [R_{S,T} -1; 1 0] [y; u] = [0; 1].
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(k + 1, k + 1);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(k + 1);
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) a(r, c) = g.row_payoffs(rows[r], cols[c]);
      a(r, k) = -1.0;
    }
    a.row(k).head(k).setOnes();
    b(k) = 1.0;
    Eigen::FullPivLU<Eigen::MatrixXd> lu_y(a);
    if (!lu_y.isInvertible()) return;
    const Eigen::VectorXd sol_y = lu_y.solve(b);

    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) a(r, c) = g.col_payoffs(rows[c], cols[r]);
      a(r, k) = -1.0;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu_x(a);
    if (!lu_x.isInvertible()) return;
    const Eigen::VectorXd sol_x = lu_x.solve(b);

    if ((sol_y.head(k).array() < -1e-9).any()) return;
    if ((sol_x.head(k).array() < -1e-9).any()) return;

    Vector y = Vector::Zero(m);
    Vector x = Vector::Zero(n);
    for (int c = 0; c < k; ++c) y(cols[c]) = std::max(sol_y(c), 0.0);
    for (int r = 0; r < k; ++r) x(rows[r]) = std::max(sol_x(r), 0.0);
    y /= y.sum();
    x /= x.sum();

    const MixedProfile p{x, y};
    const double gap = deviation_gap(g, p);
    if (gap > 1e-9) return;

    NashEquilibrium eq;
    eq.row_strategy = std::move(x);
    eq.col_strategy = std::move(y);
    eq.payoffs = payoff(g, p);
    eq.origin.kind = NashEquilibrium::Origin::Kind::Support;
    eq.origin.row_support = rows;
    eq.origin.col_support = cols;
    eq.verified_eps = std::max(gap, 0.0);
    for (const NashEquilibrium& other : found) {
      if (profile_distance(eq, other) <= 1e-6) return;
    }
    found.push_back(std::move(eq));
  };

  for (int k = 1; k <= std::min(n, m); ++k) {
    std::vector<int> rows_scratch;
    for_each_subset(n, k, rows_scratch, [&](const std::vector<int>& rows) {
      std::vector<int> cols_scratch;
      for_each_subset(m, k, cols_scratch, [&](const std::vector<int>& cols) {
        try_supports(rows, cols);
      });
    });
  }
  return found;
}

BimatrixGame perturb_game(const BimatrixGame& g, double magnitude,
                          std::uint64_t seed) {
  if (!(magnitude > 0.0)) {
    throw std::invalid_argument("perturbation magnitude must be positive");
  }
  UnitUniformRng rng(seed);
  Matrix r = g.row_payoffs;
  Matrix c = g.col_payoffs;
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    for (Eigen::Index j = 0; j < r.cols(); ++j) r(i, j) += magnitude * rng.next();
  }
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    for (Eigen::Index j = 0; j < c.cols(); ++j) c(i, j) += magnitude * rng.next();
  }
  return make_game(std::move(r), std::move(c));
}

}  // namespace bimatrix
