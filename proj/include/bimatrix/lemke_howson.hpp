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

#ifndef BIMATRIX_LEMKE_HOWSON_HPP_
#define BIMATRIX_LEMKE_HOWSON_HPP_

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bimatrix/game.hpp"

namespace bimatrix {

struct NashEquilibrium {
  Vector row_strategy;
  Vector col_strategy;
  PayoffPair payoffs;

  struct Origin {
    enum class Kind : char { DroppedLabel, Support };
    Kind kind = Kind::DroppedLabel;
    int dropped_label = 0;           // 1..n+m when kind == DroppedLabel
    std::vector<int> row_support;    // 0-based, when kind == Support
    std::vector<int> col_support;
  };
  Origin origin;

  double verified_eps = 0.0;  // measured best-deviation gain, floored at 0
  long pivots = 0;
};

// Ratio-test tie that the lexicographic comparison over the structural
// columns cannot break: the game is degenerate. Callers may perturb and
// retry (see perturb_game).
struct DegenerateGame : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PivotLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PivotTimeout : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SizeGuard : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct VerificationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Duration = std::chrono::steady_clock::duration;

struct LhOptions {
  long pivot_limit = 1'000'000;
  Duration time_budget = std::chrono::minutes(30);
  // Exact rational pivoting; a correctness oracle for games up to 10x10.
  bool exact_arithmetic = false;
};

// Largest gain available from a unilateral pure deviation; the profile is
// an eps-equilibrium iff this is <= eps. Pure deviations suffice by
// bilinearity of the payoffs.
double deviation_gap(const BimatrixGame& g, const MixedProfile& p);

// L-infinity distance between two equilibria over both strategy vectors.
double profile_distance(const NashEquilibrium& a, const NashEquilibrium& b);

bool is_nash(const BimatrixGame& g, const MixedProfile& p, double eps);

// Complementary pivoting from the artificial start, dropping
// `dropped_label` (1..n for row actions, n+1..n+m for column actions).
// Both matrices are offset by 1 + max(0, -min entry) before pivoting;
// reported payoffs use the original matrices. The result is verified at
// eps = 1e-7.
NashEquilibrium lh_solve(const BimatrixGame& g, int dropped_label,
                         const LhOptions& options = {});

enum class LabelStatus : char {
  Found,
  Duplicate,   // converged to an already-listed equilibrium
  Degenerate,
  PivotLimit,
  TimedOut,
  Failed,      // verification failure (pathological numerics)
};

struct LabelOutcome {
  int dropped_label = 0;
  LabelStatus status = LabelStatus::Failed;
  long pivots = 0;
  int equilibrium = -1;  // index into LhEnumeration::equilibria
};

struct LhEnumeration {
  std::vector<NashEquilibrium> equilibria;
  std::vector<LabelOutcome> labels;
  bool timed_out = false;  // overall budget expired before the sweep finished
};

// Runs lh_solve for every label, deduplicating profiles at L-infinity
// distance 1e-6. Per-label failures are recorded, not fatal; when the
// budget expires the partial sweep is returned with timed_out set.
LhEnumeration lh_enumerate(const BimatrixGame& g, Duration time_budget,
                           const LhOptions& options = {});

// All equilibria via equal-size support pairs and indifference systems;
// complete for nondegenerate games. Guarded to games up to 6x6.
std::vector<NashEquilibrium> support_enumeration(const BimatrixGame& g);

// Adds i.i.d. uniform noise on [0, magnitude) to every entry of both
// matrices. magnitude must be positive; deterministic in seed.
BimatrixGame perturb_game(const BimatrixGame& g, double magnitude,
                          std::uint64_t seed);

}  // namespace bimatrix

#endif  // BIMATRIX_LEMKE_HOWSON_HPP_
