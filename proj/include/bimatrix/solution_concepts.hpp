// Copyright 2026 The Bimatrix Authors
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

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bimatrix/game.hpp"
#include "bimatrix/rational.hpp"

namespace bimatrix {

/// An enumeration or discretization would exceed its configured budget.
/// `count` carries the offending size (e.g. the would-be number of grid
/// points), which grows combinatorially.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& message, BigInt count)
      : std::runtime_error(message), count_(std::move(count)) {}
  const BigInt& count() const { return count_; }

 private:
  BigInt count_;
};

struct MaximinResult {
  MixedStrategy strategy;
  Rational value;
};

/// Optimal mixed strategy to commit to, together with the pure response it
/// induces. One commitment program is solved per follower pure strategy;
/// `per_column_status` records each program's outcome (nullopt = that
/// response cannot be induced by any commitment).
struct StackelbergSolution {
  int leader = 1;
  MixedStrategy leader_strategy;
  int follower_response = 0;
  Rational leader_value;
  Rational follower_value;
  std::vector<std::optional<Rational>> per_column_status;
  // True when another follower strategy ties the induced response at the
  // commitment point: the optimum is attained only because indifference is
  // resolved in the leader's favor.
  bool follower_indifferent = false;
};

struct NashEquilibrium {
  MixedStrategy sigma1;
  MixedStrategy sigma2;
  Rational value1;
  Rational value2;
  // Set when the equilibrium may belong to a continuum (some player has more
  // pure best responses than the other's support size). Such equilibria are
  // reported as representative vertices.
  bool degenerate = false;
};

struct PureCommitmentResult {
  int strategy = 0;
  Rational value;
};

struct CorrelatedOptimum {
  JointDistribution distribution;
  Rational value;
};

struct SingleLpCommitment {
  JointDistribution distribution;  // all mass in one follower column
  Rational value;
  StackelbergSolution solution;
};

struct Elimination {
  int player = 1;
  int index = 0;  // index in the original game
  std::string label;
};

struct DominanceResult {
  Game reduced;
  std::vector<Elimination> eliminations;
  std::vector<int> surviving_rows;  // original indices, ascending
  std::vector<int> surviving_cols;
};

/// Strategy attaining max over own mixings of the worst-case expected
/// utility against opponent pure responses, plus that exact value.
MaximinResult maximin(const Game& game, int player);

/// Follower pure strategies maximizing expected utility against the given
/// commitment; ascending indices, never empty.
std::vector<int> best_responses(const Game& game, const MixedStrategy& leader_strategy,
                                int follower);

/// Best pure strategy to commit to, with follower ties broken in the
/// leader's favor; ties among leader strategies go to the lowest index.
PureCommitmentResult pure_commitment(const Game& game, int leader);

/// Optimal mixed commitment via one linear program per follower pure
/// strategy: each program maximizes the leader's payoff subject to that
/// response being a follower best response. Ties among optimal columns go to
/// the lowest index.
StackelbergSolution stackelberg_multi_lp(const Game& game, int leader);

/// Optimal mixed commitment via a single linear program over outcome
/// distributions constrained only by the follower's incentives. A
/// single-column optimum always exists and is extracted; its value equals
/// stackelberg_multi_lp's exactly.
SingleLpCommitment stackelberg_single_lp(const Game& game, int leader);

/// Maximizes sum of weights(s1,s2) * p(s1,s2) over the correlated-equilibrium
/// polytope (both players' incentive constraints). Always feasible.
CorrelatedOptimum correlated_optimize(const Game& game,
                                      const std::vector<std::vector<Rational>>& objective_weights);

/// Enumerates all support pairs and solves each exact indifference-and-
/// feasibility system. Finds all equilibria of nondegenerate games;
/// degenerate continua are reported as flagged representative vertices.
/// Throws BudgetError when a side exceeds `support_cap`.
std::vector<NashEquilibrium> nash_support_enumeration(const Game& game, int support_cap = 8);

/// Exact check that no pure deviation improves either player.
bool is_nash_equilibrium(const Game& game, const MixedStrategy& sigma1,
                         const MixedStrategy& sigma2);

/// Repeatedly removes pure strategies strictly dominated by mixed strategies
/// (tested by LP) until none remain, recording the elimination order.
DominanceResult iterated_strict_dominance(const Game& game);

}  // namespace bimatrix
