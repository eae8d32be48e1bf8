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

#include "bimatrix/game.hpp"
#include "bimatrix/rational.hpp"
#include "bimatrix/solution_concepts.hpp"

namespace bimatrix {

enum class TieBreak { LeaderFavorable, Adversarial };

/// Grid over the leader's strategy simplex: probabilities restricted to
/// multiples of 1/resolution. The follower best-responds under the chosen
/// tie-break convention; neither convention is a default, callers choose.
struct GridSpec {
  int resolution = 1;
  TieBreak tie_break = TieBreak::LeaderFavorable;
  BigInt budget = BigInt(10000000);  // max grid points enumerated
};

/// Number of grid strategies over `num_pure` strategies at the given
/// resolution: binomial(resolution + num_pure - 1, num_pure - 1), exactly.
BigInt grid_count(int num_pure, int resolution);

struct GridResult {
  MixedStrategy strategy;
  Rational value;
};

/// Enumerates every grid strategy (ascending lexicographic order over count
/// vectors), applies the follower best response under spec.tie_break, and
/// returns the grid strategy maximizing the leader's utility; ties go to the
/// first point enumerated. Throws BudgetError, carrying the would-be point
/// count, when the grid exceeds spec.budget.
GridResult grid_stackelberg(const Game& game, int leader, const GridSpec& spec);

}  // namespace bimatrix
