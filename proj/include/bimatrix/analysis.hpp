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
#include <string>
#include <utility>
#include <vector>

#include "bimatrix/game.hpp"
#include "bimatrix/solution_concepts.hpp"

namespace bimatrix {

struct ConceptCheck {
  std::string claim;
  bool holds = false;
  std::string witness;
};

/// Side-by-side values of one game under every solution concept, with the
/// ordering relations between them verified exactly.
struct ConceptReport {
  std::string game_title;
  int leader = 1;
  Rational maximin_value;
  Rational pure_commit_value;
  Rational stackelberg_value;
  std::vector<Rational> nash_values;  // leader's value per enumerated equilibrium
  bool nash_enumerated = true;        // false when the game exceeded the support cap
  Rational ce_max_leader_value;
  std::vector<ConceptCheck> checks;
};

/// Runs every solution concept on the game and evaluates the ordering
/// claims. Games beyond the Nash support cap yield a report with
/// nash_enumerated = false and no equilibrium values.
ConceptReport compare_concepts(const Game& game, int leader, int nash_cap = 8);

/// JSON form of the report; rationals as reduced "p/q" strings.
std::string serialize_report(const ConceptReport& report);

struct InterchangeabilityResult {
  bool interchangeable = true;
  // First failing cross-pairing: (index providing sigma1, index providing sigma2).
  std::optional<std::pair<int, int>> witness;
};

/// Checks all cross-pairings (sigma1 of one equilibrium, sigma2 of another)
/// for the equilibrium property. Inputs must themselves be equilibria of
/// the game.
InterchangeabilityResult check_interchangeability(const std::vector<NashEquilibrium>& equilibria,
                                                  const Game& game);

}  // namespace bimatrix
