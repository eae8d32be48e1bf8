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

#include <set>
#include <vector>

#include "bimatrix/rational.hpp"

namespace bimatrix {

enum class Relation { LessEq, GreaterEq, Equal };

struct LinearConstraint {
  std::vector<Rational> coefficients;  // length num_vars
  Relation relation = Relation::LessEq;
  Rational rhs;
};

/// Maximization linear program over exact rationals. Variables whose index
/// appears in nonneg_vars are constrained >= 0; all other variables are free.
struct LinearProgram {
  int num_vars = 0;
  std::vector<Rational> objective;  // length num_vars, maximized
  std::vector<LinearConstraint> constraints;
  std::set<int> nonneg_vars;

  explicit LinearProgram(int vars)
      : num_vars(vars), objective(static_cast<std::size_t>(vars), Rational(0)) {}

  void add(std::vector<Rational> coefficients, Relation relation, Rational rhs) {
    constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
  }
  void mark_all_nonneg() {
    for (int i = 0; i < num_vars; ++i) nonneg_vars.insert(i);
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  Rational value;                    // meaningful only when Optimal
  std::vector<Rational> assignment;  // length num_vars when Optimal, empty otherwise
};

/// Two-phase primal simplex with Bland's anti-cycling pivot rule over exact
/// rationals. Deterministic: identical instances yield identical outcomes.
/// Optimal assignments are vertex solutions and are re-checked against every
/// constraint before being returned.
LpOutcome solve_lp(const LinearProgram& lp);

/// Exact feasibility check of a point against every constraint and sign
/// restriction of the program.
bool satisfies(const LinearProgram& lp, const std::vector<Rational>& point);

}  // namespace bimatrix
