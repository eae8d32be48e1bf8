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

#include "bimatrix/lp.hpp"

#include <stdexcept>
#include <utility>

#include "internal.hpp"

namespace bimatrix {

using detail::internal_check;

namespace {

// Standard-form tableau: every variable nonnegative, every row an equality
// with nonnegative right-hand side, basis columns forming an identity.
struct Tableau {
  std::vector<std::vector<Rational>> rows;  // m x num_cols
  std::vector<Rational> rhs;                // m, all >= 0
  std::vector<int> basis;                   // m, column index basic in that row
  std::vector<Rational> cost;               // phase-2 objective per column
  int num_cols = 0;
  int first_artificial = 0;  // columns >= this are artificial
  // Original variable -> (positive-part column, negative-part column or -1).
  std::vector<std::pair<int, int>> var_cols;
};

Tableau build_tableau(const LinearProgram& lp) {
  Tableau t;
  const int m = static_cast<int>(lp.constraints.size());

  // Structural columns: one per nonnegative variable, two per free variable.
  int col = 0;
  t.var_cols.reserve(lp.num_vars);
  for (int v = 0; v < lp.num_vars; ++v) {
    if (lp.nonneg_vars.count(v)) {
      t.var_cols.emplace_back(col, -1);
      col += 1;
    } else {
      t.var_cols.emplace_back(col, col + 1);
      col += 2;
    }
  }
  const int structural = col;

  // Canonical row forms. GreaterEq rows are negated up front so that rows
  // with nonnegative rhs take a slack; only rows that still end up with a
  // negative rhs (plus equalities) need an artificial.
  struct Canon {
    std::vector<Rational> coeffs;
    Rational rhs;
    enum Kind { Slack, Surplus, Eq } kind;
  };
  std::vector<Canon> canon;
  canon.reserve(m);
  for (const LinearConstraint& c : lp.constraints) {
    Canon row;
    row.coeffs.assign(structural, Rational(0));
    for (int v = 0; v < lp.num_vars; ++v) {
      const auto [pos, neg] = t.var_cols[v];
      row.coeffs[pos] = c.coefficients[v];
      if (neg >= 0) row.coeffs[neg] = -c.coefficients[v];
    }
    row.rhs = c.rhs;
    bool less = c.relation == Relation::LessEq;
    bool greater = c.relation == Relation::GreaterEq;
    if (greater) {  // a.x >= b  <=>  -a.x <= -b
      for (Rational& x : row.coeffs) x = -x;
      row.rhs = -row.rhs;
      less = true;
      greater = false;
    }
    if (row.rhs.sign() < 0) {
      for (Rational& x : row.coeffs) x = -x;
      row.rhs = -row.rhs;
      if (less) {
        less = false;
        greater = true;
      }
    }
    if (c.relation == Relation::Equal) {
      row.kind = Canon::Eq;
    } else if (less) {
      row.kind = Canon::Slack;
    } else {
      row.kind = Canon::Surplus;
    }
    canon.push_back(std::move(row));
  }

  int num_slack = 0, num_artificial = 0;
  for (const Canon& row : canon) {
    if (row.kind == Canon::Slack || row.kind == Canon::Surplus) ++num_slack;
    if (row.kind == Canon::Surplus || row.kind == Canon::Eq) ++num_artificial;
  }

  t.num_cols = structural + num_slack + num_artificial;
  t.first_artificial = structural + num_slack;
  t.cost.assign(t.num_cols, Rational(0));
  for (int v = 0; v < lp.num_vars; ++v) {
    const auto [pos, neg] = t.var_cols[v];
    t.cost[pos] = lp.objective[v];
    if (neg >= 0) t.cost[neg] = -lp.objective[v];
  }

  int slack_col = structural;
  int art_col = t.first_artificial;
  for (Canon& row : canon) {
    std::vector<Rational> full(t.num_cols, Rational(0));
    for (int j = 0; j < structural; ++j) full[j] = std::move(row.coeffs[j]);
    int basic = -1;
    switch (row.kind) {
      case Canon::Slack:
        full[slack_col] = Rational(1);
        basic = slack_col++;
        break;
      case Canon::Surplus:
        full[slack_col] = Rational(-1);
        ++slack_col;
        full[art_col] = Rational(1);
        basic = art_col++;
        break;
      case Canon::Eq:
        full[art_col] = Rational(1);
        basic = art_col++;
        break;
    }
    t.rows.push_back(std::move(full));
    t.rhs.push_back(std::move(row.rhs));
    t.basis.push_back(basic);
  }
  return t;
}

void pivot(Tableau& t, int row, int col) {
  const int m = static_cast<int>(t.rows.size());
  Rational inv = Rational(1) / t.rows[row][col];
  for (Rational& x : t.rows[row]) x *= inv;
  t.rhs[row] *= inv;
  for (int i = 0; i < m; ++i) {
    if (i == row || t.rows[i][col].is_zero()) continue;
    Rational factor = t.rows[i][col];
    for (int j = 0; j < t.num_cols; ++j) {
      if (!t.rows[row][j].is_zero()) t.rows[i][j] -= factor * t.rows[row][j];
    }
    t.rows[i][col] = Rational(0);  // exact, but avoid residual churn
    t.rhs[i] -= factor * t.rhs[row];
  }
  t.basis[row] = col;
}

enum class PhaseResult { Optimal, Unbounded };

// Maximizes `cost` over the current tableau with Bland's rule. Columns at or
// beyond `col_limit` never enter the basis.
PhaseResult run_simplex(Tableau& t, const std::vector<Rational>& cost, int col_limit) {
  const int m = static_cast<int>(t.rows.size());
  for (;;) {
    // Reduced cost r_j = c_j - c_B . column_j; Bland: smallest improving j.
    int entering = -1;
    for (int j = 0; j < col_limit && entering < 0; ++j) {
      Rational r = cost[j];
      for (int i = 0; i < m; ++i) {
        if (!t.rows[i][j].is_zero() && !cost[t.basis[i]].is_zero())
          r -= cost[t.basis[i]] * t.rows[i][j];
      }
      if (r.sign() > 0) entering = j;
    }
    if (entering < 0) return PhaseResult::Optimal;

    int leaving = -1;
    Rational best_ratio;
    for (int i = 0; i < m; ++i) {
      if (t.rows[i][entering].sign() <= 0) continue;
      Rational ratio = t.rhs[i] / t.rows[i][entering];
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[i] < t.basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving < 0) return PhaseResult::Unbounded;
    pivot(t, leaving, entering);
  }
}

}  // namespace

bool satisfies(const LinearProgram& lp, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != lp.num_vars) return false;
  for (int v : lp.nonneg_vars)
    if (point[v].sign() < 0) return false;
  for (const LinearConstraint& c : lp.constraints) {
    Rational lhs;
    for (int v = 0; v < lp.num_vars; ++v)
      if (!c.coefficients[v].is_zero()) lhs += c.coefficients[v] * point[v];
    switch (c.relation) {
      case Relation::LessEq:
        if (lhs > c.rhs) return false;
        break;
      case Relation::GreaterEq:
        if (lhs < c.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

LpOutcome solve_lp(const LinearProgram& lp) {
  if (lp.num_vars < 1) throw std::invalid_argument("linear program needs at least one variable");
  if (static_cast<int>(lp.objective.size()) != lp.num_vars)
    throw std::invalid_argument("objective length does not match num_vars");
  for (const LinearConstraint& c : lp.constraints)
    if (static_cast<int>(c.coefficients.size()) != lp.num_vars)
      throw std::invalid_argument("constraint length does not match num_vars");

  Tableau t = build_tableau(lp);
  const int m = static_cast<int>(t.rows.size());

  // Phase 1: drive the artificial variables to zero.
  if (t.first_artificial < t.num_cols) {
    std::vector<Rational> phase1(t.num_cols, Rational(0));
    for (int j = t.first_artificial; j < t.num_cols; ++j) phase1[j] = Rational(-1);
    PhaseResult r = run_simplex(t, phase1, t.num_cols);
    internal_check(r == PhaseResult::Optimal, "phase 1 is bounded");
    Rational infeasibility;
    for (int i = 0; i < m; ++i)
      if (t.basis[i] >= t.first_artificial) infeasibility += t.rhs[i];
    if (infeasibility.sign() != 0) return {LpStatus::Infeasible, Rational(0), {}};

    // Pivot leftover zero-level artificials out; a row with no usable column
    // is redundant and dropped.
    for (int i = static_cast<int>(t.rows.size()) - 1; i >= 0; --i) {
      if (t.basis[i] < t.first_artificial) continue;
      int col = -1;
      for (int j = 0; j < t.first_artificial && col < 0; ++j)
        if (!t.rows[i][j].is_zero()) col = j;
      if (col >= 0) {
        pivot(t, i, col);
      } else {
        t.rows.erase(t.rows.begin() + i);
        t.rhs.erase(t.rhs.begin() + i);
        t.basis.erase(t.basis.begin() + i);
      }
    }
  }

  // Phase 2: artificial columns are frozen out of the basis.
  PhaseResult r = run_simplex(t, t.cost, t.first_artificial);
  if (r == PhaseResult::Unbounded) return {LpStatus::Unbounded, Rational(0), {}};

  std::vector<Rational> column_value(t.num_cols, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) column_value[t.basis[i]] = t.rhs[i];

  LpOutcome outcome;
  outcome.status = LpStatus::Optimal;
  outcome.assignment.reserve(lp.num_vars);
  for (int v = 0; v < lp.num_vars; ++v) {
    const auto [pos, neg] = t.var_cols[v];
    Rational x = column_value[pos];
    if (neg >= 0) x -= column_value[neg];
    outcome.assignment.push_back(std::move(x));
  }
  for (int v = 0; v < lp.num_vars; ++v)
    outcome.value += lp.objective[v] * outcome.assignment[v];

  internal_check(satisfies(lp, outcome.assignment), "optimal assignment is feasible");
  return outcome;
}

}  // namespace bimatrix
