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

#include "bimatrix/solution_concepts.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "bimatrix/lp.hpp"
#include "internal.hpp"

namespace bimatrix {

using detail::internal_check;

namespace {

void require_player(int player) {
  if (player != 1 && player != 2) throw std::invalid_argument("player must be 1 or 2");
}

// ---------------------------------------------------------------------------
// Exact Gauss-Jordan elimination, used by support enumeration.

enum class SolveKind { Inconsistent, Unique, Underdetermined };

struct LinearSolve {
  SolveKind kind;
  std::vector<Rational> solution;
};

LinearSolve solve_exact(int unknowns, std::vector<std::vector<Rational>> a,
                        std::vector<Rational> b) {
  const int rows = static_cast<int>(a.size());
  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < unknowns && rank < rows; ++col) {
    int pivot_row = -1;
    for (int i = rank; i < rows && pivot_row < 0; ++i)
      if (!a[i][col].is_zero()) pivot_row = i;
    if (pivot_row < 0) continue;
    std::swap(a[rank], a[pivot_row]);
    std::swap(b[rank], b[pivot_row]);
    Rational inv = Rational(1) / a[rank][col];
    for (int j = col; j < unknowns; ++j) a[rank][j] *= inv;
    b[rank] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || a[i][col].is_zero()) continue;
      Rational f = a[i][col];
      for (int j = col; j < unknowns; ++j) a[i][j] -= f * a[rank][j];
      b[i] -= f * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (int i = rank; i < rows; ++i)
    if (!b[i].is_zero()) return {SolveKind::Inconsistent, {}};
  if (rank < unknowns) return {SolveKind::Underdetermined, {}};
  std::vector<Rational> x(unknowns, Rational(0));
  for (int k = 0; k < rank; ++k) x[pivot_col[k]] = b[k];
  return {SolveKind::Unique, std::move(x)};
}

// ---------------------------------------------------------------------------
// Commitment program for one follower response: maximize the leader's payoff
// over commitments to which `target` is a best response. Leader is the row
// player here; callers handle the swapped orientation.

std::optional<std::pair<std::vector<Rational>, Rational>> commitment_column(const Game& game,
                                                                            int target) {
  const int m = game.rows();
  const int n = game.cols();
  LinearProgram lp(m);
  lp.mark_all_nonneg();
  for (int i = 0; i < m; ++i) lp.objective[i] = game.payoff(i, target, 1);
  for (int j = 0; j < n; ++j) {
    if (j == target) continue;
    std::vector<Rational> coeffs(m);
    for (int i = 0; i < m; ++i) coeffs[i] = game.payoff(i, target, 2) - game.payoff(i, j, 2);
    lp.add(std::move(coeffs), Relation::GreaterEq, Rational(0));
  }
  lp.add(std::vector<Rational>(m, Rational(1)), Relation::Equal, Rational(1));
  LpOutcome out = solve_lp(lp);
  if (out.status == LpStatus::Infeasible) return std::nullopt;
  internal_check(out.status == LpStatus::Optimal, "commitment program is bounded");
  return std::make_pair(std::move(out.assignment), std::move(out.value));
}

// Expected follower payoff per column under a row-player commitment.
std::vector<Rational> follower_column_values(const Game& game, const std::vector<Rational>& probs) {
  std::vector<Rational> values(game.cols(), Rational(0));
  for (int j = 0; j < game.cols(); ++j)
    for (int i = 0; i < game.rows(); ++i)
      if (!probs[i].is_zero()) values[j] += probs[i] * game.payoff(i, j, 2);
  return values;
}

// Assembles and sanity-checks a solution for the row-player-leads orientation.
StackelbergSolution make_row_leader_solution(const Game& game, std::vector<Rational> probs,
                                             int response, Rational value,
                                             std::vector<std::optional<Rational>> statuses) {
  MixedStrategy strategy(1, std::move(probs));
  std::vector<Rational> induced = follower_column_values(game, strategy.probabilities());
  bool indifferent = false;
  for (int j = 0; j < game.cols(); ++j) {
    if (j == response) continue;
    if (induced[j] == induced[response]) indifferent = true;
    internal_check(induced[j] <= induced[response], "induced response is a best response");
  }
  internal_check(expected_utility(game, strategy, MixedStrategy::pure(2, response, game.cols()), 1) ==
                     value,
                 "leader value matches the induced outcome");
  return StackelbergSolution{1,
                             std::move(strategy),
                             response,
                             std::move(value),
                             induced[response],
                             std::move(statuses),
                             indifferent};
}

StackelbergSolution swap_solution_players(StackelbergSolution s) {
  return StackelbergSolution{2,
                             MixedStrategy(2, s.leader_strategy.probabilities()),
                             s.follower_response,
                             std::move(s.leader_value),
                             std::move(s.follower_value),
                             std::move(s.per_column_status),
                             s.follower_indifferent};
}

StackelbergSolution multi_lp_row_leader(const Game& game) {
  const int n = game.cols();
  std::vector<std::optional<Rational>> statuses(n);
  std::vector<std::vector<Rational>> strategies(n);
  int best = -1;
  for (int j = 0; j < n; ++j) {
    auto solved = commitment_column(game, j);
    if (!solved) continue;
    strategies[j] = std::move(solved->first);
    statuses[j] = std::move(solved->second);
    if (best < 0 || *statuses[j] > *statuses[best]) best = j;
  }
  internal_check(best >= 0, "some follower response is inducible");
  Rational best_value = *statuses[best];
  return make_row_leader_solution(game, std::move(strategies[best]), best, std::move(best_value),
                                  std::move(statuses));
}

}  // namespace

MaximinResult maximin(const Game& game, int player) {
  require_player(player);
  if (player == 2) {
    MaximinResult r = maximin(swap_players(game), 1);
    return {MixedStrategy(2, r.strategy.probabilities()), std::move(r.value)};
  }
  const int m = game.rows();
  const int n = game.cols();
  // Variables: own mixing probabilities (nonnegative), then the floor value
  // (free). Maximize the floor subject to it lower-bounding every opponent
  // pure response.
  LinearProgram lp(m + 1);
  for (int i = 0; i < m; ++i) lp.nonneg_vars.insert(i);
  lp.objective[m] = Rational(1);
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> coeffs(m + 1);
    for (int i = 0; i < m; ++i) coeffs[i] = -game.payoff(i, j, 1);
    coeffs[m] = Rational(1);
    lp.add(std::move(coeffs), Relation::LessEq, Rational(0));
  }
  std::vector<Rational> ones(m + 1, Rational(1));
  ones[m] = Rational(0);
  lp.add(std::move(ones), Relation::Equal, Rational(1));

  LpOutcome out = solve_lp(lp);
  internal_check(out.status == LpStatus::Optimal, "maximin program is feasible and bounded");
  std::vector<Rational> probs(out.assignment.begin(), out.assignment.begin() + m);
  return {MixedStrategy(1, std::move(probs)), std::move(out.value)};
}

std::vector<int> best_responses(const Game& game, const MixedStrategy& leader_strategy,
                                int follower) {
  require_player(follower);
  if (leader_strategy.player() == follower)
    throw std::invalid_argument("leader strategy must belong to the other player");
  const int options = follower == 2 ? game.cols() : game.rows();
  const int expected = follower == 2 ? game.rows() : game.cols();
  if (leader_strategy.size() != expected)
    throw std::invalid_argument("strategy dimension does not match the game");

  std::vector<Rational> values(options, Rational(0));
  for (int t = 0; t < options; ++t) {
    for (int s = 0; s < leader_strategy.size(); ++s) {
      if (leader_strategy[s].is_zero()) continue;
      const Rational& u =
          follower == 2 ? game.payoff(s, t, 2) : game.payoff(t, s, 1);
      values[t] += leader_strategy[s] * u;
    }
  }
  Rational best = values[0];
  for (const Rational& v : values)
    if (v > best) best = v;
  std::vector<int> result;
  for (int t = 0; t < options; ++t)
    if (values[t] == best) result.push_back(t);
  return result;
}

PureCommitmentResult pure_commitment(const Game& game, int leader) {
  require_player(leader);
  if (leader == 2) return pure_commitment(swap_players(game), 1);
  int best_strategy = -1;
  Rational best_value;
  for (int s = 0; s < game.rows(); ++s) {
    // Follower's best responses to the pure commitment, ties resolved in the
    // leader's favor.
    Rational follower_best = game.payoff(s, 0, 2);
    for (int j = 1; j < game.cols(); ++j)
      if (game.payoff(s, j, 2) > follower_best) follower_best = game.payoff(s, j, 2);
    Rational value;
    bool first = true;
    for (int j = 0; j < game.cols(); ++j) {
      if (game.payoff(s, j, 2) != follower_best) continue;
      if (first || game.payoff(s, j, 1) > value) value = game.payoff(s, j, 1);
      first = false;
    }
    if (best_strategy < 0 || value > best_value) {
      best_strategy = s;
      best_value = value;
    }
  }
  return {best_strategy, std::move(best_value)};
}

StackelbergSolution stackelberg_multi_lp(const Game& game, int leader) {
  require_player(leader);
  if (leader == 2) return swap_solution_players(multi_lp_row_leader(swap_players(game)));
  return multi_lp_row_leader(game);
}

namespace {

SingleLpCommitment single_lp_row_leader(const Game& game) {
  const int m = game.rows();
  const int n = game.cols();
  const auto idx = [n](int i, int j) { return i * n + j; };

  // One variable per outcome pair; only the follower's incentive constraints.
  LinearProgram lp(m * n);
  lp.mark_all_nonneg();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) lp.objective[idx(i, j)] = game.payoff(i, j, 1);
  for (int j = 0; j < n; ++j) {
    for (int jp = 0; jp < n; ++jp) {
      if (jp == j) continue;
      std::vector<Rational> coeffs(m * n, Rational(0));
      for (int i = 0; i < m; ++i)
        coeffs[idx(i, j)] = game.payoff(i, j, 2) - game.payoff(i, jp, 2);
      lp.add(std::move(coeffs), Relation::GreaterEq, Rational(0));
    }
  }
  lp.add(std::vector<Rational>(m * n, Rational(1)), Relation::Equal, Rational(1));

  LpOutcome out = solve_lp(lp);
  internal_check(out.status == LpStatus::Optimal, "single commitment program is solvable");
  const Rational& value = out.value;

  std::vector<std::vector<Rational>> joint(m, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) joint[i][j] = out.assignment[idx(i, j)];

  std::vector<int> positive_columns;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i)
      if (joint[i][j].sign() > 0) {
        positive_columns.push_back(j);
        break;
      }

  // The per-column restricted programs; also the per-column record for the
  // returned solution.
  std::vector<std::optional<Rational>> statuses(n);
  std::vector<std::vector<Rational>> strategies(n);
  Rational best_restricted;
  bool any = false;
  for (int j = 0; j < n; ++j) {
    auto solved = commitment_column(game, j);
    if (!solved) continue;
    strategies[j] = std::move(solved->first);
    statuses[j] = std::move(solved->second);
    if (!any || *statuses[j] > best_restricted) best_restricted = *statuses[j];
    any = true;
  }
  internal_check(any && best_restricted == value,
                 "restricted optima agree with the combined program");

  int response;
  std::vector<Rational> probs;
  if (positive_columns.size() == 1) {
    response = positive_columns.front();
    probs.reserve(m);
    for (int i = 0; i < m; ++i) probs.push_back(joint[i][response]);
  } else {
    // Multi-column optimum: take the first column whose restricted optimum
    // matches; a single-column optimal solution always exists.
    response = -1;
    for (int j = 0; j < n && response < 0; ++j)
      if (statuses[j] && *statuses[j] == value) response = j;
    internal_check(response >= 0, "a single-column optimum exists");
    probs = strategies[response];
    for (auto& row : joint) std::fill(row.begin(), row.end(), Rational(0));
    for (int i = 0; i < m; ++i) joint[i][response] = probs[i];
  }

  StackelbergSolution solution =
      make_row_leader_solution(game, std::move(probs), response, value, std::move(statuses));
  return {JointDistribution(std::move(joint)), value, std::move(solution)};
}

}  // namespace

SingleLpCommitment stackelberg_single_lp(const Game& game, int leader) {
  require_player(leader);
  if (leader == 1) return single_lp_row_leader(game);
  SingleLpCommitment swapped = single_lp_row_leader(swap_players(game));
  std::vector<std::vector<Rational>> joint(game.rows(), std::vector<Rational>(game.cols()));
  for (int i = 0; i < game.rows(); ++i)
    for (int j = 0; j < game.cols(); ++j) joint[i][j] = swapped.distribution.at(j, i);
  return {JointDistribution(std::move(joint)), std::move(swapped.value),
          swap_solution_players(std::move(swapped.solution))};
}

CorrelatedOptimum correlated_optimize(const Game& game,
                                      const std::vector<std::vector<Rational>>& objective_weights) {
  const int m = game.rows();
  const int n = game.cols();
  if (static_cast<int>(objective_weights.size()) != m)
    throw std::invalid_argument("weights row count does not match the game");
  for (const auto& row : objective_weights)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("weights column count does not match the game");

  const auto idx = [n](int i, int j) { return i * n + j; };
  LinearProgram lp(m * n);
  lp.mark_all_nonneg();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) lp.objective[idx(i, j)] = objective_weights[i][j];

  // Row player: told to play s1, deviating to s1' must not help.
  for (int s1 = 0; s1 < m; ++s1) {
    for (int s1p = 0; s1p < m; ++s1p) {
      if (s1p == s1) continue;
      std::vector<Rational> coeffs(m * n, Rational(0));
      for (int j = 0; j < n; ++j)
        coeffs[idx(s1, j)] = game.payoff(s1, j, 1) - game.payoff(s1p, j, 1);
      lp.add(std::move(coeffs), Relation::GreaterEq, Rational(0));
    }
  }
  // Column player, symmetrically.
  for (int s2 = 0; s2 < n; ++s2) {
    for (int s2p = 0; s2p < n; ++s2p) {
      if (s2p == s2) continue;
      std::vector<Rational> coeffs(m * n, Rational(0));
      for (int i = 0; i < m; ++i)
        coeffs[idx(i, s2)] = game.payoff(i, s2, 2) - game.payoff(i, s2p, 2);
      lp.add(std::move(coeffs), Relation::GreaterEq, Rational(0));
    }
  }
  lp.add(std::vector<Rational>(m * n, Rational(1)), Relation::Equal, Rational(1));

  LpOutcome out = solve_lp(lp);
  internal_check(out.status == LpStatus::Optimal,
                 "correlated polytope is nonempty and the objective bounded");
  std::vector<std::vector<Rational>> joint(m, std::vector<Rational>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) joint[i][j] = out.assignment[idx(i, j)];
  return {JointDistribution(std::move(joint)), std::move(out.value)};
}

bool is_nash_equilibrium(const Game& game, const MixedStrategy& sigma1,
                         const MixedStrategy& sigma2) {
  if (sigma1.player() != 1 || sigma2.player() != 2 || sigma1.size() != game.rows() ||
      sigma2.size() != game.cols())
    throw std::invalid_argument("strategy dimensions do not match the game");
  Rational v1 = expected_utility(game, sigma1, sigma2, 1);
  for (int i = 0; i < game.rows(); ++i) {
    Rational dev;
    for (int j = 0; j < game.cols(); ++j)
      if (!sigma2[j].is_zero()) dev += sigma2[j] * game.payoff(i, j, 1);
    if (dev > v1) return false;
  }
  Rational v2 = expected_utility(game, sigma1, sigma2, 2);
  for (int j = 0; j < game.cols(); ++j) {
    Rational dev;
    for (int i = 0; i < game.rows(); ++i)
      if (!sigma1[i].is_zero()) dev += sigma1[i] * game.payoff(i, j, 2);
    if (dev > v2) return false;
  }
  return true;
}

namespace {

// A mixing for the column player, supported inside col_support, under which
// every row in row_support is a best response. Solves the indifference
// system directly and falls back to a feasibility program when the system is
// underdetermined. Returns the full-length probability vector.
std::optional<std::vector<Rational>> column_candidate(const Game& game,
                                                      const std::vector<int>& row_support,
                                                      const std::vector<int>& col_support) {
  const int k1 = static_cast<int>(row_support.size());
  const int k2 = static_cast<int>(col_support.size());
  const int r0 = row_support[0];

  std::vector<std::vector<Rational>> eq_lhs;
  std::vector<Rational> eq_rhs;
  for (int t = 1; t < k1; ++t) {
    std::vector<Rational> row(k2);
    for (int j = 0; j < k2; ++j)
      row[j] = game.payoff(r0, col_support[j], 1) - game.payoff(row_support[t], col_support[j], 1);
    eq_lhs.push_back(std::move(row));
    eq_rhs.push_back(Rational(0));
  }
  eq_lhs.emplace_back(k2, Rational(1));
  eq_rhs.push_back(Rational(1));

  std::vector<Rational> y;
  LinearSolve solved = solve_exact(k2, eq_lhs, eq_rhs);
  if (solved.kind == SolveKind::Inconsistent) return std::nullopt;
  if (solved.kind == SolveKind::Unique) {
    y = std::move(solved.solution);
    for (const Rational& p : y)
      if (p.sign() < 0) return std::nullopt;
    Rational v;
    for (int j = 0; j < k2; ++j)
      if (!y[j].is_zero()) v += y[j] * game.payoff(r0, col_support[j], 1);
    for (int r = 0; r < game.rows(); ++r) {
      if (std::find(row_support.begin(), row_support.end(), r) != row_support.end()) continue;
      Rational outside;
      for (int j = 0; j < k2; ++j)
        if (!y[j].is_zero()) outside += y[j] * game.payoff(r, col_support[j], 1);
      if (outside > v) return std::nullopt;
    }
  } else {
    // Underdetermined indifference system: pick a deterministic vertex of the
    // feasibility polytope, if any.
    LinearProgram lp(k2);
    lp.mark_all_nonneg();
    for (std::size_t e = 0; e < eq_lhs.size(); ++e)
      lp.add(eq_lhs[e], Relation::Equal, eq_rhs[e]);
    for (int r = 0; r < game.rows(); ++r) {
      if (std::find(row_support.begin(), row_support.end(), r) != row_support.end()) continue;
      std::vector<Rational> coeffs(k2);
      for (int j = 0; j < k2; ++j)
        coeffs[j] = game.payoff(r, col_support[j], 1) - game.payoff(r0, col_support[j], 1);
      lp.add(std::move(coeffs), Relation::LessEq, Rational(0));
    }
    LpOutcome out = solve_lp(lp);
    if (out.status != LpStatus::Optimal) return std::nullopt;
    y = std::move(out.assignment);
  }

  std::vector<Rational> full(game.cols(), Rational(0));
  for (int j = 0; j < k2; ++j) full[col_support[j]] = std::move(y[j]);
  return full;
}

std::vector<int> mask_indices(unsigned mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

}  // namespace

std::vector<NashEquilibrium> nash_support_enumeration(const Game& game, int support_cap) {
  const int m = game.rows();
  const int n = game.cols();
  if (m > support_cap || n > support_cap)
    throw BudgetError("game exceeds the support-enumeration cap of " +
                          std::to_string(support_cap),
                      BigInt(std::max(m, n)));

  const Game swapped = swap_players(game);
  std::vector<NashEquilibrium> found;
  std::set<std::pair<std::vector<Rational>, std::vector<Rational>>> seen;

  for (unsigned mask1 = 1; mask1 < (1u << m); ++mask1) {
    const std::vector<int> rows = mask_indices(mask1);
    for (unsigned mask2 = 1; mask2 < (1u << n); ++mask2) {
      const std::vector<int> cols = mask_indices(mask2);
      auto sigma2 = column_candidate(game, rows, cols);
      if (!sigma2) continue;
      auto sigma1 = column_candidate(swapped, cols, rows);
      if (!sigma1) continue;
      if (!seen.emplace(*sigma1, *sigma2).second) continue;

      MixedStrategy s1(1, std::move(*sigma1));
      MixedStrategy s2(2, std::move(*sigma2));
      internal_check(is_nash_equilibrium(game, s1, s2), "support candidate is an equilibrium");
      const bool degenerate =
          best_responses(game, s2, 1).size() > s1.support().size() ||
          best_responses(game, s1, 2).size() > s2.support().size();
      Rational v1 = expected_utility(game, s1, s2, 1);
      Rational v2 = expected_utility(game, s1, s2, 2);
      found.push_back(
          {std::move(s1), std::move(s2), std::move(v1), std::move(v2), degenerate});
    }
  }
  return found;
}

namespace {

// Is the pure strategy at `target` (position within `own`) strictly dominated
// by some mixture of the player's other surviving strategies? `payoff_of`
// maps (own strategy, opponent strategy) to the tested player's payoff.
template <typename PayoffFn>
bool strictly_dominated(const std::vector<int>& own, const std::vector<int>& opp, int target,
                        PayoffFn payoff_of) {
  const int k = static_cast<int>(own.size());
  if (k < 2) return false;
  std::vector<int> others;
  for (int s = 0; s < k; ++s)
    if (s != target) others.push_back(own[s]);

  // Maximize the worst-case margin of the mixture over the target; dominated
  // iff the optimum is strictly positive.
  const int vars = static_cast<int>(others.size()) + 1;
  const int margin = vars - 1;
  LinearProgram lp(vars);
  for (int i = 0; i < margin; ++i) lp.nonneg_vars.insert(i);
  lp.objective[margin] = Rational(1);
  for (int t : opp) {
    std::vector<Rational> coeffs(vars);
    for (std::size_t i = 0; i < others.size(); ++i) coeffs[i] = payoff_of(others[i], t);
    coeffs[margin] = Rational(-1);
    lp.add(std::move(coeffs), Relation::GreaterEq, payoff_of(own[target], t));
  }
  std::vector<Rational> ones(vars, Rational(1));
  ones[margin] = Rational(0);
  lp.add(std::move(ones), Relation::Equal, Rational(1));

  LpOutcome out = solve_lp(lp);
  internal_check(out.status == LpStatus::Optimal, "dominance program is feasible and bounded");
  return out.value.sign() > 0;
}

}  // namespace

DominanceResult iterated_strict_dominance(const Game& game) {
  std::vector<int> rows(game.rows());
  std::vector<int> cols(game.cols());
  for (int i = 0; i < game.rows(); ++i) rows[i] = i;
  for (int j = 0; j < game.cols(); ++j) cols[j] = j;
  std::vector<Elimination> eliminations;

  const auto u1 = [&game](int row, int col) { return game.payoff(row, col, 1); };
  const auto u2 = [&game](int col, int row) { return game.payoff(row, col, 2); };

  bool eliminated = true;
  while (eliminated) {
    eliminated = false;
    for (std::size_t s = 0; s < rows.size() && !eliminated; ++s) {
      if (strictly_dominated(rows, cols, static_cast<int>(s), u1)) {
        eliminations.push_back({1, rows[s], game.row_label(rows[s])});
        rows.erase(rows.begin() + s);
        eliminated = true;
      }
    }
    if (eliminated) continue;
    for (std::size_t s = 0; s < cols.size() && !eliminated; ++s) {
      if (strictly_dominated(cols, rows, static_cast<int>(s), u2)) {
        eliminations.push_back({2, cols[s], game.col_label(cols[s])});
        cols.erase(cols.begin() + s);
        eliminated = true;
      }
    }
  }

  std::vector<std::string> row_labels, col_labels;
  for (int r : rows) row_labels.push_back(game.row_label(r));
  for (int c : cols) col_labels.push_back(game.col_label(c));
  std::vector<std::vector<Game::PayoffCell>> cells;
  for (int r : rows) {
    std::vector<Game::PayoffCell> row;
    for (int c : cols) row.emplace_back(game.payoff(r, c, 1), game.payoff(r, c, 2));
    cells.push_back(std::move(row));
  }
  Game reduced(game.title(), std::move(row_labels), std::move(col_labels), std::move(cells));
  return {std::move(reduced), std::move(eliminations), std::move(rows), std::move(cols)};
}

}  // namespace bimatrix
