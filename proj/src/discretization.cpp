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

#include "bimatrix/discretization.hpp"

#include <stdexcept>
#include <utility>

#include "internal.hpp"

namespace bimatrix {

using detail::internal_check;

BigInt grid_count(int num_pure, int resolution) {
  if (num_pure < 1) throw std::invalid_argument("need at least one pure strategy");
  if (resolution < 1) throw std::invalid_argument("resolution must be at least 1");
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(resolution + num_pure - 1),
               static_cast<unsigned long>(num_pure - 1));
  return result;
}

namespace {

// Grid evaluation walks the composition tree with payoffs scaled to integers
// (common denominator cleared); comparisons of scaled sums are exact and
// order-equivalent, and the winning value is rebuilt as a rational at the end.
struct GridWalk {
  int num_rows = 0;
  int num_cols = 0;
  TieBreak tie_break = TieBreak::LeaderFavorable;
  std::vector<std::vector<BigInt>> leader_scaled;    // rows x cols
  std::vector<std::vector<BigInt>> follower_scaled;  // rows x cols
  std::vector<BigInt> col_leader;                    // running column sums
  std::vector<BigInt> col_follower;
  std::vector<int> counts;
  std::vector<int> best_counts;
  BigInt best_scaled;
  bool have_best = false;
  BigInt points = 0;

  void evaluate_leaf() {
    ++points;
    int chosen = -1;
    for (int j = 0; j < num_cols; ++j) {
      if (chosen < 0) {
        chosen = j;
        continue;
      }
      int c = cmp(col_follower[j], col_follower[chosen]);
      if (c > 0) {
        chosen = j;
      } else if (c == 0) {
        int lead = cmp(col_leader[j], col_leader[chosen]);
        if (tie_break == TieBreak::LeaderFavorable ? lead > 0 : lead < 0) chosen = j;
      }
    }
    if (!have_best || cmp(col_leader[chosen], best_scaled) > 0) {
      best_scaled = col_leader[chosen];
      best_counts = counts;
      have_best = true;
    }
  }

  void descend(int row, int remaining) {
    if (row == num_rows - 1) {
      add_row(row, remaining);
      counts[row] = remaining;
      evaluate_leaf();
      remove_row(row, remaining);
      counts[row] = 0;
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      add_row(row, c);
      counts[row] = c;
      descend(row + 1, remaining - c);
      remove_row(row, c);
      counts[row] = 0;
    }
  }

  void add_row(int row, int count) {
    if (count == 0) return;
    for (int j = 0; j < num_cols; ++j) {
      mpz_addmul_ui(col_leader[j].get_mpz_t(), leader_scaled[row][j].get_mpz_t(),
                    static_cast<unsigned long>(count));
      mpz_addmul_ui(col_follower[j].get_mpz_t(), follower_scaled[row][j].get_mpz_t(),
                    static_cast<unsigned long>(count));
    }
  }

  void remove_row(int row, int count) {
    if (count == 0) return;
    for (int j = 0; j < num_cols; ++j) {
      mpz_submul_ui(col_leader[j].get_mpz_t(), leader_scaled[row][j].get_mpz_t(),
                    static_cast<unsigned long>(count));
      mpz_submul_ui(col_follower[j].get_mpz_t(), follower_scaled[row][j].get_mpz_t(),
                    static_cast<unsigned long>(count));
    }
  }
};

GridResult grid_row_leader(const Game& game, const GridSpec& spec) {
  const int m = game.rows();
  const int n = game.cols();

  BigInt denominator_lcm = 1;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(),
              game.payoff(i, j, 1).denominator().get_mpz_t());
      mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(),
              game.payoff(i, j, 2).denominator().get_mpz_t());
    }
  }

  GridWalk walk;
  walk.num_rows = m;
  walk.num_cols = n;
  walk.tie_break = spec.tie_break;
  walk.leader_scaled.assign(m, std::vector<BigInt>(n));
  walk.follower_scaled.assign(m, std::vector<BigInt>(n));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational& u1 = game.payoff(i, j, 1);
      const Rational& u2 = game.payoff(i, j, 2);
      walk.leader_scaled[i][j] = u1.numerator() * (denominator_lcm / u1.denominator());
      walk.follower_scaled[i][j] = u2.numerator() * (denominator_lcm / u2.denominator());
    }
  }
  walk.col_leader.assign(n, BigInt(0));
  walk.col_follower.assign(n, BigInt(0));
  walk.counts.assign(m, 0);

  walk.descend(0, spec.resolution);
  internal_check(walk.points == grid_count(m, spec.resolution),
                 "enumerated point count matches the closed form");

  std::vector<Rational> probs;
  probs.reserve(m);
  for (int c : walk.best_counts) probs.emplace_back(c, spec.resolution);
  Rational value(walk.best_scaled, BigInt(spec.resolution) * denominator_lcm);
  return {MixedStrategy(1, std::move(probs)), std::move(value)};
}

}  // namespace

GridResult grid_stackelberg(const Game& game, int leader, const GridSpec& spec) {
  if (leader != 1 && leader != 2) throw std::invalid_argument("leader must be 1 or 2");
  if (spec.resolution < 1) throw std::invalid_argument("resolution must be at least 1");
  const int own = leader == 1 ? game.rows() : game.cols();
  BigInt count = grid_count(own, spec.resolution);
  if (count > spec.budget)
    throw BudgetError("grid of " + count.get_str() + " points exceeds the enumeration budget of " +
                          spec.budget.get_str(),
                      count);
  if (leader == 2) {
    GridResult r = grid_row_leader(swap_players(game), spec);
    return {MixedStrategy(2, r.strategy.probabilities()), std::move(r.value)};
  }
  return grid_row_leader(game, spec);
}

}  // namespace bimatrix
