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

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bimatrix/game.hpp"

namespace bimatrix::testing {

// Deterministic across platforms: raw mt19937_64 draws only, the standard
// distributions are implementation-defined.
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : engine_(seed) {}

  long uniform(long lo, long hi) {
    return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

inline Game make_game(const std::vector<std::vector<std::pair<long, long>>>& cells,
                      std::string title = "test game") {
  std::vector<std::string> row_labels, col_labels;
  for (std::size_t i = 0; i < cells.size(); ++i) row_labels.push_back("r" + std::to_string(i));
  for (std::size_t j = 0; j < cells[0].size(); ++j) col_labels.push_back("c" + std::to_string(j));
  std::vector<std::vector<Game::PayoffCell>> payoffs;
  for (const auto& row : cells) {
    std::vector<Game::PayoffCell> cell_row;
    for (const auto& [u1, u2] : row) cell_row.emplace_back(Rational(u1), Rational(u2));
    payoffs.push_back(std::move(cell_row));
  }
  return Game(std::move(title), std::move(row_labels), std::move(col_labels), std::move(payoffs));
}

inline Game fig1() {
  return Game("Commitment advantage example", {"U", "D"}, {"L", "R"},
              {{{Rational(1), Rational(1)}, {Rational(3), Rational(0)}},
               {{Rational(0), Rational(0)}, {Rational(2), Rational(1)}}});
}

inline Game matching_pennies() {
  return make_game({{{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}}}, "Matching pennies");
}

inline Game rock_paper_scissors() {
  return Game("Rock-paper-scissors", {"Rock", "Paper", "Scissors"},
              {"Rock", "Paper", "Scissors"},
              {{{Rational(0), Rational(0)}, {Rational(-1), Rational(1)}, {Rational(1), Rational(-1)}},
               {{Rational(1), Rational(-1)}, {Rational(0), Rational(0)}, {Rational(-1), Rational(1)}},
               {{Rational(-1), Rational(1)}, {Rational(1), Rational(-1)}, {Rational(0), Rational(0)}}});
}

inline Game battle_of_the_sexes() {
  return make_game({{{2, 1}, {0, 0}}, {{0, 0}, {1, 2}}}, "Battle of the sexes");
}

inline Game prisoners_dilemma() {
  return make_game({{{3, 3}, {0, 5}}, {{5, 0}, {1, 1}}}, "Prisoner's dilemma");
}

// Built so eliminations cascade: r1 goes first, which exposes c2, which
// exposes r2, which exposes c1, leaving the single cell (r0, c0).
inline Game chain_dominance() {
  return make_game({{{5, 3}, {5, 0}, {5, 2}}, {{4, 1}, {4, 1}, {4, 1}}, {{0, 3}, {0, 4}, {9, 2}}},
                   "Chain dominance");
}

inline Game random_game(TestRng& rng, int min_size = 2, int max_size = 6, long lo = -10,
                        long hi = 10) {
  const int m = static_cast<int>(rng.uniform(min_size, max_size));
  const int n = static_cast<int>(rng.uniform(min_size, max_size));
  std::vector<std::vector<std::pair<long, long>>> cells(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      cells[i].emplace_back(rng.uniform(lo, hi), rng.uniform(lo, hi));
  return make_game(cells, "random");
}

// u1 random, u2 = c - u1 for a random integer constant c.
inline Game random_constant_sum_game(TestRng& rng, int min_size = 2, int max_size = 6) {
  const int m = static_cast<int>(rng.uniform(min_size, max_size));
  const int n = static_cast<int>(rng.uniform(min_size, max_size));
  const long c = rng.uniform(-5, 5);
  std::vector<std::vector<std::pair<long, long>>> cells(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      long u1 = rng.uniform(-10, 10);
      cells[i].emplace_back(u1, c - u1);
    }
  return make_game(cells, "random constant-sum");
}

inline MixedStrategy row_mix(std::vector<Rational> probs) {
  return MixedStrategy(1, std::move(probs));
}
inline MixedStrategy col_mix(std::vector<Rational> probs) {
  return MixedStrategy(2, std::move(probs));
}

}  // namespace bimatrix::testing
