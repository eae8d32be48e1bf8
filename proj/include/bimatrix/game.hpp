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
#include <string_view>
#include <utility>
#include <vector>

#include "bimatrix/rational.hpp"

namespace bimatrix {

/// Malformed game document: syntax error, dimension mismatch, duplicate
/// label, or a numeral outside the accepted forms. `location` names the
/// offending element ("payoffs[2]", "row_labels[1]", "byte 17", ...).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::string location)
      : std::runtime_error(message), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

/// Two-player normal-form game: a payoff bimatrix with labeled pure
/// strategies. Player 1 picks a row, player 2 picks a column. Immutable
/// after construction; strategy identity is by index, labels are
/// presentation-only.
class Game {
 public:
  using PayoffCell = std::pair<Rational, Rational>;

  Game(std::string title, std::vector<std::string> row_labels,
       std::vector<std::string> col_labels,
       std::vector<std::vector<PayoffCell>> payoffs);

  int rows() const { return static_cast<int>(row_labels_.size()); }
  int cols() const { return static_cast<int>(col_labels_.size()); }
  int num_strategies(int player) const { return player == 1 ? rows() : cols(); }

  const Rational& payoff(int row, int col, int player) const {
    const PayoffCell& cell = payoffs_[row][col];
    return player == 1 ? cell.first : cell.second;
  }

  const std::string& title() const { return title_; }
  const std::string& row_label(int i) const { return row_labels_[i]; }
  const std::string& col_label(int j) const { return col_labels_[j]; }
  const std::string& label(int player, int index) const {
    return player == 1 ? row_labels_[index] : col_labels_[index];
  }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

 private:
  std::string title_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<std::vector<PayoffCell>> payoffs_;
};

/// Probability distribution over one player's pure strategies. Entries are
/// nonnegative and sum to exactly 1.
class MixedStrategy {
 public:
  MixedStrategy(int player, std::vector<Rational> probabilities);

  static MixedStrategy pure(int player, int index, int num_strategies);
  static MixedStrategy uniform(int player, int num_strategies);

  int player() const { return player_; }
  int size() const { return static_cast<int>(probabilities_.size()); }
  const Rational& operator[](int i) const { return probabilities_[i]; }
  const std::vector<Rational>& probabilities() const { return probabilities_; }
  std::vector<int> support() const;

 private:
  int player_;
  std::vector<Rational> probabilities_;
};

/// Probability distribution over outcome pairs (row, column). Entries are
/// nonnegative and sum to exactly 1.
class JointDistribution {
 public:
  explicit JointDistribution(std::vector<std::vector<Rational>> probabilities);

  int rows() const { return static_cast<int>(probabilities_.size()); }
  int cols() const { return static_cast<int>(probabilities_[0].size()); }
  const Rational& at(int row, int col) const { return probabilities_[row][col]; }
  const std::vector<std::vector<Rational>>& probabilities() const { return probabilities_; }

 private:
  std::vector<std::vector<Rational>> probabilities_;
};

/// Parses the JSON game format:
///   {"title": "...", "row_labels": [...], "col_labels": [...],
///    "payoffs": [[[u1,u2], ...], ...]}
/// payoffs is row-major; each numeral is a JSON integer, a string "p/q",
/// or a string finite decimal. Throws ParseError with a location on any
/// malformed input.
Game parse_game(std::string_view document);

/// Canonical serialization; parse_game(serialize_game(g)) reconstructs a
/// structurally identical game.
std::string serialize_game(const Game& game);

/// The constant c with u1 + u2 = c in every cell, if one exists.
/// Zero-sum games are exactly the c == 0 case.
std::optional<Rational> constant_sum(const Game& game);

/// Exact expected utility of `player` under independent mixing.
Rational expected_utility(const Game& game, const MixedStrategy& sigma1,
                          const MixedStrategy& sigma2, int player);

/// The same game with the players' roles exchanged: rows become columns
/// and each cell (u1, u2) becomes (u2, u1).
Game swap_players(const Game& game);

}  // namespace bimatrix
