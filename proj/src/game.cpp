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

#include "bimatrix/game.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>

namespace bimatrix {

using nlohmann::json;
using nlohmann::ordered_json;

Game::Game(std::string title, std::vector<std::string> row_labels,
           std::vector<std::string> col_labels,
           std::vector<std::vector<PayoffCell>> payoffs)
    : title_(std::move(title)),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      payoffs_(std::move(payoffs)) {
  if (row_labels_.empty()) throw ParseError("game needs at least one row strategy", "row_labels");
  if (col_labels_.empty()) throw ParseError("game needs at least one column strategy", "col_labels");
  if (payoffs_.size() != row_labels_.size())
    throw ParseError("payoff row count does not match row_labels", "payoffs");
  for (std::size_t i = 0; i < payoffs_.size(); ++i) {
    if (payoffs_[i].size() != col_labels_.size())
      throw ParseError("payoff column count does not match col_labels",
                       "payoffs[" + std::to_string(i) + "]");
  }
  std::set<std::string> seen(row_labels_.begin(), row_labels_.end());
  if (seen.size() != row_labels_.size()) throw ParseError("duplicate row label", "row_labels");
  seen = std::set<std::string>(col_labels_.begin(), col_labels_.end());
  if (seen.size() != col_labels_.size()) throw ParseError("duplicate column label", "col_labels");
}

MixedStrategy::MixedStrategy(int player, std::vector<Rational> probabilities)
    : player_(player), probabilities_(std::move(probabilities)) {
  if (player != 1 && player != 2) throw std::invalid_argument("player must be 1 or 2");
  if (probabilities_.empty()) throw std::invalid_argument("empty mixed strategy");
  Rational total;
  for (const Rational& p : probabilities_) {
    if (p.sign() < 0) throw std::invalid_argument("negative probability in mixed strategy");
    total += p;
  }
  if (total != Rational(1)) throw std::invalid_argument("mixed strategy does not sum to 1");
}

MixedStrategy MixedStrategy::pure(int player, int index, int num_strategies) {
  std::vector<Rational> p(num_strategies, Rational(0));
  p.at(index) = Rational(1);
  return MixedStrategy(player, std::move(p));
}

MixedStrategy MixedStrategy::uniform(int player, int num_strategies) {
  std::vector<Rational> p(num_strategies, Rational(1, num_strategies));
  return MixedStrategy(player, std::move(p));
}

std::vector<int> MixedStrategy::support() const {
  std::vector<int> s;
  for (int i = 0; i < size(); ++i)
    if (probabilities_[i].sign() > 0) s.push_back(i);
  return s;
}

JointDistribution::JointDistribution(std::vector<std::vector<Rational>> probabilities)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.empty() || probabilities_[0].empty())
    throw std::invalid_argument("empty joint distribution");
  Rational total;
  for (const auto& row : probabilities_) {
    if (row.size() != probabilities_[0].size())
      throw std::invalid_argument("ragged joint distribution");
    for (const Rational& p : row) {
      if (p.sign() < 0) throw std::invalid_argument("negative probability in joint distribution");
      total += p;
    }
  }
  if (total != Rational(1)) throw std::invalid_argument("joint distribution does not sum to 1");
}

namespace {

Rational parse_numeral(const json& value, const std::string& location) {
  if (value.is_number_integer() || value.is_number_unsigned()) {
    // dump() preserves the integer digits exactly, including uint64 values.
    return *Rational::parse(value.dump());
  }
  if (value.is_number_float())
    throw ParseError("non-integer JSON number; write it as a string (\"p/q\" or decimal)", location);
  if (value.is_string()) {
    auto parsed = Rational::parse(value.get<std::string>());
    if (!parsed) throw ParseError("malformed numeral '" + value.get<std::string>() + "'", location);
    return *parsed;
  }
  throw ParseError("expected a numeral", location);
}

std::vector<std::string> parse_labels(const json& doc, const std::string& key) {
  if (!doc.contains(key)) throw ParseError("missing required key '" + key + "'", key);
  const json& arr = doc.at(key);
  if (!arr.is_array()) throw ParseError("'" + key + "' must be an array of strings", key);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string())
      throw ParseError("label must be a string", key + "[" + std::to_string(i) + "]");
    labels.push_back(arr[i].get<std::string>());
  }
  return labels;
}

}  // namespace

Game parse_game(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("syntax error: ") + e.what(), "byte " + std::to_string(e.byte));
  }
  if (!doc.is_object()) throw ParseError("game document must be a JSON object", "document");
  if (!doc.contains("title")) throw ParseError("missing required key 'title'", "title");
  if (!doc.at("title").is_string()) throw ParseError("'title' must be a string", "title");

  std::vector<std::string> row_labels = parse_labels(doc, "row_labels");
  std::vector<std::string> col_labels = parse_labels(doc, "col_labels");

  if (!doc.contains("payoffs")) throw ParseError("missing required key 'payoffs'", "payoffs");
  const json& payoffs = doc.at("payoffs");
  if (!payoffs.is_array()) throw ParseError("'payoffs' must be an array", "payoffs");
  if (payoffs.size() != row_labels.size())
    throw ParseError("payoffs has " + std::to_string(payoffs.size()) + " rows but row_labels has " +
                         std::to_string(row_labels.size()),
                     "payoffs");

  std::vector<std::vector<Game::PayoffCell>> cells;
  for (std::size_t i = 0; i < payoffs.size(); ++i) {
    const std::string row_loc = "payoffs[" + std::to_string(i) + "]";
    const json& row = payoffs[i];
    if (!row.is_array()) throw ParseError("payoff row must be an array", row_loc);
    if (row.size() != col_labels.size())
      throw ParseError("row has " + std::to_string(row.size()) + " cells but col_labels has " +
                           std::to_string(col_labels.size()),
                       row_loc);
    std::vector<Game::PayoffCell> row_cells;
    for (std::size_t j = 0; j < row.size(); ++j) {
      const std::string cell_loc = row_loc + "[" + std::to_string(j) + "]";
      const json& cell = row[j];
      if (!cell.is_array() || cell.size() != 2)
        throw ParseError("payoff cell must be a [u1, u2] pair", cell_loc);
      row_cells.emplace_back(parse_numeral(cell[0], cell_loc + "[0]"),
                             parse_numeral(cell[1], cell_loc + "[1]"));
    }
    cells.push_back(std::move(row_cells));
  }

  std::set<std::string> seen(row_labels.begin(), row_labels.end());
  if (seen.size() != row_labels.size()) throw ParseError("duplicate row label", "row_labels");
  seen = std::set<std::string>(col_labels.begin(), col_labels.end());
  if (seen.size() != col_labels.size()) throw ParseError("duplicate column label", "col_labels");

  return Game(doc.at("title").get<std::string>(), std::move(row_labels), std::move(col_labels),
              std::move(cells));
}

namespace {

// Integers that fit a 64-bit signed value are emitted as JSON numbers,
// everything else as a reduced string.
ordered_json numeral_to_json(const Rational& r) {
  if (r.is_integer() && r.numerator().fits_slong_p())
    return ordered_json(static_cast<std::int64_t>(r.numerator().get_si()));
  return ordered_json(r.str());
}

}  // namespace

std::string serialize_game(const Game& game) {
  ordered_json doc;
  doc["title"] = game.title();
  doc["row_labels"] = game.row_labels();
  doc["col_labels"] = game.col_labels();
  ordered_json payoffs = ordered_json::array();
  for (int i = 0; i < game.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < game.cols(); ++j) {
      row.push_back(ordered_json::array(
          {numeral_to_json(game.payoff(i, j, 1)), numeral_to_json(game.payoff(i, j, 2))}));
    }
    payoffs.push_back(std::move(row));
  }
  doc["payoffs"] = std::move(payoffs);
  return doc.dump(2) + "\n";
}

std::optional<Rational> constant_sum(const Game& game) {
  Rational c = game.payoff(0, 0, 1) + game.payoff(0, 0, 2);
  for (int i = 0; i < game.rows(); ++i)
    for (int j = 0; j < game.cols(); ++j)
      if (game.payoff(i, j, 1) + game.payoff(i, j, 2) != c) return std::nullopt;
  return c;
}

Rational expected_utility(const Game& game, const MixedStrategy& sigma1,
                          const MixedStrategy& sigma2, int player) {
  if (player != 1 && player != 2) throw std::invalid_argument("player must be 1 or 2");
  if (sigma1.player() != 1 || sigma2.player() != 2)
    throw std::invalid_argument("expected_utility takes a player-1 and a player-2 strategy");
  if (sigma1.size() != game.rows() || sigma2.size() != game.cols())
    throw std::invalid_argument("strategy dimensions do not match the game");
  Rational total;
  for (int i = 0; i < game.rows(); ++i) {
    if (sigma1[i].is_zero()) continue;
    Rational row_total;
    for (int j = 0; j < game.cols(); ++j) {
      if (sigma2[j].is_zero()) continue;
      row_total += sigma2[j] * game.payoff(i, j, player);
    }
    total += sigma1[i] * row_total;
  }
  return total;
}

Game swap_players(const Game& game) {
  std::vector<std::vector<Game::PayoffCell>> cells(game.cols());
  for (int j = 0; j < game.cols(); ++j) {
    cells[j].reserve(game.rows());
    for (int i = 0; i < game.rows(); ++i)
      cells[j].emplace_back(game.payoff(i, j, 2), game.payoff(i, j, 1));
  }
  return Game(game.title(), game.col_labels(), game.row_labels(), std::move(cells));
}

}  // namespace bimatrix
