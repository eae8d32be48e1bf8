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

#include "bimatrix/analysis.hpp"

#include <nlohmann/json.hpp>

namespace bimatrix {

using nlohmann::ordered_json;

ConceptReport compare_concepts(const Game& game, int leader, int nash_cap) {
  if (leader != 1 && leader != 2) throw std::invalid_argument("leader must be 1 or 2");

  ConceptReport report;
  report.game_title = game.title();
  report.leader = leader;
  report.maximin_value = maximin(game, leader).value;
  report.pure_commit_value = pure_commitment(game, leader).value;
  StackelbergSolution stackelberg = stackelberg_multi_lp(game, leader);
  report.stackelberg_value = stackelberg.leader_value;

  std::vector<std::vector<Rational>> leader_payoffs(game.rows(),
                                                    std::vector<Rational>(game.cols()));
  for (int i = 0; i < game.rows(); ++i)
    for (int j = 0; j < game.cols(); ++j) leader_payoffs[i][j] = game.payoff(i, j, leader);
  report.ce_max_leader_value = correlated_optimize(game, leader_payoffs).value;

  try {
    for (const NashEquilibrium& eq : nash_support_enumeration(game, nash_cap))
      report.nash_values.push_back(leader == 1 ? eq.value1 : eq.value2);
  } catch (const BudgetError&) {
    report.nash_enumerated = false;
  }

  const auto inequality = [&report](const std::string& claim, const Rational& lo,
                                    const Rational& hi) {
    report.checks.push_back(
        {claim, lo <= hi, lo.str() + (lo <= hi ? " <= " : " > ") + hi.str()});
  };
  inequality("maximin <= stackelberg", report.maximin_value, report.stackelberg_value);
  inequality("pure-commitment <= stackelberg", report.pure_commit_value,
             report.stackelberg_value);
  inequality("ce-max-leader <= stackelberg", report.ce_max_leader_value,
             report.stackelberg_value);

  {
    // Every equilibrium's product distribution is a correlated equilibrium,
    // so no Nash value can beat the CE optimum.
    bool holds = true;
    std::string witness = "no equilibrium exceeds the correlated optimum";
    for (std::size_t k = 0; k < report.nash_values.size() && holds; ++k) {
      if (report.nash_values[k] > report.ce_max_leader_value) {
        holds = false;
        witness = "equilibrium " + std::to_string(k) + ": " + report.nash_values[k].str() +
                  " > " + report.ce_max_leader_value.str();
      }
    }
    if (!report.nash_enumerated) witness = "not enumerated (cap exceeded)";
    report.checks.push_back({"nash <= ce-max-leader", holds, witness});
  }

  {
    std::optional<Rational> c = constant_sum(game);
    bool holds = true;
    std::string witness;
    if (!c) {
      witness = "not constant-sum";
    } else {
      witness = "constant " + c->str() + "; all values coincide";
      if (report.maximin_value != report.stackelberg_value) {
        holds = false;
        witness = "maximin " + report.maximin_value.str() + " != stackelberg " +
                  report.stackelberg_value.str();
      }
      for (std::size_t k = 0; k < report.nash_values.size() && holds; ++k) {
        if (report.nash_values[k] != report.maximin_value) {
          holds = false;
          witness = "equilibrium " + std::to_string(k) + ": " + report.nash_values[k].str() +
                    " != maximin " + report.maximin_value.str();
        }
      }
    }
    report.checks.push_back({"constant-sum => maximin = stackelberg = nash", holds, witness});
  }
  return report;
}

std::string serialize_report(const ConceptReport& report) {
  ordered_json doc;
  doc["game_title"] = report.game_title;
  doc["leader"] = report.leader;
  doc["maximin_value"] = report.maximin_value.str();
  doc["pure_commit_value"] = report.pure_commit_value.str();
  doc["stackelberg_value"] = report.stackelberg_value.str();
  ordered_json nash = ordered_json::array();
  for (const Rational& v : report.nash_values) nash.push_back(v.str());
  doc["nash_values"] = std::move(nash);
  doc["nash_enumerated"] = report.nash_enumerated;
  doc["ce_max_leader_value"] = report.ce_max_leader_value.str();
  ordered_json checks = ordered_json::array();
  for (const ConceptCheck& check : report.checks) {
    ordered_json c;
    c["claim"] = check.claim;
    c["holds"] = check.holds;
    c["witness"] = check.witness;
    checks.push_back(std::move(c));
  }
  doc["checks"] = std::move(checks);
  return doc.dump(2);
}

InterchangeabilityResult check_interchangeability(const std::vector<NashEquilibrium>& equilibria,
                                                  const Game& game) {
  for (const NashEquilibrium& eq : equilibria)
    if (!is_nash_equilibrium(game, eq.sigma1, eq.sigma2))
      throw std::invalid_argument("input profile is not an equilibrium of the game");

  const int count = static_cast<int>(equilibria.size());
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      if (i == j) continue;
      if (!is_nash_equilibrium(game, equilibria[i].sigma1, equilibria[j].sigma2))
        return {false, std::make_pair(i, j)};
    }
  }
  return {true, std::nullopt};
}

}  // namespace bimatrix
