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

#include "bimatrix/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bimatrix/analysis.hpp"
#include "bimatrix/discretization.hpp"
#include "bimatrix/game.hpp"
#include "bimatrix/solution_concepts.hpp"

namespace bimatrix {

namespace {

using nlohmann::ordered_json;

ordered_json error_object(const std::string& error, const std::string& detail) {
  ordered_json doc;
  doc["error"] = error;
  doc["detail"] = detail;
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::system_error(std::make_error_code(std::errc::no_such_file_or_directory), path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ordered_json rationals_json(const std::vector<Rational>& values) {
  ordered_json arr = ordered_json::array();
  for (const Rational& v : values) arr.push_back(v.str());
  return arr;
}

ordered_json distribution_json(const JointDistribution& dist) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < dist.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < dist.cols(); ++j) row.push_back(dist.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json stackelberg_json(const Game& game, const StackelbergSolution& solution,
                              const char* concept_name) {
  const int follower = solution.leader == 1 ? 2 : 1;
  ordered_json doc;
  doc["concept"] = concept_name;
  doc["leader"] = solution.leader;
  doc["value"] = solution.leader_value.str();
  doc["strategy"] = rationals_json(solution.leader_strategy.probabilities());
  doc["response"] = game.label(follower, solution.follower_response);
  doc["follower_value"] = solution.follower_value.str();
  ordered_json columns = ordered_json::array();
  for (std::size_t j = 0; j < solution.per_column_status.size(); ++j) {
    ordered_json col;
    col["response"] = game.label(follower, static_cast<int>(j));
    if (solution.per_column_status[j]) {
      col["status"] = "optimal";
      col["value"] = solution.per_column_status[j]->str();
    } else {
      col["status"] = "infeasible";
    }
    columns.push_back(std::move(col));
  }
  doc["per_column"] = std::move(columns);
  ordered_json notes = ordered_json::array();
  if (solution.follower_indifferent)
    notes.push_back(
        "follower is indifferent at the commitment; the optimum is attained under "
        "tie-breaking in the leader's favor");
  doc["notes"] = std::move(notes);
  return doc;
}

ordered_json solve_concept(const Game& game, const std::string& concept_name, int leader,
                           int nash_cap) {
  if (concept_name == "maximin") {
    MaximinResult r = maximin(game, leader);
    ordered_json doc;
    doc["concept"] = concept_name;
    doc["leader"] = leader;
    doc["value"] = r.value.str();
    doc["strategy"] = rationals_json(r.strategy.probabilities());
    doc["notes"] = ordered_json::array();
    return doc;
  }
  if (concept_name == "pure-commit") {
    PureCommitmentResult r = pure_commitment(game, leader);
    ordered_json doc;
    doc["concept"] = concept_name;
    doc["leader"] = leader;
    doc["value"] = r.value.str();
    doc["strategy"] = game.label(leader, r.strategy);
    doc["notes"] = ordered_json::array();
    return doc;
  }
  if (concept_name == "stackelberg") {
    return stackelberg_json(game, stackelberg_multi_lp(game, leader), "stackelberg");
  }
  if (concept_name == "stackelberg-single-lp") {
    SingleLpCommitment r = stackelberg_single_lp(game, leader);
    ordered_json doc = stackelberg_json(game, r.solution, "stackelberg-single-lp");
    doc["distribution"] = distribution_json(r.distribution);
    return doc;
  }
  if (concept_name == "ce-max-leader") {
    std::vector<std::vector<Rational>> weights(game.rows(), std::vector<Rational>(game.cols()));
    for (int i = 0; i < game.rows(); ++i)
      for (int j = 0; j < game.cols(); ++j) weights[i][j] = game.payoff(i, j, leader);
    CorrelatedOptimum r = correlated_optimize(game, weights);
    ordered_json doc;
    doc["concept"] = concept_name;
    doc["leader"] = leader;
    doc["value"] = r.value.str();
    doc["distribution"] = distribution_json(r.distribution);
    doc["notes"] = ordered_json::array();
    return doc;
  }
  if (concept_name == "nash") {
    std::vector<NashEquilibrium> equilibria = nash_support_enumeration(game, nash_cap);
    ordered_json doc;
    doc["concept"] = concept_name;
    ordered_json list = ordered_json::array();
    bool any_degenerate = false;
    for (const NashEquilibrium& eq : equilibria) {
      ordered_json e;
      e["sigma1"] = rationals_json(eq.sigma1.probabilities());
      e["sigma2"] = rationals_json(eq.sigma2.probabilities());
      e["value1"] = eq.value1.str();
      e["value2"] = eq.value2.str();
      e["degenerate"] = eq.degenerate;
      any_degenerate = any_degenerate || eq.degenerate;
      list.push_back(std::move(e));
    }
    doc["equilibria"] = std::move(list);
    ordered_json notes = ordered_json::array();
    if (any_degenerate)
      notes.push_back("equilibrium continua are represented by flagged vertex equilibria");
    doc["notes"] = std::move(notes);
    return doc;
  }
  if (concept_name == "dominance") {
    DominanceResult r = iterated_strict_dominance(game);
    ordered_json doc;
    doc["concept"] = concept_name;
    ordered_json order = ordered_json::array();
    for (const Elimination& e : r.eliminations) {
      ordered_json step;
      step["player"] = e.player;
      step["strategy"] = e.label;
      order.push_back(std::move(step));
    }
    doc["eliminations"] = std::move(order);
    doc["reduced_row_labels"] = r.reduced.row_labels();
    doc["reduced_col_labels"] = r.reduced.col_labels();
    doc["notes"] = ordered_json::array();
    return doc;
  }
  throw std::invalid_argument("unknown concept '" + concept_name + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solvers for two-player normal-form games", "bimatrix"};
  app.require_subcommand(1);

  std::string game_path;
  std::string concept_name;
  std::string tie_break;
  int leader = 1;
  int resolution = 1;
  int pure = 1;
  int nash_cap = 8;
  std::int64_t budget = 10000000;

  CLI::App* solve = app.add_subcommand("solve", "Run one solution concept on a game file");
  solve->add_option("--concept", concept_name, "Solution concept to compute")
      ->required()
      ->check(CLI::IsMember({"maximin", "pure-commit", "stackelberg", "stackelberg-single-lp",
                             "ce-max-leader", "nash", "dominance"}));
  solve->add_option("--leader", leader, "Committing player (default 1)")->check(CLI::Range(1, 2));
  solve->add_option("--nash-cap", nash_cap, "Support-enumeration size cap (default 8)");
  solve->add_option("game", game_path, "Game file (JSON)")->required();

  CLI::App* compare = app.add_subcommand("compare", "Compare all solution concepts on one game");
  compare->add_option("--leader", leader, "Committing player (default 1)")
      ->check(CLI::Range(1, 2));
  compare->add_option("--nash-cap", nash_cap, "Support-enumeration size cap (default 8)");
  compare->add_option("game", game_path, "Game file (JSON)")->required();

  CLI::App* discretize =
      app.add_subcommand("discretize", "Grid-search commitments at a fixed resolution");
  discretize->add_option("--resolution", resolution, "Grid resolution N (probabilities k/N)")
      ->required()
      ->check(CLI::PositiveNumber);
  discretize->add_option("--tie-break", tie_break, "Follower tie-break convention")
      ->required()
      ->check(CLI::IsMember({"leader-favorable", "adversarial"}));
  discretize->add_option("--leader", leader, "Committing player (default 1)")
      ->check(CLI::Range(1, 2));
  discretize->add_option("--budget", budget, "Maximum number of grid points (default 10^7)")
      ->check(CLI::PositiveNumber);
  discretize->add_option("game", game_path, "Game file (JSON)")->required();

  CLI::App* count = app.add_subcommand("count", "Number of grid points for a strategy simplex");
  count->add_option("--pure", pure, "Number of pure strategies")
      ->required()
      ->check(CLI::PositiveNumber);
  count->add_option("--resolution", resolution, "Grid resolution N")
      ->required()
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_object("usage error", e.what()).dump(2) << "\n";
    return 1;
  }

  try {
    ordered_json doc;
    if (count->parsed()) {
      doc["grid_count"] = grid_count(pure, resolution).get_str();
    } else {
      std::string text = read_file(game_path);
      Game game = parse_game(text);
      if (solve->parsed()) {
        doc = solve_concept(game, concept_name, leader, nash_cap);
      } else if (compare->parsed()) {
        out << serialize_report(compare_concepts(game, leader, nash_cap)) << "\n";
        return 0;
      } else {
        GridSpec spec;
        spec.resolution = resolution;
        spec.tie_break =
            tie_break == "adversarial" ? TieBreak::Adversarial : TieBreak::LeaderFavorable;
        spec.budget = BigInt(static_cast<long>(budget));
        GridResult result = grid_stackelberg(game, leader, spec);
        doc["resolution"] = resolution;
        doc["tie_break"] = tie_break;
        doc["grid_count"] =
            grid_count(leader == 1 ? game.rows() : game.cols(), resolution).get_str();
        doc["best_strategy"] = rationals_json(result.strategy.probabilities());
        doc["value"] = result.value.str();
      }
    }
    out << doc.dump(2) << "\n";
    return 0;
  } catch (const std::system_error& e) {
    err << error_object("file not found", game_path).dump(2) << "\n";
    return 1;
  } catch (const ParseError& e) {
    ordered_json doc = error_object("parse error", e.what());
    doc["location"] = e.location();
    err << doc.dump(2) << "\n";
    return 1;
  } catch (const BudgetError& e) {
    ordered_json doc = error_object("budget exceeded", e.what());
    doc["count"] = e.count().get_str();
    err << doc.dump(2) << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << error_object("invalid request", e.what()).dump(2) << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    err << error_object("internal error", e.what()).dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << error_object("internal error", e.what()).dump(2) << "\n";
    return 2;
  }
}

}  // namespace bimatrix
