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

// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "bimatrix/analysis.hpp"
#include "bimatrix/discretization.hpp"
#include "bimatrix/game.hpp"
#include "bimatrix/lp.hpp"
#include "bimatrix/solution_concepts.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bimatrix;
using namespace bimatrix::testing;

namespace {

constexpr std::uint64_t kConstantSumSeed = 20260811;
constexpr std::uint64_t kGeneralSumSeed = 20260812;
constexpr std::uint64_t kLpSeed = 20260813;
constexpr int kGameCorpusSize = 500;
constexpr int kAnchoredLpCount = 600;
constexpr int kRandomLpCount = 400;

// Collects failures; keeps only the first few details for the report line.
struct Recorder {
  int violations = 0;
  std::string first;

  void expect(bool ok, const std::string& detail) {
    if (!ok && violations++ == 0) first = detail;
  }
  bool ok() const { return violations == 0; }
  std::string summary() const {
    if (ok()) return "";
    return std::to_string(violations) + " violation(s); first: " + first;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --------------------------------------------------------------------------

bool criterion_figure1(std::string& message) {
  const auto start = std::chrono::steady_clock::now();
  Recorder r;
  Game game = fig1();

  MaximinResult mm = maximin(game, 1);
  r.expect(mm.value == Rational(1), "maximin value " + mm.value.str());

  PureCommitmentResult pc = pure_commitment(game, 1);
  r.expect(pc.value == Rational(2), "pure commitment value " + pc.value.str());
  r.expect(pc.strategy == 1 && game.row_label(pc.strategy) == "D",
           "pure commitment strategy index " + std::to_string(pc.strategy));

  StackelbergSolution st = stackelberg_multi_lp(game, 1);
  r.expect(st.leader_value == Rational(5, 2), "commitment value " + st.leader_value.str());
  r.expect(st.leader_strategy.probabilities() ==
               std::vector<Rational>{Rational(1, 2), Rational(1, 2)},
           "commitment strategy not (1/2, 1/2)");
  r.expect(st.follower_response == 1 && game.col_label(st.follower_response) == "R",
           "induced response index " + std::to_string(st.follower_response));

  std::vector<NashEquilibrium> eqs = nash_support_enumeration(game);
  r.expect(eqs.size() == 1, "expected a unique equilibrium, found " +
                                std::to_string(eqs.size()));
  if (eqs.size() == 1) {
    r.expect(eqs[0].sigma1.probabilities() == std::vector<Rational>{Rational(1), Rational(0)} &&
                 eqs[0].sigma2.probabilities() ==
                     std::vector<Rational>{Rational(1), Rational(0)},
             "equilibrium is not (U, L)");
    r.expect(eqs[0].value1 == Rational(1) && eqs[0].value2 == Rational(1),
             "equilibrium values not (1, 1)");
  }

  std::vector<std::vector<Rational>> u1(2, std::vector<Rational>(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) u1[i][j] = game.payoff(i, j, 1);
  Rational ce = correlated_optimize(game, u1).value;
  r.expect(ce == Rational(1), "correlated optimum " + ce.str());

  const double elapsed = seconds_since(start);
  r.expect(elapsed < 1.0, "took " + std::to_string(elapsed) + "s (bound 1s)");
  char buffer[128];
  std::snprintf(buffer, sizeof(buffer), "exact 2x2 reproduction (%.3fs)", elapsed);
  message = r.ok() ? buffer : r.summary();
  return r.ok();
}

bool criterion_discretization_gap(std::string& message) {
  const auto start = std::chrono::steady_clock::now();
  Recorder r;
  Game game = fig1();

  GridResult adv = grid_stackelberg(game, 1, {100, TieBreak::Adversarial});
  r.expect(adv.value == Rational(249, 100), "adversarial value " + adv.value.str());
  r.expect(adv.strategy.probabilities() ==
               std::vector<Rational>{Rational(49, 100), Rational(51, 100)},
           "adversarial strategy not (49/100, 51/100)");

  for (int n : {2, 4, 10, 100}) {
    GridResult fav = grid_stackelberg(game, 1, {n, TieBreak::LeaderFavorable});
    r.expect(fav.value == Rational(5, 2),
             "leader-favorable value at N=" + std::to_string(n) + " is " + fav.value.str());
  }

  const double elapsed = seconds_since(start);
  r.expect(elapsed < 1.0, "took " + std::to_string(elapsed) + "s (bound 1s)");
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer),
                "adversarial grid reaches 249/100, leader-favorable reaches 5/2 (%.3fs)",
                elapsed);
  message = r.ok() ? buffer : r.summary();
  return r.ok();
}

bool criterion_grid_count(std::string& message) {
  const auto start = std::chrono::steady_clock::now();
  Recorder r;
  for (int parts = 1; parts <= 4; ++parts) {
    for (int total = 1; total <= 12; ++total) {
      BigInt closed = grid_count(parts, total);
      long enumerated = composition_count(parts, total);
      r.expect(closed == enumerated, "m=" + std::to_string(parts) + " N=" +
                                         std::to_string(total) + ": " + closed.get_str() +
                                         " vs " + std::to_string(enumerated));
    }
  }
  const double elapsed = seconds_since(start);
  r.expect(elapsed < 5.0, "took " + std::to_string(elapsed) + "s (bound 5s)");
  char buffer[128];
  std::snprintf(buffer, sizeof(buffer),
                "closed form equals enumeration for m<=4, N<=12 (%.3fs)", elapsed);
  message = r.ok() ? buffer : r.summary();
  return r.ok();
}

bool criterion_zero_sum_coincidence(std::string& message) {
  const auto start = std::chrono::steady_clock::now();
  Recorder r;
  TestRng rng(kConstantSumSeed);
  for (int index = 0; index < kGameCorpusSize; ++index) {
    Game game = random_constant_sum_game(rng);
    Rational c = *constant_sum(game);
    MaximinResult mm1 = maximin(game, 1);
    MaximinResult mm2 = maximin(game, 2);
    Rational st = stackelberg_multi_lp(game, 1).leader_value;
    r.expect(st == mm1.value, "game " + std::to_string(index) + ": commitment " + st.str() +
                                  " != maximin " + mm1.value.str());
    r.expect(mm1.value == c - mm2.value,
             "game " + std::to_string(index) + ": maximin " + mm1.value.str() +
                 " != c - opponent maximin " + (c - mm2.value).str());
  }
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer),
                "%d constant-sum games, commitment = maximin = c - opponent maximin "
                "(seed %llu, %.1fs)",
                kGameCorpusSize, static_cast<unsigned long long>(kConstantSumSeed),
                seconds_since(start));
  message = r.ok() ? buffer : r.summary();
  return r.ok();
}

bool criterion_inequality_chain(std::string& message) {
  const auto start = std::chrono::steady_clock::now();
  Recorder r;
  TestRng rng(kGeneralSumSeed);
  for (int index = 0; index < kGameCorpusSize; ++index) {
    Game game = random_game(rng);
    std::vector<NashEquilibrium> eqs = nash_support_enumeration(game, 8);
    r.expect(!eqs.empty(), "game " + std::to_string(index) + ": no equilibrium found");
    if (eqs.empty()) continue;
    Rational best_nash = eqs[0].value1;
    for (const NashEquilibrium& eq : eqs)
      if (eq.value1 > best_nash) best_nash = eq.value1;

    std::vector<std::vector<Rational>> u1(game.rows(), std::vector<Rational>(game.cols()));
    for (int i = 0; i < game.rows(); ++i)
      for (int j = 0; j < game.cols(); ++j) u1[i][j] = game.payoff(i, j, 1);
    Rational ce = correlated_optimize(game, u1).value;
    Rational st = stackelberg_multi_lp(game, 1).leader_value;
    Rational pure = pure_commitment(game, 1).value;

    r.expect(best_nash <= ce, "game " + std::to_string(index) + ": best nash " +
                                  best_nash.str() + " > ce " + ce.str());
    r.expect(ce <= st,
             "game " + std::to_string(index) + ": ce " + ce.str() + " > commitment " + st.str());
    r.expect(pure <= st, "game " + std::to_string(index) + ": pure " + pure.str() +
                             " > commitment " + st.str());
  }
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer),
                "%d games, nash <= ce <= commitment and pure <= commitment (seed %llu, %.1fs)",
                kGameCorpusSize, static_cast<unsigned long long>(kGeneralSumSeed),
                seconds_since(start));
  message = r.ok() ? buffer : r.summary();
  return r.ok();
}

bool criterion_single_multi_equivalence(std::string& message) {
  const auto start = std::chrono::steady_clock::now();
  Recorder r;
  TestRng rng(kGeneralSumSeed);
  for (int index = 0; index < kGameCorpusSize; ++index) {
    Game game = random_game(rng);
    Rational multi = stackelberg_multi_lp(game, 1).leader_value;
    SingleLpCommitment single = stackelberg_single_lp(game, 1);
    r.expect(single.value == multi, "game " + std::to_string(index) + ": single " +
                                        single.value.str() + " != multi " + multi.str());
    r.expect(satisfies_commitment_polytope(game, single.distribution.probabilities()),
             "game " + std::to_string(index) + ": extracted distribution leaves the polytope");
    int used_columns = 0;
    for (int j = 0; j < game.cols(); ++j)
      for (int i = 0; i < game.rows(); ++i)
        if (single.distribution.at(i, j).sign() > 0) {
          ++used_columns;
          break;
        }
    r.expect(used_columns == 1,
             "game " + std::to_string(index) + ": mass in " + std::to_string(used_columns) +
                 " columns");
  }
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer),
                "%d games, single-program value = per-response maximum (seed %llu, %.1fs)",
                kGameCorpusSize, static_cast<unsigned long long>(kGeneralSumSeed),
                seconds_since(start));
  message = r.ok() ? buffer : r.summary();
  return r.ok();
}

bool criterion_grid_soundness(std::string& message) {
  const auto start = std::chrono::steady_clock::now();
  Recorder r;
  TestRng rng(kGeneralSumSeed);
  for (int index = 0; index < kGameCorpusSize; ++index) {
    Game game = random_game(rng);
    Rational exact = stackelberg_multi_lp(game, 1).leader_value;
    Rational previous;
    bool first = true;
    for (int n : {1, 5, 25}) {
      Rational value = grid_stackelberg(game, 1, {n, TieBreak::LeaderFavorable}).value;
      r.expect(value <= exact, "game " + std::to_string(index) + " N=" + std::to_string(n) +
                                   ": grid " + value.str() + " > exact " + exact.str());
      if (!first)
        r.expect(previous <= value, "game " + std::to_string(index) + " N=" +
                                        std::to_string(n) + ": refinement decreased " +
                                        previous.str() + " -> " + value.str());
      previous = value;
      first = false;
    }
  }
  char buffer[160];
  std::snprintf(buffer, sizeof(buffer),
                "%d games, leader-favorable grid sound and monotone at N=1,5,25 "
                "(seed %llu, %.1fs)",
                kGameCorpusSize, static_cast<unsigned long long>(kGeneralSumSeed),
                seconds_since(start));
  message = r.ok() ? buffer : r.summary();
  return r.ok();
}

// LP generators for the solver criterion.

LinearProgram anchored_lp(TestRng& rng, std::vector<Rational>& anchor, long& scale) {
  const int vars = static_cast<int>(rng.uniform(2, 6));
  LinearProgram lp(vars);
  anchor.assign(vars, Rational(0));
  for (int v = 0; v < vars; ++v) {
    if (rng.uniform(0, 3) > 0) lp.nonneg_vars.insert(v);
    lp.objective[v] = Rational(rng.uniform(-9, 9));
    anchor[v] = Rational(rng.uniform(1, 5));
  }
  const int rows = static_cast<int>(rng.uniform(3, 8));
  scale = 1;
  for (int row = 0; row < rows; ++row) {
    std::vector<Rational> coeffs(vars);
    Rational at_anchor;
    long magnitude = 0;
    for (int v = 0; v < vars; ++v) {
      long a = rng.uniform(-5, 5);
      coeffs[v] = Rational(a);
      at_anchor += coeffs[v] * anchor[v];
      magnitude += a < 0 ? -a : a;
    }
    if (magnitude > scale) scale = magnitude;
    const long margin = rng.uniform(1, 8);
    if (rng.uniform(0, 1) == 0) {
      lp.add(std::move(coeffs), Relation::LessEq, at_anchor + Rational(margin));
    } else {
      lp.add(std::move(coeffs), Relation::GreaterEq, at_anchor - Rational(margin));
    }
  }
  return lp;
}

LinearProgram small_random_lp(TestRng& rng) {
  const int vars = static_cast<int>(rng.uniform(2, 4));
  LinearProgram lp(vars);
  lp.mark_all_nonneg();
  for (int v = 0; v < vars; ++v) lp.objective[v] = Rational(rng.uniform(-9, 9));
  const int rows = static_cast<int>(rng.uniform(1, 6));
  for (int row = 0; row < rows; ++row) {
    std::vector<Rational> coeffs(vars);
    for (int v = 0; v < vars; ++v) coeffs[v] = Rational(rng.uniform(-9, 9));
    Relation rel = rng.uniform(0, 2) == 0  ? Relation::LessEq
                   : rng.uniform(0, 1) == 0 ? Relation::GreaterEq
                                            : Relation::Equal;
    lp.add(std::move(coeffs), rel, Rational(rng.uniform(-9, 9)));
  }
  return lp;
}

bool criterion_lp_solver(std::string& message) {
  const auto start = std::chrono::steady_clock::now();
  Recorder r;
  TestRng rng(kLpSeed);
  int optimal = 0, infeasible = 0, unbounded = 0;

  // Anchored instances: a known interior point certifies feasibility and
  // seeds the random feasible points for the domination check.
  for (int index = 0; index < kAnchoredLpCount; ++index) {
    std::vector<Rational> anchor;
    long scale = 1;
    LinearProgram lp = anchored_lp(rng, anchor, scale);
    LpOutcome out = solve_lp(lp);
    r.expect(out.status != LpStatus::Infeasible,
             "anchored lp " + std::to_string(index) + " reported infeasible");
    if (out.status != LpStatus::Optimal) {
      ++unbounded;
      continue;
    }
    ++optimal;
    r.expect(satisfies(lp, out.assignment),
             "anchored lp " + std::to_string(index) + ": assignment violates a constraint");
    for (int sample = 0; sample < 100; ++sample) {
      std::vector<Rational> point(lp.num_vars);
      for (int v = 0; v < lp.num_vars; ++v)
        point[v] = anchor[v] + Rational(rng.uniform(-16, 16), 16 * scale);
      if (!satisfies(lp, point)) {
        r.expect(false, "anchored lp " + std::to_string(index) + ": sampler left the polytope");
        continue;
      }
      Rational value;
      for (int v = 0; v < lp.num_vars; ++v) value += lp.objective[v] * point[v];
      r.expect(value <= out.value, "anchored lp " + std::to_string(index) +
                                       ": feasible point beats the optimum");
    }
  }

  // Small random instances, cross-checked against exhaustive vertex
  // enumeration; random feasible points are convex combinations of vertices.
  for (int index = 0; index < kRandomLpCount; ++index) {
    LinearProgram lp = small_random_lp(rng);
    LpOutcome out = solve_lp(lp);
    OracleOutcome expected = lp_oracle(lp);
    r.expect(out.status == expected.status,
             "random lp " + std::to_string(index) + ": status mismatch");
    if (out.status == LpStatus::Optimal) ++optimal;
    if (out.status == LpStatus::Infeasible) ++infeasible;
    if (out.status == LpStatus::Unbounded) ++unbounded;
    if (out.status != LpStatus::Optimal || expected.status != LpStatus::Optimal) continue;

    r.expect(out.value == expected.value, "random lp " + std::to_string(index) + ": value " +
                                              out.value.str() + " != oracle " +
                                              expected.value.str());
    r.expect(satisfies(lp, out.assignment),
             "random lp " + std::to_string(index) + ": assignment violates a constraint");
    const auto& vertices = expected.feasible_vertices;
    for (int sample = 0; sample < 100; ++sample) {
      const auto& a = vertices[static_cast<std::size_t>(
          rng.uniform(0, static_cast<long>(vertices.size()) - 1))];
      const auto& b = vertices[static_cast<std::size_t>(
          rng.uniform(0, static_cast<long>(vertices.size()) - 1))];
      Rational lambda(rng.uniform(0, 16), 16);
      Rational value;
      std::vector<Rational> point(lp.num_vars);
      for (int v = 0; v < lp.num_vars; ++v) {
        point[v] = lambda * a[v] + (Rational(1) - lambda) * b[v];
        value += lp.objective[v] * point[v];
      }
      r.expect(satisfies(lp, point),
               "random lp " + std::to_string(index) + ": vertex combination infeasible");
      r.expect(value <= out.value,
               "random lp " + std::to_string(index) + ": feasible point beats the optimum");
    }
  }

  r.expect(optimal >= 100 && infeasible >= 30 && unbounded >= 30,
           "status mix too thin: optimal " + std::to_string(optimal) + ", infeasible " +
               std::to_string(infeasible) + ", unbounded " + std::to_string(unbounded));

  char buffer[200];
  std::snprintf(buffer, sizeof(buffer),
                "%d LPs: %d optimal (dominating 100 feasible points each), %d infeasible, "
                "%d unbounded, oracle-checked (seed %llu, %.1fs)",
                kAnchoredLpCount + kRandomLpCount, optimal, infeasible, unbounded,
                static_cast<unsigned long long>(kLpSeed), seconds_since(start));
  message = r.ok() ? buffer : r.summary();
  return r.ok();
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    bool (*run)(std::string&);
  };
  const std::vector<Criterion> criteria = {
      {1, "Figure-game reproduction", criterion_figure1},
      {2, "discretization gap", criterion_discretization_gap},
      {3, "grid-count formula", criterion_grid_count},
      {4, "zero-sum coincidence", criterion_zero_sum_coincidence},
      {5, "inequality chain", criterion_inequality_chain},
      {6, "single-/multi-program equivalence", criterion_single_multi_equivalence},
      {7, "grid soundness and convergence", criterion_grid_soundness},
      {8, "LP solver correctness", criterion_lp_solver},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    std::string message;
    bool pass = false;
    try {
      pass = criterion.run(message);
    } catch (const std::exception& e) {
      message = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %d: %s — %s\n", pass ? "PASS" : "FAIL", criterion.id,
                criterion.name, message.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
