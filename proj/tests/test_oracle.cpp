// Copyright 2026 The corrplan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include "corrplan/equilibrium.h"
#include "corrplan/io.h"
#include "corrplan/oracle.h"
#include "corrplan/support_solver.h"
#include "doctest.h"
#include "fixtures.h"
#include "random_games.h"

namespace corrplan {
namespace {

using testing::RandomGame;

const Concept kOracleConcepts[] = {Concept::kNfce,  Concept::kNfcce,
                                   Concept::kEfce,  Concept::kEfcce,
                                   Concept::kAfce,  Concept::kAfcce};

// Concepts whose equilibria contain those of `c` per the inclusion map;
// NFCCE containment in AFCE is deliberately not assumed.
std::vector<Concept> WeakerConcepts(Concept c) {
  switch (c) {
    case Concept::kNfce:
      return {Concept::kEfce, Concept::kEfcce, Concept::kNfcce,
              Concept::kAfce, Concept::kAfcce};
    case Concept::kEfce:
      return {Concept::kEfcce, Concept::kNfcce, Concept::kAfce,
              Concept::kAfcce};
    case Concept::kEfcce:
      return {Concept::kNfcce, Concept::kAfcce};
    case Concept::kAfce:
      return {Concept::kAfcce};
    default:
      return {};
  }
}

TEST_CASE("oracle reproduces the signaling values") {
  const Game game = ParseGame(testing::kSignalingGameJson);
  SUBCASE("any NFCE has the company rejecting: optimal welfare 6") {
    const OracleReport report =
        OracleSolve(game, Concept::kNfce, SystemMode::kMaximize);
    REQUIRE(report.feasible);
    CHECK(*report.optimal_value == 6);
    REQUIRE(report.witness.has_value());
    CHECK(Verify(game, *report.witness, Concept::kNfce).ok);
    CHECK(ComputeExpectedPayoffs(game, *report.witness).objective == 6);
  }
  SUBCASE("EFCE reaches welfare 10") {
    const OracleReport report = OracleSolve(
        game, Concept::kEfce, SystemMode::kThreshold, Rational(10));
    REQUIRE(report.feasible);
    REQUIRE(report.witness.has_value());
    CHECK(Verify(game, *report.witness, Concept::kEfce).ok);
    CHECK(ComputeExpectedPayoffs(game, *report.witness).objective >= 10);
    // And no concept exceeds the best leaf-welfare mixture.
    const OracleReport max_report =
        OracleSolve(game, Concept::kEfce, SystemMode::kMaximize);
    CHECK(*max_report.optimal_value == 10);
  }
  SUBCASE("the profile cap is enforced") {
    OracleOptions options;
    options.profile_cap = 3;
    CHECK_THROWS_AS(OracleSolve(game, Concept::kNfce, SystemMode::kMaximize,
                                Rational(0), options),
                    ScaleError);
  }
  SUBCASE("nash has no oracle program") {
    CHECK_THROWS_AS(OracleSolve(game, Concept::kNash, SystemMode::kMaximize),
                    std::invalid_argument);
  }
}

TEST_CASE("oracle witnesses verify and values are monotone along inclusions") {
  std::mt19937_64 rng(90210);
  testing::RandomGameOptions options;
  options.max_nodes = 14;
  options.max_strategies_per_player = 12;
  options.max_profiles = 400;
  for (int trial = 0; trial < 12; ++trial) {
    const Game game = RandomGame(rng, options);
    std::map<Concept, Rational> best;
    for (Concept c : kOracleConcepts) {
      const OracleReport report =
          OracleSolve(game, c, SystemMode::kMaximize);
      REQUIRE(report.feasible);
      best[c] = *report.optimal_value;
      REQUIRE(report.witness.has_value());
      // Self-consistency: the oracle's plan passes the verifier and the
      // reported value is its exact objective.
      CHECK(Verify(game, *report.witness, c).ok);
      CHECK(ComputeExpectedPayoffs(game, *report.witness).objective ==
            *report.optimal_value);
    }
    // Larger equilibrium sets cannot have smaller optima.
    CHECK(best[Concept::kNfce] <= best[Concept::kEfce]);
    CHECK(best[Concept::kEfce] <= best[Concept::kEfcce]);
    CHECK(best[Concept::kEfcce] <= best[Concept::kNfcce]);
    CHECK(best[Concept::kEfce] <= best[Concept::kAfce]);
    CHECK(best[Concept::kAfce] <= best[Concept::kAfcce]);
    CHECK(best[Concept::kEfcce] <= best[Concept::kAfcce]);
  }
}

TEST_CASE("inclusion chain holds on oracle equilibria") {
  std::mt19937_64 rng(31337);
  testing::RandomGameOptions options;
  options.max_nodes = 12;
  options.max_strategies_per_player = 8;
  options.max_profiles = 250;
  for (int trial = 0; trial < 10; ++trial) {
    const Game game = RandomGame(rng, options);
    for (Concept c : kOracleConcepts) {
      const OracleReport report =
          OracleSolve(game, c, SystemMode::kMaximize);
      REQUIRE(report.witness.has_value());
      for (Concept weaker : WeakerConcepts(c)) {
        CHECK(Verify(game, *report.witness, weaker).ok);
      }
    }
  }
}

TEST_CASE("oracle threshold agrees with the full-support constraint system") {
  std::mt19937_64 rng(2718);
  testing::RandomGameOptions options;
  options.max_nodes = 10;
  options.max_strategies_per_player = 6;
  options.max_profiles = 36;
  for (int trial = 0; trial < 8; ++trial) {
    const Game game = RandomGame(rng, options);
    const ProfileEnumerator profiles(game, 64);
    std::vector<StrategyProfile> sigma;
    for (std::uint64_t k = 0; k < profiles.count(); ++k) {
      sigma.push_back(profiles.at(k));
    }
    for (Concept c : {Concept::kEfce, Concept::kEfcce, Concept::kNfcce,
                      Concept::kAfce, Concept::kAfcce}) {
      const OracleReport best = OracleSolve(game, c, SystemMode::kMaximize);
      REQUIRE(best.feasible);
      for (const Rational& lambda :
           {*best.optimal_value, Rational(*best.optimal_value + 1)}) {
        const OracleReport threshold =
            OracleSolve(game, c, SystemMode::kThreshold, lambda);
        const FixedSupportResult via_system = SolveWithSupport(
            game, c, sigma, SystemMode::kThreshold, lambda);
        CHECK(threshold.feasible ==
              (via_system.outcome.status == LpOutcome::Status::kFeasible));
        CHECK(threshold.feasible == (lambda <= *best.optimal_value));
      }
    }
  }
}

TEST_CASE("round-trip: oracle optimum, support system, verified plan") {
  std::mt19937_64 rng(1618);
  testing::RandomGameOptions options;
  options.max_nodes = 14;
  options.max_strategies_per_player = 12;
  options.max_profiles = 400;
  for (int trial = 0; trial < 10; ++trial) {
    const Game game = RandomGame(rng, options);
    for (Concept c : {Concept::kEfce, Concept::kEfcce, Concept::kNfcce,
                      Concept::kAfce, Concept::kAfcce}) {
      const OracleReport report =
          OracleSolve(game, c, SystemMode::kMaximize);
      REQUIRE(report.feasible);
      const Rational lambda = *report.optimal_value;
      std::vector<StrategyProfile> support;
      for (const auto& [profile, prob] : report.witness->support()) {
        support.push_back(profile);
      }
      const FixedSupportResult result =
          SolveWithSupport(game, c, support, SystemMode::kThreshold, lambda);
      REQUIRE(result.outcome.status == LpOutcome::Status::kFeasible);
      REQUIRE(result.plan.has_value());
      CHECK(Verify(game, *result.plan, c).ok);
      CHECK(ComputeExpectedPayoffs(game, *result.plan).objective >= lambda);
    }
  }
}

TEST_CASE("support enumeration finds small certificates") {
  const Game game = ParseGame(testing::kSignalingGameJson);
  // Welfare 6 is achievable by a single profile for every concept.
  SupportSolveOptions options;
  options.budget = 64;
  const SupportSolveResult result = SolveWithSupportEnumeration(
      game, Concept::kAfcce, Rational(6), options);
  REQUIRE(result.feasible);
  REQUIRE(result.plan.has_value());
  CHECK(Verify(game, *result.plan, Concept::kAfcce).ok);
  CHECK(ComputeExpectedPayoffs(game, *result.plan).objective >= 6);
  CHECK(result.lp_calls >= 1);

  // An unattainable threshold exhausts the budget instead of lying.
  SupportSolveOptions tight;
  tight.budget = 25;
  const SupportSolveResult nothing = SolveWithSupportEnumeration(
      game, Concept::kAfcce, Rational(100), tight);
  CHECK(!nothing.feasible);
  CHECK(nothing.budget_exhausted);
  CHECK(nothing.lp_calls == 25);
}

}  // namespace
}  // namespace corrplan
