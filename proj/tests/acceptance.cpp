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
//
// Acceptance suite: runs every criterion at its stated tolerance (all exact)
// and prints one pass/fail line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "corrplan/equilibrium.h"
#include "corrplan/io.h"
#include "corrplan/linear_system.h"
#include "corrplan/nash_etr.h"
#include "corrplan/oracle.h"
#include "corrplan/reductions.h"
#include "corrplan/simplex.h"
#include "corrplan/support_solver.h"
#include "fixtures.h"
#include "oracles.h"
#include "random_games.h"

namespace corrplan {
namespace {

using testing::RandomGame;
using testing::RandomGameOptions;
using testing::RandomPlan;
using testing::RandomProfile;

#define REQUIRE_OR_FAIL(cond)                                        \
  do {                                                               \
    if (!(cond)) {                                                   \
      *why = std::string("line ") + std::to_string(__LINE__) + ": " #cond; \
      return false;                                                  \
    }                                                                \
  } while (0)

// ---------------------------------------------------------------------------
// 1. Exact expected payoffs on the signaling fixture.
bool Criterion1(std::string* why) {
  const Game game = ParseGame(testing::kSignalingGameJson);
  const CorrelationPlan mu =
      ParsePlan(game, testing::kSignalingFourProfilePlanJson);
  const ExpectedPayoffs values = ComputeExpectedPayoffs(game, mu);
  REQUIRE_OR_FAIL(values.player_values[0] == Rational(7, 2));
  REQUIRE_OR_FAIL(values.player_values[1] == Rational(13, 2));
  REQUIRE_OR_FAIL(values.objective == 10);
  const ExpectedPayoffs reject = ComputeExpectedPayoffs(
      game, ParsePlan(game, testing::kSignalingRejectPlanJson));
  REQUIRE_OR_FAIL(reject.player_values[0] == 0);
  REQUIRE_OR_FAIL(reject.player_values[1] == 6);
  return true;
}

// ---------------------------------------------------------------------------
// 2. Concept verdicts on the signaling fixture.
bool Criterion2(std::string* why) {
  const Game game = ParseGame(testing::kSignalingGameJson);
  const CorrelationPlan mu =
      ParsePlan(game, testing::kSignalingFourProfilePlanJson);
  const CorrelationPlan reject =
      ParsePlan(game, testing::kSignalingRejectPlanJson);
  REQUIRE_OR_FAIL(Verify(game, mu, Concept::kEfce).ok);
  REQUIRE_OR_FAIL(!Verify(game, mu, Concept::kNfce).ok);
  for (Concept c : {Concept::kNash, Concept::kNfce, Concept::kEfce,
                    Concept::kEfcce, Concept::kNfcce, Concept::kAfce,
                    Concept::kAfcce}) {
    REQUIRE_OR_FAIL(Verify(game, reject, c).ok);
  }
  return true;
}

// ---------------------------------------------------------------------------
// 3. Oracle values on the signaling fixture.
bool Criterion3(std::string* why) {
  const Game game = ParseGame(testing::kSignalingGameJson);
  const OracleReport nfce =
      OracleSolve(game, Concept::kNfce, SystemMode::kMaximize);
  REQUIRE_OR_FAIL(nfce.feasible);
  REQUIRE_OR_FAIL(*nfce.optimal_value == 6);
  const OracleReport efce =
      OracleSolve(game, Concept::kEfce, SystemMode::kThreshold, Rational(10));
  REQUIRE_OR_FAIL(efce.feasible);
  return true;
}

// ---------------------------------------------------------------------------
// 4. Constraint emission around the first trigger of the three-player
// fixture: the honest-payoff row carries coefficients 1/3 on the four left
// leaves and 2/3 on the right leaf reached under the recommendation; the
// deviation branch introduces exactly one auxiliary value variable (for the
// information set R3) whose two action rows carry 2/3 and {2/3, 2/3}. The
// criterion's multiset {1/3 x4, 2/3 x4} is the union over those rows.
bool Criterion4(std::string* why) {
  const Game game = ParseGame(testing::kThreePlayerGameJson);
  const std::vector<StrategyProfile> support = {testing::ProfileFromLabels(
      game, {{"a", "c", "d"}, {"b"}, {"e"}})};
  const BuiltSystem built = BuildSystem(game, Concept::kEfce, support,
                                        SystemMode::kThreshold, Rational(0));
  const LinearSystem& sys = built.system;
  auto row = [&](const std::string& name) -> const Constraint* {
    for (const auto& c : sys.constraints()) {
      if (c.name == name) return &c;
    }
    return nullptr;
  };
  auto z_coefficients = [&](const Constraint& c) {
    std::multiset<Rational> out;
    for (const auto& [var, coef] : c.expr.terms) {
      if (sys.variable_name(var).rfind("z_", 0) == 0) {
        out.insert(coef < 0 ? Rational(-coef) : coef);
      }
    }
    return out;
  };

  const Constraint* honest = row("def_u_1_I1_a");
  const Constraint* branch = row("def_v_1_I1@a_I1_na");
  const Constraint* first = row("def_v_1_I1@a_R3_d");
  const Constraint* second = row("def_v_1_I1@a_R3_nd");
  REQUIRE_OR_FAIL(honest && branch && first && second);

  const Rational third(1, 3), two_thirds(2, 3);
  REQUIRE_OR_FAIL(z_coefficients(*honest) ==
                  std::multiset<Rational>(
                      {third, third, third, third, two_thirds}));
  // The deviation branch sums the two leaves where player 1 acts no more
  // and defers the rest to the single auxiliary variable for R3.
  REQUIRE_OR_FAIL(z_coefficients(*branch) ==
                  std::multiset<Rational>({third, two_thirds}));
  int aux_in_branch = 0;
  for (const auto& [var, coef] : branch->expr.terms) {
    if (sys.variable_name(var).rfind("v_1_I1@a_", 0) == 0 &&
        sys.variable_name(var) != "v_1_I1@a_I1_na") {
      ++aux_in_branch;
      REQUIRE_OR_FAIL(sys.variable_name(var) == "v_1_I1@a_R3");
    }
  }
  REQUIRE_OR_FAIL(aux_in_branch == 1);
  REQUIRE_OR_FAIL(z_coefficients(*first) ==
                  std::multiset<Rational>({two_thirds}));
  REQUIRE_OR_FAIL(z_coefficients(*second) ==
                  std::multiset<Rational>({two_thirds, two_thirds}));

  // Combined coefficient multiset of the printed inequalities.
  std::multiset<Rational> combined = z_coefficients(*honest);
  for (const Rational& c : z_coefficients(*first)) combined.insert(c);
  for (const Rational& c : z_coefficients(*second)) combined.insert(c);
  REQUIRE_OR_FAIL(combined ==
                  std::multiset<Rational>({third, third, third, third,
                                           two_thirds, two_thirds, two_thirds,
                                           two_thirds}));

  // The relaxations and the incentive row tie the block together.
  REQUIRE_OR_FAIL(row("relax_v_1_I1@a_R3_d") != nullptr);
  REQUIRE_OR_FAIL(row("relax_v_1_I1@a_R3_nd") != nullptr);
  const Constraint* incentive = row("inc_1_I1_a");
  REQUIRE_OR_FAIL(incentive != nullptr);
  REQUIRE_OR_FAIL(incentive->relation == Relation::kGe);
  return true;
}

// ---------------------------------------------------------------------------
// 5. Round-trip between the oracle and the constraint systems.
bool Criterion5(std::string* why) {
  std::mt19937_64 rng(55001);
  RandomGameOptions options;
  options.max_profiles = 300;
  options.max_strategies_per_player = 24;
  const Concept concepts[] = {Concept::kEfce, Concept::kEfcce,
                              Concept::kNfcce, Concept::kAfce,
                              Concept::kAfcce};
  for (int trial = 0; trial < 100; ++trial) {
    const Game game = RandomGame(rng, options);
    for (Concept c : concepts) {
      const OracleReport report =
          OracleSolve(game, c, SystemMode::kMaximize);
      REQUIRE_OR_FAIL(report.feasible);
      const Rational lambda = *report.optimal_value;
      std::vector<StrategyProfile> support;
      for (const auto& [profile, prob] : report.witness->support()) {
        support.push_back(profile);
      }
      const FixedSupportResult result =
          SolveWithSupport(game, c, support, SystemMode::kThreshold, lambda);
      REQUIRE_OR_FAIL(result.outcome.status == LpOutcome::Status::kFeasible);
      REQUIRE_OR_FAIL(result.plan.has_value());
      REQUIRE_OR_FAIL(Verify(game, *result.plan, c).ok);
      REQUIRE_OR_FAIL(ComputeExpectedPayoffs(game, *result.plan).objective >=
                      lambda);
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// 6. Inclusion chain over oracle-produced equilibria.
bool Criterion6(std::string* why) {
  std::mt19937_64 rng(66001);
  RandomGameOptions options;
  options.max_nodes = 18;
  options.max_profiles = 200;
  options.max_strategies_per_player = 8;
  auto weaker = [](Concept c) -> std::vector<Concept> {
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
  };
  int instances = 0;
  while (instances < 500) {
    const Game game = RandomGame(rng, options);
    for (Concept c : {Concept::kNfce, Concept::kNfcce, Concept::kEfce,
                      Concept::kEfcce, Concept::kAfce, Concept::kAfcce}) {
      const OracleReport report =
          OracleSolve(game, c, SystemMode::kMaximize);
      REQUIRE_OR_FAIL(report.feasible && report.witness.has_value());
      ++instances;
      for (Concept w : weaker(c)) {
        REQUIRE_OR_FAIL(Verify(game, *report.witness, w).ok);
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// 7. Recursion versus exhaustive deviation enumeration.
bool Criterion7(std::string* why) {
  std::mt19937_64 rng(77001);
  int triples = 0;
  while (triples < 500) {
    const Game game = RandomGame(rng);
    const CorrelationPlan plan = RandomPlan(rng, game, 4);
    for (int i = 1; i <= game.num_players(); ++i) {
      Trigger nfcce;
      nfcce.concept_kind = Concept::kNfcce;
      nfcce.player = i;
      REQUIRE_OR_FAIL(BestDeviationValue(game, plan, nfcce) ==
                      testing::ExhaustiveBestDeviation(game, plan, nfcce));
      ++triples;
      for (int s : game.player_infosets(i)) {
        Trigger efcce;
        efcce.concept_kind = Concept::kEfcce;
        efcce.player = i;
        efcce.infoset = s;
        REQUIRE_OR_FAIL(BestDeviationValue(game, plan, efcce) ==
                        testing::ExhaustiveBestDeviation(game, plan, efcce));
        ++triples;
        for (int a = 0;
             a < static_cast<int>(game.infoset(s).actions.size()); ++a) {
          Trigger efce;
          efce.concept_kind = Concept::kEfce;
          efce.player = i;
          efce.infoset = s;
          efce.action = a;
          REQUIRE_OR_FAIL(BestDeviationValue(game, plan, efce) ==
                          testing::ExhaustiveBestDeviation(game, plan, efce));
          ++triples;
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// 8. Quantified-formula reduction end to end at one pair: every matrix with
// at most six contradiction-free terms over {x1, y1}.
bool Criterion8(std::string* why) {
  // The eight contradiction-free terms over two variables.
  const std::vector<std::vector<int>> all_terms = {
      {1}, {-1}, {2}, {-2}, {1, 2}, {1, -2}, {-1, 2}, {-1, -2}};
  auto formula_true = [](const QbfFormula& formula) {
    for (bool x : {false, true}) {
      bool holds = true;
      for (bool y : {false, true}) {
        if (!MatrixSatisfied(formula, {x, y})) holds = false;
      }
      if (holds) return true;
    }
    return false;
  };

  int checked = 0;
  for (int mask = 1; mask < (1 << 8); ++mask) {
    if (__builtin_popcount(mask) > 6) continue;
    QbfFormula formula;
    formula.variables = {"x1", "y1"};
    for (int t = 0; t < 8; ++t) {
      if (mask & (1 << t)) formula.terms.push_back(all_terms[t]);
    }
    ++checked;
    const bool truth = formula_true(formula);
    const Game game = ReduceQbf(formula);
    const OracleReport report =
        OracleSolve(game, Concept::kNfce, SystemMode::kMaximize);
    REQUIRE_OR_FAIL(report.feasible);
    REQUIRE_OR_FAIL((*report.optimal_value == 3) == truth);

    if (truth) {
      bool witness_value = false;
      for (bool x : {false, true}) {
        bool holds = true;
        for (bool y : {false, true}) {
          if (!MatrixSatisfied(formula, {x, y})) holds = false;
        }
        if (!holds) continue;
        const CorrelationPlan plan =
            QbfProofPlan(game, formula, {{x, true}, {x, false}});
        REQUIRE_OR_FAIL(Verify(game, plan, Concept::kNfce).ok);
        REQUIRE_OR_FAIL(ComputeExpectedPayoffs(game, plan).objective == 3);
        witness_value = true;
        break;
      }
      REQUIRE_OR_FAIL(witness_value);
    }

    // Dirac plans: objective 3 exactly on good profiles, otherwise at most
    // 3 - 1/(2n(n+1)) = 3 - 1/4.
    const ProfileEnumerator profiles(game, 1000);
    for (std::uint64_t k = 0; k < profiles.count(); ++k) {
      const StrategyProfile profile = profiles.at(k);
      const Rational value =
          ComputeExpectedPayoffs(game, CorrelationPlan::Dirac(profile))
              .objective;
      if (testing::IsGoodQbfProfile(game, formula, profile)) {
        REQUIRE_OR_FAIL(value == 3);
      } else {
        REQUIRE_OR_FAIL(value <= Rational(3) - Rational(1, 4));
      }
    }
  }
  REQUIRE_OR_FAIL(checked == 246);
  return true;
}

// ---------------------------------------------------------------------------
// 9. Clause-game reduction end to end: all CNFs with at most four clauses
// over at most three variables, enumerated up to variable renaming and
// polarity flips (which relabel actions only, preserving satisfiability and
// the optimal welfare). Invariance itself is spot-checked on sampled orbits.
namespace clause_family {

// A clause is a nonzero trit vector over three variables:
// 0 absent, 1 positive, 2 negative. 26 clauses in total.
int TransformClause(int code, const int perm[3], int flips) {
  int trits[3] = {code % 3, (code / 3) % 3, (code / 9) % 3};
  int out[3] = {0, 0, 0};
  for (int v = 0; v < 3; ++v) {
    int t = trits[v];
    if (t != 0 && (flips & (1 << v))) t = 3 - t;
    out[perm[v]] = t;
  }
  return out[0] + 3 * out[1] + 9 * out[2];
}

std::vector<int> Canonical(const std::vector<int>& clauses,
                           const std::vector<std::array<int, 3>>& perms) {
  std::vector<int> best = clauses;
  for (const auto& perm : perms) {
    for (int flips = 0; flips < 8; ++flips) {
      std::vector<int> mapped;
      for (int code : clauses) {
        mapped.push_back(TransformClause(code, perm.data(), flips));
      }
      std::sort(mapped.begin(), mapped.end());
      if (mapped < best) best = mapped;
    }
  }
  return best;
}

CnfFormula Build(const std::vector<int>& clauses) {
  CnfFormula formula;
  formula.variables = {"x1", "x2", "x3"};
  for (int code : clauses) {
    std::vector<int> clause;
    for (int v = 0; v < 3; ++v) {
      const int t = (code / (v == 0 ? 1 : v == 1 ? 3 : 9)) % 3;
      if (t == 1) clause.push_back(v + 1);
      if (t == 2) clause.push_back(-(v + 1));
    }
    formula.clauses.push_back(std::move(clause));
  }
  return formula;
}

}  // namespace clause_family

bool Criterion9(std::string* why) {
  using clause_family::Build;
  using clause_family::Canonical;
  std::vector<std::array<int, 3>> perms;
  {
    std::array<int, 3> p = {0, 1, 2};
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  // All clause subsets of size 1..4.
  std::vector<std::vector<int>> formulas;
  std::vector<int> codes;
  for (int c = 1; c < 27; ++c) codes.push_back(c);
  std::vector<int> pick;
  std::function<void(std::size_t)> enumerate = [&](std::size_t from) {
    if (!pick.empty() && pick.size() <= 4) formulas.push_back(pick);
    if (pick.size() == 4) return;
    for (std::size_t k = from; k < codes.size(); ++k) {
      pick.push_back(codes[k]);
      enumerate(k + 1);
      pick.pop_back();
    }
  };
  enumerate(0);
  REQUIRE_OR_FAIL(formulas.size() == 17901);

  std::mt19937_64 rng(99001);
  int representatives = 0;
  int sat_count = 0;
  for (const auto& clauses : formulas) {
    if (Canonical(clauses, perms) != clauses) continue;
    ++representatives;
    const CnfFormula formula = Build(clauses);
    bool satisfiable = false;
    std::vector<CnfAssignment> models;
    for (int bits = 0; bits < 8; ++bits) {
      const CnfAssignment theta = {(bits & 1) != 0, (bits & 2) != 0,
                                   (bits & 4) != 0};
      if (SatisfiesCnf(formula, theta)) {
        satisfiable = true;
        models.push_back(theta);
      }
    }
    sat_count += satisfiable;
    const Game game = ReduceSat3(formula);
    for (int leaf : game.leaves()) {
      REQUIRE_OR_FAIL(game.LeafObjective(leaf) <= 1);
    }
    // Optimal welfare is 1 exactly on satisfiable formulas; the leaf bound
    // caps it at 1 everywhere. The threshold query must agree.
    for (Concept c : {Concept::kAfce, Concept::kAfcce}) {
      const OracleReport best = OracleSolve(game, c, SystemMode::kMaximize);
      REQUIRE_OR_FAIL(best.feasible);
      REQUIRE_OR_FAIL(*best.optimal_value <= 1);
      REQUIRE_OR_FAIL((*best.optimal_value == 1) == satisfiable);
      if (representatives % 4 == 0) {
        const OracleReport report =
            OracleSolve(game, c, SystemMode::kThreshold, Rational(1));
        REQUIRE_OR_FAIL(report.feasible == satisfiable);
      }
    }
    for (const CnfAssignment& theta : models) {
      const CorrelationPlan plan = SatPlan(game, formula, theta);
      REQUIRE_OR_FAIL(Verify(game, plan, Concept::kAfce).ok);
      REQUIRE_OR_FAIL(Verify(game, plan, Concept::kAfcce).ok);
      REQUIRE_OR_FAIL(ComputeExpectedPayoffs(game, plan).objective == 1);
    }
    // Spot-check the symmetry argument: a random relabeling of the formula
    // answers the threshold query identically.
    if (representatives % 50 == 0) {
      const auto& perm = perms[rng() % perms.size()];
      const int flips = static_cast<int>(rng() % 8);
      std::vector<int> mapped;
      for (int code : clauses) {
        mapped.push_back(
            clause_family::TransformClause(code, perm.data(), flips));
      }
      std::sort(mapped.begin(), mapped.end());
      mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
      const CnfFormula twin = Build(mapped);
      const Game twin_game = ReduceSat3(twin);
      const OracleReport twin_report = OracleSolve(
          twin_game, Concept::kAfce, SystemMode::kThreshold, Rational(1));
      REQUIRE_OR_FAIL(twin_report.feasible == satisfiable);
    }
  }
  REQUIRE_OR_FAIL(representatives >= 300);
  REQUIRE_OR_FAIL(sat_count > 0);
  return true;
}

// ---------------------------------------------------------------------------
// 10. Relevant-history bounds.
bool Criterion10(std::string* why) {
  std::mt19937_64 rng(101001);
  const Concept concepts[] = {Concept::kEfce, Concept::kEfcce,
                              Concept::kNfcce, Concept::kAfce,
                              Concept::kAfcce};
  for (int trial = 0; trial < 1000; ++trial) {
    const Game game = RandomGame(rng);
    for (Concept c : concepts) {
      // The builder throws when a family exceeds its polynomial bound.
      const RelevantHistories r = BuildRelevantHistories(game, c);
      REQUIRE_OR_FAIL(r.all.size() <= r.size_bound);
    }
  }
  // The chain of single-node players: pairwise-relevant combinations grow
  // as 3^n while the per-concept families stay within the stated bounds.
  const int n = 10;
  const Game chain = testing::ChainGame(n);
  boost::multiprecision::mpz_int pairwise = 1;
  for (int i = 0; i < n; ++i) pairwise *= 3;
  for (Concept c : concepts) {
    const RelevantHistories r = BuildRelevantHistories(chain, c);
    REQUIRE_OR_FAIL(r.all.size() <= r.size_bound);
    REQUIRE_OR_FAIL(Rational(static_cast<long>(r.all.size())) <
                    Rational(pairwise));
  }
  return true;
}

// ---------------------------------------------------------------------------
// 11. Nash checker values and agreement with the pure verifier.
bool Criterion11(std::string* why) {
  const Game game = ParseGame(testing::kSignalingGameJson);
  const BehavioralProfile reject =
      FromPureProfile(game, testing::ProfileFromLabels(
                                game, {{"G_S", "G_W"}, {"R_E", "R_G"}}));
  REQUIRE_OR_FAIL(CheckBehavioral(game, reject, Rational(6)).ok);
  const BehavioralProfile accept =
      FromPureProfile(game, testing::ProfileFromLabels(
                                game, {{"E_S", "E_W"}, {"A_E", "A_G"}}));
  const Verdict verdict = CheckBehavioral(game, accept, Rational(0));
  REQUIRE_OR_FAIL(!verdict.ok);
  REQUIRE_OR_FAIL(verdict.witness->honest_value == 5);
  REQUIRE_OR_FAIL(verdict.witness->deviation_value == 6);

  std::mt19937_64 rng(111001);
  for (int trial = 0; trial < 200; ++trial) {
    const Game random_game = RandomGame(rng);
    const StrategyProfile profile = RandomProfile(rng, random_game);
    const Verdict via_plan = Verify(
        random_game, CorrelationPlan::Dirac(profile), Concept::kNash);
    const Verdict via_behavioral =
        CheckBehavioral(random_game, FromPureProfile(random_game, profile),
                        Rational(-1000000));
    REQUIRE_OR_FAIL(via_plan.ok == via_behavioral.ok);
  }
  return true;
}

// ---------------------------------------------------------------------------
// 12. Exact-LP self-test.
bool Criterion12(std::string* why) {
  std::mt19937_64 rng(121001);
  auto coef = [&rng]() { return Rational(static_cast<int>(rng() % 11) - 5); };
  int solved = 0;
  while (solved < 500) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int m = 2 + static_cast<int>(rng() % 6);
    const bool make_infeasible = solved % 2 == 1;
    LinearSystem sys;
    std::vector<Rational> point;
    for (int j = 0; j < n; ++j) {
      const bool nonneg = rng() % 2 == 0;
      sys.AddVariable("v" + std::to_string(j), nonneg);
      Rational value = coef();
      if (nonneg && value < 0) value = -value;
      point.push_back(value);
    }
    for (int r = 0; r < m; ++r) {
      LinearExpr expr;
      Rational at_point(0);
      for (int j = 0; j < n; ++j) {
        const Rational c = coef();
        expr.Add(j, c);
        at_point += c * point[j];
      }
      Constraint row;
      row.name = "r" + std::to_string(r);
      row.expr = expr;
      const int rel = static_cast<int>(rng() % 3);
      if (rel == 0) {
        row.relation = Relation::kLe;
        row.rhs = at_point + static_cast<int>(rng() % 3);
      } else if (rel == 1) {
        row.relation = Relation::kGe;
        row.rhs = at_point - static_cast<int>(rng() % 3);
      } else {
        row.relation = Relation::kEq;
        row.rhs = at_point;
      }
      sys.AddConstraint(std::move(row));
    }
    if (make_infeasible) {
      LinearExpr expr;
      for (int j = 0; j < n; ++j) expr.Add(j, coef());
      Constraint lo, hi;
      lo.name = "cut_lo";
      lo.expr = expr;
      lo.relation = Relation::kGe;
      lo.rhs = 1;
      hi.name = "cut_hi";
      hi.expr = expr;
      hi.relation = Relation::kLe;
      hi.rhs = 0;
      sys.AddConstraint(std::move(lo));
      sys.AddConstraint(std::move(hi));
      REQUIRE_OR_FAIL(SolveLp(sys).status == LpOutcome::Status::kInfeasible);
    } else {
      const LpOutcome out = SolveLp(sys);
      REQUIRE_OR_FAIL(out.status == LpOutcome::Status::kFeasible);
      REQUIRE_OR_FAIL(sys.Satisfies(out.assignment));
      // Bounded objective: distance-like row keeps the region compact only
      // sometimes, so check permutation invariance instead of boundedness.
      LinearExpr objective;
      for (int j = 0; j < n; ++j) objective.Add(j, coef());
      LinearSystem permuted;
      for (int j = 0; j < n; ++j) {
        permuted.AddVariable(sys.variable_name(j), sys.nonnegative(j));
      }
      std::vector<Constraint> rows = sys.constraints();
      std::shuffle(rows.begin(), rows.end(), rng);
      for (const auto& row : rows) permuted.AddConstraint(row);
      sys.SetObjective(objective);
      permuted.SetObjective(objective);
      const LpOutcome a = SolveLp(sys);
      const LpOutcome b = SolveLp(permuted);
      REQUIRE_OR_FAIL(a.status == b.status);
      if (a.status == LpOutcome::Status::kFeasible) {
        REQUIRE_OR_FAIL(*a.objective_value == *b.objective_value);
        REQUIRE_OR_FAIL(sys.Satisfies(a.assignment));
      }
    }
    ++solved;
  }
  return true;
}

struct CriterionSpec {
  int number;
  const char* label;
  double limit_seconds;
  std::function<bool(std::string*)> run;
};

}  // namespace
}  // namespace corrplan

int main() {
  using namespace corrplan;
  const CriterionSpec criteria[] = {
      {1, "signaling fixture exact expected payoffs", 1.0, Criterion1},
      {2, "signaling fixture concept verdicts", 1.0, Criterion2},
      {3, "signaling fixture oracle values", 30.0, Criterion3},
      {4, "three-player trigger block constraint emission", 1.0, Criterion4},
      {5, "oracle/system round-trip per concept (100 games x 5)", 600.0,
       Criterion5},
      {6, "inclusion chain on oracle equilibria (500 instances)", 600.0,
       Criterion6},
      {7, "recursion vs exhaustive deviations (500 triples)", 300.0,
       Criterion7},
      {8, "quantified-formula reduction, all 246 one-pair matrices", 900.0,
       Criterion8},
      {9, "clause-game reduction, all small CNFs up to symmetry", 900.0,
       Criterion9},
      {10, "relevant-history bounds (1000 games + chain)", 60.0, Criterion10},
      {11, "behavioral Nash checks and pure agreement (200 games)", 120.0,
       Criterion11},
      {12, "exact-LP self-test (500 systems)", 120.0, Criterion12},
  };
  bool all_ok = true;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
      ok = criterion.run(&why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && seconds > criterion.limit_seconds) {
      ok = false;
      why = "time limit exceeded";
    }
    all_ok = all_ok && ok;
    std::printf("[%s] criterion %2d: %s (%.2fs, limit %.0fs)%s%s\n",
                ok ? "PASS" : "FAIL", criterion.number, criterion.label,
                seconds, criterion.limit_seconds, why.empty() ? "" : " -- ",
                why.c_str());
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}
