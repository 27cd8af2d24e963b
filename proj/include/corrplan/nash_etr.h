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

#ifndef CORRPLAN_NASH_ETR_H_
#define CORRPLAN_NASH_ETR_H_

#include <string>
#include <vector>

#include "corrplan/equilibrium.h"
#include "corrplan/game.h"
#include "corrplan/rational.h"

namespace corrplan {

// A rational distribution over actions at every information set.
// probs[player-1][infoset ordinal][action ordinal].
struct BehavioralProfile {
  std::vector<std::vector<std::vector<Rational>>> probs;
};

// Document: {"<player>": {"<infoset>": {"<action>": "p/q", ...}, ...}, ...}.
// Missing actions get probability zero; every distribution must sum to one.
BehavioralProfile ParseBehavioral(const Game& game,
                                  const std::string& json_text);
std::string SerializeBehavioral(const Game& game,
                                const BehavioralProfile& profile);

// Deterministic behavioral profile induced by a pure profile.
BehavioralProfile FromPureProfile(const Game& game,
                                  const StrategyProfile& profile);

struct EtrSystem {
  std::string text;  // nonlinear real arithmetic, declare/assert blocks
  int num_x_variables = 0;
  int num_payoff_variables = 0;
  int num_w_variables = 0;
  int num_assertions = 0;
  int max_degree = 0;  // largest monomial degree
};

// Polynomial constraint system whose solutions are exactly the behavioral
// Nash equilibria with objective value at least lambda: simplex constraints
// per information set, the expected-payoff polynomials, the bottom-up
// best-response inequalities, the incentive constraints, and the threshold
// row. The system is emitted, not solved.
EtrSystem EmitEtr(const Game& game, const Rational& lambda);

// Substitutes the candidate into the system's variables: computes each U_i
// exactly, computes each player's exact best-response value by backward
// induction, and accepts iff the candidate is a Nash equilibrium with
// objective value at least lambda.
Verdict CheckBehavioral(const Game& game, const BehavioralProfile& candidate,
                        const Rational& lambda);

}  // namespace corrplan

#endif  // CORRPLAN_NASH_ETR_H_
