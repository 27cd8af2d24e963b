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

#ifndef CORRPLAN_EQUILIBRIUM_H_
#define CORRPLAN_EQUILIBRIUM_H_

#include <cstdint>
#include <optional>
#include <string>

#include "corrplan/concept.h"
#include "corrplan/game.h"
#include "corrplan/histories.h"
#include "corrplan/strategy.h"

namespace corrplan {

// Conditioning events of the incentive constraints. Probabilities are
// handled unnormalized: callers work with numerator and denominator
// separately, and a zero denominator simply makes a constraint vacuous.
struct ConditionalEvent {
  enum class Kind {
    kRecommendedStrategy,  // player i was recommended strategy alpha
    kReachInfoset,         // player reaches infoset I
    kReachInfosetAction,   // player reaches I and is recommended a there
  };
  Kind kind = Kind::kReachInfoset;
  int player = 0;       // kRecommendedStrategy only
  PureStrategy alpha;   // kRecommendedStrategy only
  int infoset = -1;     // reach variants
  int action = -1;      // kReachInfosetAction: recommended action ordinal
};

// Numerator of P(draw profile, reach leaf | event), scaled by the event's
// denominator.
Rational ConditionalNumerator(const Game& game, const CorrelationPlan& plan,
                              const ConditionalEvent& event,
                              const StrategyProfile& profile, int leaf);
Rational ConditionalDenominator(const Game& game, const CorrelationPlan& plan,
                                const ConditionalEvent& event);

// Deviation triggers, one shape per concept.
struct Trigger {
  Concept concept_kind = Concept::kEfce;
  int player = 0;
  int infoset = -1;     // EFCE, EFCCE, AFCE, AFCCE
  int action = -1;      // EFCE, AFCE: recommended action ordinal
  int deviate_to = -1;  // AFCE, AFCCE: the single-swap action ordinal
  PureStrategy alpha;   // NFCE: recommended strategy
};

// Denominator-scaled expected payoff of the trigger's player when everyone
// follows recommendations, conditioned on the trigger's event.
Rational HonestValue(const Game& game, const CorrelationPlan& plan,
                     const Trigger& trigger);

// Denominator-scaled best deviation payoff: the recursion over the player's
// remaining information sets for EFCE/EFCCE/NFCCE, the single-swap sum for
// AFCE/AFCCE, and capped enumeration over full strategies for NFCE and Nash.
// When beta_out is non-null it receives a maximizing deviation.
Rational BestDeviationValue(
    const Game& game, const CorrelationPlan& plan, const Trigger& trigger,
    PartialStrategy* beta_out = nullptr,
    std::uint64_t cap = StrategyEnumerator::kDefaultCap);

struct Witness {
  int player = 0;
  std::string event;       // rendered conditioning event
  std::string deviation;   // rendered deviation strategy
  Trigger trigger;         // structured event, replayable
  PartialStrategy beta;    // structured deviation
  Rational honest_value;   // denominator-scaled
  Rational deviation_value;
};

struct Verdict {
  bool ok = true;
  std::optional<Witness> witness;
};

struct VerifyOptions {
  std::uint64_t cap = StrategyEnumerator::kDefaultCap;
};

// Checks every incentive inequality of the concept, multiplied through by
// denominators. The witness is the first failing constraint in deterministic
// order: players ascending, information sets lexicographic, actions
// lexicographic. Nash verification requires a Dirac plan.
Verdict Verify(const Game& game, const CorrelationPlan& plan, Concept concept_kind,
               const VerifyOptions& options = {});

std::string VerdictToJson(const Verdict& verdict);

}  // namespace corrplan

#endif  // CORRPLAN_EQUILIBRIUM_H_
