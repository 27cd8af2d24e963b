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

#ifndef CORRPLAN_SUPPORT_SOLVER_H_
#define CORRPLAN_SUPPORT_SOLVER_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "corrplan/concept.h"
#include "corrplan/game.h"
#include "corrplan/linear_system.h"
#include "corrplan/simplex.h"
#include "corrplan/strategy.h"

namespace corrplan {

struct SupportSolveOptions {
  std::uint64_t budget = 10000;  // maximum number of LP solves
  std::uint64_t enumeration_cap = StrategyEnumerator::kDefaultCap;
};

struct SupportSolveResult {
  bool feasible = false;
  bool budget_exhausted = false;
  std::optional<CorrelationPlan> plan;
  std::uint64_t lp_calls = 0;
  std::uint64_t max_support_size = 0;
};

// Threshold solving by candidate-support search: supports of increasing
// size, lexicographic within a size, each posed as a constraint-system
// feasibility LP. A support of size at most |R|+1 suffices when any
// equilibrium above the threshold exists, so the search is complete within
// that size, but the number of candidate supports is worst-case exponential;
// the budget makes the cost explicit.
SupportSolveResult SolveWithSupportEnumeration(
    const Game& game, Concept concept_kind, const Rational& threshold,
    const SupportSolveOptions& options = {});

struct FixedSupportResult {
  LpOutcome outcome;
  std::optional<CorrelationPlan> plan;  // feasible outcomes
};

// One constraint-system solve over a caller-supplied support.
FixedSupportResult SolveWithSupport(const Game& game, Concept concept_kind,
                                    const std::vector<StrategyProfile>& support,
                                    SystemMode mode, const Rational& threshold);

}  // namespace corrplan

#endif  // CORRPLAN_SUPPORT_SOLVER_H_
