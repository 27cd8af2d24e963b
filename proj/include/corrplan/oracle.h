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

#ifndef CORRPLAN_ORACLE_H_
#define CORRPLAN_ORACLE_H_

#include <cstdint>
#include <optional>
#include <string>

#include "corrplan/concept.h"
#include "corrplan/game.h"
#include "corrplan/linear_system.h"
#include "corrplan/rational.h"
#include "corrplan/strategy.h"

namespace corrplan {

struct OracleOptions {
  // Cap on |Sigma|, the number of LP variables of the oracle program.
  std::uint64_t profile_cap = 100000;
};

struct OracleReport {
  Concept concept_kind = Concept::kEfce;
  SystemMode mode = SystemMode::kMaximize;
  bool feasible = false;
  std::optional<Rational> optimal_value;   // maximize mode
  std::optional<CorrelationPlan> witness;  // feasible outcomes
  std::uint64_t num_profiles = 0;
  std::size_t num_constraints = 0;
};

// The exponential baseline: materializes every pure strategy profile, poses
// the concept's incentive constraints as one LP over the plan probabilities
// (denominator-multiplied, so every constraint is linear), and answers the
// threshold or maximization query exactly. Deviation sets for EFCE/EFCCE are
// enumerated directly rather than via the bottom-up recursion, keeping this
// path independent from the constraint-system builder it cross-checks.
OracleReport OracleSolve(const Game& game, Concept concept_kind, SystemMode mode,
                         const Rational& threshold = Rational(0),
                         const OracleOptions& options = {});

std::string OracleReportToJson(const Game& game, const OracleReport& report);

}  // namespace corrplan

#endif  // CORRPLAN_ORACLE_H_
