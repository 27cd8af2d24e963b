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

#ifndef CORRPLAN_SIMPLEX_H_
#define CORRPLAN_SIMPLEX_H_

#include <map>
#include <optional>
#include <string>

#include "corrplan/linear_system.h"
#include "corrplan/rational.h"

namespace corrplan {

struct LpOutcome {
  enum class Status { kFeasible, kInfeasible, kUnbounded };
  Status status = Status::kInfeasible;
  std::map<std::string, Rational> assignment;  // feasible outcomes only
  std::optional<Rational> objective_value;     // feasible, with an objective
};

// Two-phase primal simplex over exact rationals with Bland's anti-cycling
// pivot rule on a dense tableau. Free variables are split into differences
// of nonnegatives internally. Without an objective, any feasible point is
// returned; with one, an exact optimal vertex.
LpOutcome SolveLp(const LinearSystem& system);

std::string LpOutcomeToJson(const LpOutcome& outcome);

}  // namespace corrplan

#endif  // CORRPLAN_SIMPLEX_H_
