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

#include "corrplan/support_solver.h"

#include <algorithm>

namespace corrplan {

FixedSupportResult SolveWithSupport(const Game& game, Concept concept_kind,
                                    const std::vector<StrategyProfile>& support,
                                    SystemMode mode,
                                    const Rational& threshold) {
  const BuiltSystem built =
      BuildSystem(game, concept_kind, support, mode, threshold);
  FixedSupportResult result;
  result.outcome = SolveLp(built.system);
  if (result.outcome.status == LpOutcome::Status::kFeasible) {
    result.plan = ExtractPlan(game, built, result.outcome.assignment);
  }
  return result;
}

SupportSolveResult SolveWithSupportEnumeration(
    const Game& game, Concept concept_kind, const Rational& threshold,
    const SupportSolveOptions& options) {
  SupportSolveResult result;
  const ProfileEnumerator profiles(game, options.enumeration_cap);
  const RelevantHistories histories = BuildRelevantHistories(game, concept_kind);
  result.max_support_size =
      std::min<std::uint64_t>(histories.all.size() + 1, profiles.count());

  std::vector<std::uint64_t> indices;
  for (std::uint64_t size = 1; size <= result.max_support_size; ++size) {
    // First combination of this size.
    indices.resize(size);
    for (std::uint64_t j = 0; j < size; ++j) indices[j] = j;
    while (true) {
      if (result.lp_calls >= options.budget) {
        result.budget_exhausted = true;
        return result;
      }
      std::vector<StrategyProfile> support;
      support.reserve(size);
      for (std::uint64_t j : indices) support.push_back(profiles.at(j));
      ++result.lp_calls;
      const FixedSupportResult attempt = SolveWithSupport(
          game, concept_kind, support, SystemMode::kThreshold, threshold);
      if (attempt.outcome.status == LpOutcome::Status::kFeasible) {
        result.feasible = true;
        result.plan = attempt.plan;
        return result;
      }
      // Next combination in lexicographic order.
      std::int64_t pos = static_cast<std::int64_t>(size) - 1;
      while (pos >= 0 &&
             indices[pos] == profiles.count() - size + pos) {
        --pos;
      }
      if (pos < 0) break;
      ++indices[pos];
      for (std::uint64_t j = pos + 1; j < size; ++j) {
        indices[j] = indices[j - 1] + 1;
      }
    }
  }
  return result;
}

}  // namespace corrplan
