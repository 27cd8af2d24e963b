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

#ifndef CORRPLAN_LINEAR_SYSTEM_H_
#define CORRPLAN_LINEAR_SYSTEM_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "corrplan/concept.h"
#include "corrplan/game.h"
#include "corrplan/histories.h"
#include "corrplan/rational.h"
#include "corrplan/strategy.h"

namespace corrplan {

enum class Relation { kLe, kEq, kGe };

// Sparse linear form over declared variables.
struct LinearExpr {
  std::map<int, Rational> terms;

  void Add(int var, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms.emplace(var, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) terms.erase(it);
    }
  }
};

struct Constraint {
  std::string name;
  LinearExpr expr;
  Relation relation = Relation::kEq;
  Rational rhs;
};

// Exact-rational constraint system with named variables and an optional
// linear objective (always a maximization).
class LinearSystem {
 public:
  int AddVariable(const std::string& name, bool nonnegative = false);
  int VariableIndex(const std::string& name) const;
  bool HasVariable(const std::string& name) const;
  int num_variables() const { return static_cast<int>(names_.size()); }
  const std::string& variable_name(int var) const { return names_[var]; }
  bool nonnegative(int var) const { return nonnegative_[var]; }

  void AddConstraint(Constraint constraint);
  const std::vector<Constraint>& constraints() const { return constraints_; }

  void SetObjective(LinearExpr objective) { objective_ = std::move(objective); }
  const std::optional<LinearExpr>& objective() const { return objective_; }

  // Exact check that an assignment satisfies every constraint. Missing
  // variables count as zero.
  bool Satisfies(const std::map<std::string, Rational>& assignment) const;
  Rational Evaluate(const LinearExpr& expr,
                    const std::map<std::string, Rational>& assignment) const;

  // One line per constraint: `<name>: c*v + ... <rel> rhs`, rationals as
  // p/q. The header lists variables and the optional maximize row.
  // Byte-identical across runs for identical systems.
  std::string ExportText() const;

 private:
  std::vector<std::string> names_;
  std::vector<bool> nonnegative_;
  std::map<std::string, int> index_;
  std::vector<Constraint> constraints_;
  std::optional<LinearExpr> objective_;
};

enum class SystemMode { kThreshold, kMaximize };

// The constraint system over a candidate support for one of the five
// concepts with a polynomial relevant-history family.
struct BuiltSystem {
  LinearSystem system;
  std::vector<StrategyProfile> support;  // x_<k> corresponds to support[k]
  RelevantHistories histories;
  std::size_t count_bound = 0;  // asserted bound on variables + constraints
};

// Emits, in order: 0 <= x_k <= 1, sum x_k = 1, the z-variable definitions
// over the concept's relevant histories, the honest-payoff equalities, the
// best-deviation equalities with their relaxation inequalities, the
// incentive inequalities, and the threshold row (threshold mode) or the
// objective (maximize mode). Throws for NFCE and Nash.
BuiltSystem BuildSystem(const Game& game, Concept concept_kind,
                        const std::vector<StrategyProfile>& support,
                        SystemMode mode, const Rational& threshold = Rational(0));

// Reads the x_k values out of a satisfying assignment, drops zeros, and
// returns the correlation plan. Throws std::logic_error when the x-block
// does not describe a distribution.
CorrelationPlan ExtractPlan(const Game& game, const BuiltSystem& built,
                            const std::map<std::string, Rational>& assignment);

}  // namespace corrplan

#endif  // CORRPLAN_LINEAR_SYSTEM_H_
