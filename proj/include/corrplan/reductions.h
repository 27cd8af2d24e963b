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

#ifndef CORRPLAN_REDUCTIONS_H_
#define CORRPLAN_REDUCTIONS_H_

#include <string>
#include <vector>

#include "corrplan/game.h"
#include "corrplan/strategy.h"

namespace corrplan {

// Quantified boolean formula in prenex form with a strictly alternating
// prefix: exists x_1 forall y_1 ... exists x_n forall y_n, followed by a
// disjunction of terms (conjunctions of literals).
struct QbfFormula {
  // Quantification order; entry 2i is existential x_{i+1}, entry 2i+1 is
  // universal y_{i+1}.
  std::vector<std::string> variables;
  // A literal is +-(index+1) into `variables`.
  std::vector<std::vector<int>> terms;

  int pairs() const { return static_cast<int>(variables.size()) / 2; }
};

// Text format: lines `exists <var>` / `forall <var>`, then `term <lit>...`
// lines with literals `<var>` or `-<var>`. Blank lines and lines starting
// with '#' are skipped. When `pad` is set, fresh unused existential
// variables are inserted before unmatched universal quantifiers to restore
// alternation; prefixes that would need extra universals stay errors.
QbfFormula ParseQbf(const std::string& text, bool pad);

// An assignment in quantification order.
using QbfAssignment = std::vector<bool>;

bool TermSatisfied(const QbfFormula& formula, int term,
                   const QbfAssignment& assignment);
bool MatrixSatisfied(const QbfFormula& formula,
                     const QbfAssignment& assignment);

// The hardness game for the formula: one assignment player, one formula
// player, and one universal player per forall variable. Players are ordered
// (1: assignment, 2: formula, 3..n+2: universal players). The objective is
// social welfare.
Game ReduceQbf(const QbfFormula& formula);

// The uniform plan over the good strategy profiles induced by a minimal
// explicit proof: a set of satisfying assignments branching both ways at
// every universal variable and exactly one way at every existential one.
// `game` must be ReduceQbf(formula). Throws when the proof check fails.
CorrelationPlan QbfProofPlan(const Game& game, const QbfFormula& formula,
                             const std::vector<QbfAssignment>& proof);

// CNF formula; clauses are nonempty lists of literals +-(index+1).
// Clause arity is unrestricted.
struct CnfFormula {
  std::vector<std::string> variables;
  std::vector<std::vector<int>> clauses;
};

CnfFormula ParseDimacs(const std::string& text);

using CnfAssignment = std::vector<bool>;

bool SatisfiesCnf(const CnfFormula& formula, const CnfAssignment& assignment);

// The two-player chance-free hardness game: a perfect-information spoiler
// (player 1) picks a clause or ends the game; the formula player (player 2)
// values each variable under imperfect information. Every leaf has social
// welfare 0 or 1.
Game ReduceSat3(const CnfFormula& formula);

// Dirac plan on the pure profile induced by a satisfying assignment:
// spoiler ends at the root and answers each clause with a literal satisfied
// by theta; the formula player plays theta. `game` must be
// ReduceSat3(formula). Throws when theta does not satisfy the formula.
CorrelationPlan SatPlan(const Game& game, const CnfFormula& formula,
                        const CnfAssignment& theta);

// Literal rendering shared by both generators: `<var>` / `not_<var>`.
std::string LiteralLabel(const std::string& variable, bool positive);

}  // namespace corrplan

#endif  // CORRPLAN_REDUCTIONS_H_
