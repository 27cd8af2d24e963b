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

#ifndef CORRPLAN_HISTORIES_H_
#define CORRPLAN_HISTORIES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "corrplan/concept.h"
#include "corrplan/game.h"
#include "corrplan/strategy.h"

namespace corrplan {

// One per-player history per player. Honest tuples are (h_1(v), .., h_n(v))
// for a leaf v; deviation tuples replace exactly the deviating player's
// coordinate by the concept-specific form.
using HistoryTuple = std::vector<PlayerHistory>;

// Coordinate replacements, one per concept. For AFCE/AFCCE the leaf must lie
// below the infoset.
PlayerHistory EfceCoordinate(const Game& game, int infoset, int action);
PlayerHistory EfcceCoordinate(const Game& game, int infoset);
PlayerHistory AfceCoordinate(const Game& game, int infoset, int action,
                             int leaf);
PlayerHistory AfcceCoordinate(const Game& game, int infoset, int leaf);

HistoryTuple HonestTuple(const Game& game, int leaf);
HistoryTuple WithCoordinate(const Game& game, int leaf, int player,
                            PlayerHistory coordinate);

// { h(v) | v leaf }, deduplicated, in canonical order.
std::vector<HistoryTuple> HonestHistories(const Game& game);

// The concept's deviation family, deduplicated. Throws for NFCE and Nash,
// which have no polynomial family.
std::vector<HistoryTuple> DeviationHistories(const Game& game,
                                             Concept concept_kind);

struct RelevantHistories {
  std::vector<HistoryTuple> honest;
  std::vector<HistoryTuple> deviation;
  std::vector<HistoryTuple> all;  // deduplicated union, canonical order
  std::size_t size_bound = 0;     // asserted polynomial bound on |all|
};

// Honest and deviation families together with the asserted size bound.
// Throws std::logic_error if the constructed family exceeds the bound.
RelevantHistories BuildRelevantHistories(const Game& game, Concept concept_kind);

// Canonical text encoding, stable across runs, used for naming and hashing.
std::string EncodeTuple(const Game& game, const HistoryTuple& tuple);
std::uint64_t TupleHash(const Game& game, const HistoryTuple& tuple);

// z-value of a tuple under a plan: sum of plan probabilities of profiles
// consistent with every coordinate.
Rational TupleWeight(const Game& game, const CorrelationPlan& plan,
                     const HistoryTuple& tuple);

}  // namespace corrplan

#endif  // CORRPLAN_HISTORIES_H_
