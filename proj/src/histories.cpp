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

#include "corrplan/histories.h"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace corrplan {
namespace {

// Position of the (infoset, action) entry for `infoset` in the history, or
// -1 when the history does not pass through it.
int EntryPosition(const PlayerHistory& h, int infoset) {
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k].first == infoset) return static_cast<int>(k);
  }
  return -1;
}

std::vector<HistoryTuple> Sorted(std::set<HistoryTuple> tuples) {
  return std::vector<HistoryTuple>(tuples.begin(), tuples.end());
}

}  // namespace

PlayerHistory EfceCoordinate(const Game& game, int infoset, int action) {
  PlayerHistory h = game.infoset(infoset).history;
  h.emplace_back(infoset, action);
  return h;
}

PlayerHistory EfcceCoordinate(const Game& game, int infoset) {
  return game.infoset(infoset).history;
}

PlayerHistory AfceCoordinate(const Game& game, int infoset, int action,
                             int leaf) {
  const int player = game.infoset(infoset).player;
  PlayerHistory h = game.History(leaf, player);
  const int pos = EntryPosition(h, infoset);
  if (pos < 0) {
    throw std::invalid_argument("leaf '" + game.node(leaf).id +
                                "' is not below information set '" +
                                game.infoset(infoset).id + "'");
  }
  h[pos].second = action;
  return h;
}

PlayerHistory AfcceCoordinate(const Game& game, int infoset, int leaf) {
  const int player = game.infoset(infoset).player;
  const PlayerHistory& full = game.History(leaf, player);
  const int pos = EntryPosition(full, infoset);
  if (pos < 0) {
    throw std::invalid_argument("leaf '" + game.node(leaf).id +
                                "' is not below information set '" +
                                game.infoset(infoset).id + "'");
  }
  PlayerHistory h;
  h.reserve(full.size() - 1);
  for (std::size_t k = 0; k < full.size(); ++k) {
    if (static_cast<int>(k) != pos) h.push_back(full[k]);
  }
  return h;
}

HistoryTuple HonestTuple(const Game& game, int leaf) {
  HistoryTuple tuple;
  tuple.reserve(game.num_players());
  for (int i = 1; i <= game.num_players(); ++i) {
    tuple.push_back(game.History(leaf, i));
  }
  return tuple;
}

HistoryTuple WithCoordinate(const Game& game, int leaf, int player,
                            PlayerHistory coordinate) {
  HistoryTuple tuple = HonestTuple(game, leaf);
  tuple[player - 1] = std::move(coordinate);
  return tuple;
}

std::vector<HistoryTuple> HonestHistories(const Game& game) {
  std::set<HistoryTuple> tuples;
  for (int leaf : game.leaves()) tuples.insert(HonestTuple(game, leaf));
  return Sorted(std::move(tuples));
}

std::vector<HistoryTuple> DeviationHistories(const Game& game,
                                             Concept concept_kind) {
  if (!HasLinearSystem(concept_kind)) {
    throw std::invalid_argument(
        "no polynomial deviation-history family exists for " +
        ConceptName(concept_kind));
  }
  std::set<HistoryTuple> tuples;
  for (int i = 1; i <= game.num_players(); ++i) {
    for (int leaf : game.leaves()) {
      switch (concept_kind) {
        case Concept::kNfcce:
          tuples.insert(WithCoordinate(game, leaf, i, PlayerHistory{}));
          break;
        case Concept::kEfce:
          for (int s : game.player_infosets(i)) {
            const int num_actions =
                static_cast<int>(game.infoset(s).actions.size());
            for (int a = 0; a < num_actions; ++a) {
              tuples.insert(
                  WithCoordinate(game, leaf, i, EfceCoordinate(game, s, a)));
            }
          }
          break;
        case Concept::kEfcce:
          for (int s : game.player_infosets(i)) {
            tuples.insert(
                WithCoordinate(game, leaf, i, EfcceCoordinate(game, s)));
          }
          break;
        case Concept::kAfce:
          for (int s : game.player_infosets(i)) {
            if (!game.NodeBelow(leaf, s)) continue;
            const int num_actions =
                static_cast<int>(game.infoset(s).actions.size());
            for (int a = 0; a < num_actions; ++a) {
              tuples.insert(WithCoordinate(game, leaf, i,
                                           AfceCoordinate(game, s, a, leaf)));
            }
          }
          break;
        case Concept::kAfcce:
          for (int s : game.player_infosets(i)) {
            if (!game.NodeBelow(leaf, s)) continue;
            tuples.insert(
                WithCoordinate(game, leaf, i, AfcceCoordinate(game, s, leaf)));
          }
          break;
        default:
          break;
      }
    }
  }
  return Sorted(std::move(tuples));
}

RelevantHistories BuildRelevantHistories(const Game& game, Concept concept_kind) {
  RelevantHistories result;
  result.honest = HonestHistories(game);
  result.deviation = DeviationHistories(game, concept_kind);
  std::set<HistoryTuple> all(result.honest.begin(), result.honest.end());
  all.insert(result.deviation.begin(), result.deviation.end());
  result.all = Sorted(std::move(all));

  const std::size_t n = game.num_players();
  const std::size_t num_infosets = game.num_infosets();
  const std::size_t num_leaves = game.leaves().size();
  const std::size_t max_actions = game.max_actions();
  switch (concept_kind) {
    case Concept::kEfce:
    case Concept::kAfce:
      result.size_bound =
          n * num_infosets * num_leaves * max_actions + num_leaves;
      break;
    case Concept::kEfcce:
    case Concept::kAfcce:
      result.size_bound = n * num_infosets * num_leaves + num_leaves;
      break;
    case Concept::kNfcce:
      result.size_bound = n * num_leaves + num_leaves;
      break;
    default:
      result.size_bound = 0;
      break;
  }
  if (result.all.size() > result.size_bound) {
    throw std::logic_error("relevant-history family of size " +
                           std::to_string(result.all.size()) +
                           " exceeds its bound " +
                           std::to_string(result.size_bound));
  }
  return result;
}

std::string EncodeTuple(const Game& game, const HistoryTuple& tuple) {
  std::string out;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) out += "|";
    out += game.FormatHistory(tuple[i]);
  }
  return out;
}

std::uint64_t TupleHash(const Game& game, const HistoryTuple& tuple) {
  const std::string encoded = EncodeTuple(game, tuple);
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : encoded) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Rational TupleWeight(const Game& game, const CorrelationPlan& plan,
                     const HistoryTuple& tuple) {
  Rational weight(0);
  for (const auto& [profile, prob] : plan.support()) {
    if (ConsistentWithHistoryTuple(game, profile, tuple)) weight += prob;
  }
  return weight;
}

}  // namespace corrplan
