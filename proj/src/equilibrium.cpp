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

#include "corrplan/equilibrium.h"

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace corrplan {
namespace {

bool HistoryContains(const PlayerHistory& h, int infoset, int action) {
  for (const auto& entry : h) {
    if (entry.first == infoset && entry.second == action) return true;
  }
  return false;
}

bool IsPrefix(const PlayerHistory& prefix, const PlayerHistory& h) {
  if (prefix.size() > h.size()) return false;
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    if (h[k] != prefix[k]) return false;
  }
  return true;
}

// Bottom-up best-deviation recursion over one player's information sets at
// or after the start infoset. Leaf terms come from leaf_weight; the value at
// a history adds the values of the next information sets with that history,
// and the value at an information set maximizes over its actions.
class DeviationRecursion {
 public:
  DeviationRecursion(const Game& game, int player,
                     std::function<Rational(int)> leaf_weight)
      : game_(game), player_(player), leaf_weight_(std::move(leaf_weight)) {}

  Rational ValueOfHistory(const PlayerHistory& h) {
    Rational value(0);
    for (int leaf : game_.LeavesWithHistory(player_, h)) {
      value += leaf_weight_(leaf);
    }
    for (int s : game_.InfosetsWithHistory(player_, h)) {
      value += ValueOfInfoset(s);
    }
    return value;
  }

  Rational ValueOfInfoset(int s) {
    const Infoset& is = game_.infoset(s);
    Rational best(0);
    int best_action = -1;
    for (int a = 0; a < static_cast<int>(is.actions.size()); ++a) {
      PlayerHistory h = is.history;
      h.emplace_back(s, a);
      const Rational value = ValueOfHistory(h);
      if (best_action == -1 || value > best) {
        best = value;
        best_action = a;
      }
    }
    choices_[s] = best_action;
    return best;
  }

  // Deviation choices made at every information set visited.
  const std::map<int, int>& choices() const { return choices_; }

 private:
  const Game& game_;
  int player_;
  std::function<Rational(int)> leaf_weight_;
  std::map<int, int> choices_;
};

// beta covering every information set J with start <= J, taking recorded
// choices (visited sets) and completing unvisited ones deterministically.
PartialStrategy RegionStrategy(const Game& game, int player, int start,
                               const std::map<int, int>& choices) {
  PartialStrategy beta;
  beta.player = player;
  for (int s : game.player_infosets(player)) {
    if (!game.InfosetLeq(start, s)) continue;
    auto it = choices.find(s);
    beta.choice[s] = it == choices.end() ? 0 : it->second;
  }
  return beta;
}

Rational PlanProbability(const CorrelationPlan& plan,
                         const StrategyProfile& profile) {
  auto it = plan.support().find(profile);
  return it == plan.support().end() ? Rational(0) : it->second;
}

std::string FormatPartial(const Game& game, const PartialStrategy& beta) {
  std::string out = "{";
  bool first = true;
  for (const auto& [s, a] : beta.choice) {
    if (!first) out += ", ";
    first = false;
    const Infoset& is = game.infoset(s);
    out += is.id + "->" + is.actions[a];
  }
  return out + "}";
}

// Full-strategy concepts enumerate deviations; surface cap overruns with
// verification wording.
StrategyEnumerator DeviationEnumerator(const Game& game, int player,
                                       std::uint64_t cap) {
  try {
    return StrategyEnumerator(game, player, cap);
  } catch (const ScaleError&) {
    throw ScaleError("player " + std::to_string(player) +
                     "'s deviation set exceeds the cap of " +
                     std::to_string(cap) +
                     "; verification infeasible at this scale");
  }
}

PartialStrategy AsPartial(const Game& game, const PureStrategy& sigma) {
  PartialStrategy beta;
  beta.player = sigma.player;
  const auto& infosets = game.player_infosets(sigma.player);
  for (std::size_t k = 0; k < infosets.size(); ++k) {
    beta.choice[infosets[k]] = sigma.actions[k];
  }
  return beta;
}

}  // namespace

Rational ConditionalNumerator(const Game& game, const CorrelationPlan& plan,
                              const ConditionalEvent& event,
                              const StrategyProfile& profile, int leaf) {
  const Rational mu = PlanProbability(plan, profile);
  if (mu == 0) return Rational(0);
  if (!ConsistentWithNode(game, profile, leaf)) return Rational(0);
  switch (event.kind) {
    case ConditionalEvent::Kind::kRecommendedStrategy:
      if (!(profile.of(event.player) == event.alpha)) return Rational(0);
      break;
    case ConditionalEvent::Kind::kReachInfoset:
      if (!game.NodeBelow(leaf, event.infoset)) return Rational(0);
      break;
    case ConditionalEvent::Kind::kReachInfosetAction:
      if (!game.NodeBelow(leaf, event.infoset)) return Rational(0);
      if (!RecommendsAction(game, profile, event.infoset, event.action)) {
        return Rational(0);
      }
      break;
  }
  return mu * game.ChanceReach(leaf);
}

Rational ConditionalDenominator(const Game& game, const CorrelationPlan& plan,
                                const ConditionalEvent& event) {
  Rational total(0);
  for (const auto& [profile, prob] : plan.support()) {
    switch (event.kind) {
      case ConditionalEvent::Kind::kRecommendedStrategy:
        if (profile.of(event.player) == event.alpha) total += prob;
        break;
      case ConditionalEvent::Kind::kReachInfoset:
      case ConditionalEvent::Kind::kReachInfosetAction:
        if (event.kind == ConditionalEvent::Kind::kReachInfosetAction &&
            !RecommendsAction(game, profile, event.infoset, event.action)) {
          break;
        }
        for (int v : game.infoset(event.infoset).nodes) {
          if (ConsistentWithNode(game, profile, v)) {
            total += prob * game.ChanceReach(v);
          }
        }
        break;
    }
  }
  return total;
}

Rational HonestValue(const Game& game, const CorrelationPlan& plan,
                     const Trigger& trigger) {
  const int i = trigger.player;
  Rational value(0);
  switch (trigger.concept_kind) {
    case Concept::kNash:
    case Concept::kNfce:
      for (const auto& [profile, prob] : plan.support()) {
        if (profile.of(i) == trigger.alpha) {
          value += prob * ProfilePayoff(game, profile, i);
        }
      }
      return value;
    case Concept::kNfcce:
      for (const auto& [profile, prob] : plan.support()) {
        value += prob * ProfilePayoff(game, profile, i);
      }
      return value;
    case Concept::kEfce:
    case Concept::kAfce:
      for (int leaf : game.leaves()) {
        if (!HistoryContains(game.History(leaf, i), trigger.infoset,
                             trigger.action)) {
          continue;
        }
        value += game.node(leaf).payoff[i - 1] * game.ChanceReach(leaf) *
                 TupleWeight(game, plan, HonestTuple(game, leaf));
      }
      return value;
    case Concept::kEfcce:
    case Concept::kAfcce:
      for (int leaf : game.leaves()) {
        if (!game.NodeBelow(leaf, trigger.infoset)) continue;
        value += game.node(leaf).payoff[i - 1] * game.ChanceReach(leaf) *
                 TupleWeight(game, plan, HonestTuple(game, leaf));
      }
      return value;
  }
  return value;
}

Rational BestDeviationValue(const Game& game, const CorrelationPlan& plan,
                            const Trigger& trigger, PartialStrategy* beta_out,
                            std::uint64_t cap) {
  const int i = trigger.player;
  switch (trigger.concept_kind) {
    case Concept::kNash:
    case Concept::kNfce: {
      StrategyEnumerator deviations = DeviationEnumerator(game, i, cap);
      Rational best(0);
      bool have_best = false;
      PureStrategy best_beta;
      deviations.ForEach([&](const PureStrategy& beta) {
        Rational value(0);
        for (const auto& [profile, prob] : plan.support()) {
          if (!(profile.of(i) == trigger.alpha)) continue;
          value +=
              prob * ProfilePayoff(game, ReplaceStrategy(profile, beta), i);
        }
        if (!have_best || value > best) {
          have_best = true;
          best = value;
          best_beta = beta;
        }
      });
      if (beta_out != nullptr) *beta_out = AsPartial(game, best_beta);
      return best;
    }
    case Concept::kNfcce: {
      DeviationRecursion recursion(game, i, [&](int leaf) {
        return game.node(leaf).payoff[i - 1] * game.ChanceReach(leaf) *
               TupleWeight(game, plan,
                           WithCoordinate(game, leaf, i, PlayerHistory{}));
      });
      const Rational value = recursion.ValueOfHistory(PlayerHistory{});
      if (beta_out != nullptr) {
        *beta_out = RegionStrategy(game, i, Game::kRootInfoset,
                                   recursion.choices());
      }
      return value;
    }
    case Concept::kEfce: {
      DeviationRecursion recursion(game, i, [&](int leaf) {
        return game.node(leaf).payoff[i - 1] * game.ChanceReach(leaf) *
               TupleWeight(game, plan,
                           WithCoordinate(game, leaf, i,
                                          EfceCoordinate(game, trigger.infoset,
                                                         trigger.action)));
      });
      const Rational value = recursion.ValueOfInfoset(trigger.infoset);
      if (beta_out != nullptr) {
        *beta_out = RegionStrategy(game, i, trigger.infoset,
                                   recursion.choices());
      }
      return value;
    }
    case Concept::kEfcce: {
      DeviationRecursion recursion(game, i, [&](int leaf) {
        return game.node(leaf).payoff[i - 1] * game.ChanceReach(leaf) *
               TupleWeight(game, plan,
                           WithCoordinate(game, leaf, i,
                                          EfcceCoordinate(game,
                                                          trigger.infoset)));
      });
      const Rational value = recursion.ValueOfInfoset(trigger.infoset);
      if (beta_out != nullptr) {
        *beta_out = RegionStrategy(game, i, trigger.infoset,
                                   recursion.choices());
      }
      return value;
    }
    case Concept::kAfce:
    case Concept::kAfcce: {
      PlayerHistory deviated = game.infoset(trigger.infoset).history;
      deviated.emplace_back(trigger.infoset, trigger.deviate_to);
      Rational value(0);
      for (int leaf : game.leaves()) {
        if (!IsPrefix(deviated, game.History(leaf, i))) continue;
        const PlayerHistory coordinate =
            trigger.concept_kind == Concept::kAfce
                ? AfceCoordinate(game, trigger.infoset, trigger.action, leaf)
                : AfcceCoordinate(game, trigger.infoset, leaf);
        value += game.node(leaf).payoff[i - 1] * game.ChanceReach(leaf) *
                 TupleWeight(game, plan,
                             WithCoordinate(game, leaf, i, coordinate));
      }
      if (beta_out != nullptr) {
        beta_out->player = i;
        beta_out->choice = {{trigger.infoset, trigger.deviate_to}};
      }
      return value;
    }
  }
  throw std::invalid_argument("unknown trigger shape");
}

namespace {

std::string EventString(const Game& game, const Trigger& trigger) {
  switch (trigger.concept_kind) {
    case Concept::kNash:
    case Concept::kNfce:
      return "player " + std::to_string(trigger.player) +
             " recommended " + FormatStrategy(game, trigger.alpha);
    case Concept::kNfcce:
      return "player " + std::to_string(trigger.player) + " at start of game";
    case Concept::kEfce:
    case Concept::kAfce:
      return "player " + std::to_string(trigger.player) + " reaches " +
             game.infoset(trigger.infoset).id + " recommended " +
             game.infoset(trigger.infoset).actions[trigger.action];
    case Concept::kEfcce:
    case Concept::kAfcce:
      return "player " + std::to_string(trigger.player) + " reaches " +
             game.infoset(trigger.infoset).id;
  }
  return "";
}

Verdict Failure(const Game& game, const Trigger& trigger,
                const PartialStrategy& beta, Rational honest,
                Rational deviation) {
  Verdict verdict;
  verdict.ok = false;
  Witness witness;
  witness.player = trigger.player;
  witness.event = EventString(game, trigger);
  witness.deviation = FormatPartial(game, beta);
  witness.trigger = trigger;
  witness.beta = beta;
  witness.honest_value = std::move(honest);
  witness.deviation_value = std::move(deviation);
  verdict.witness = std::move(witness);
  return verdict;
}

}  // namespace

Verdict Verify(const Game& game, const CorrelationPlan& plan, Concept concept_kind,
               const VerifyOptions& options) {
  for (const auto& [profile, prob] : plan.support()) {
    CheckProfileShape(game, profile);
  }
  const int n = game.num_players();
  switch (concept_kind) {
    case Concept::kNash: {
      if (plan.support().size() != 1) {
        throw std::invalid_argument(
            "nash verification takes a Dirac plan; use the behavioral "
            "checker for randomized candidates");
      }
      const StrategyProfile& profile = plan.support().begin()->first;
      for (int i = 1; i <= n; ++i) {
        Trigger trigger;
        trigger.concept_kind = Concept::kNash;
        trigger.player = i;
        trigger.alpha = profile.of(i);
        const Rational honest = HonestValue(game, plan, trigger);
        PartialStrategy beta;
        const Rational deviation =
            BestDeviationValue(game, plan, trigger, &beta, options.cap);
        if (deviation > honest) {
          return Failure(game, trigger, beta, honest, deviation);
        }
      }
      return Verdict{};
    }
    case Concept::kNfce: {
      for (int i = 1; i <= n; ++i) {
        std::set<PureStrategy> recommended;
        for (const auto& [profile, prob] : plan.support()) {
          recommended.insert(profile.of(i));
        }
        for (const PureStrategy& alpha : recommended) {
          Trigger trigger;
          trigger.concept_kind = Concept::kNfce;
          trigger.player = i;
          trigger.alpha = alpha;
          const Rational honest = HonestValue(game, plan, trigger);
          StrategyEnumerator deviations =
              DeviationEnumerator(game, i, options.cap);
          for (std::uint64_t k = 0; k < deviations.count(); ++k) {
            const PureStrategy beta = deviations.at(k);
            Rational value(0);
            for (const auto& [profile, prob] : plan.support()) {
              if (!(profile.of(i) == alpha)) continue;
              value += prob *
                       ProfilePayoff(game, ReplaceStrategy(profile, beta), i);
            }
            if (value > honest) {
              return Failure(game, trigger, AsPartial(game, beta), honest,
                             value);
            }
          }
        }
      }
      return Verdict{};
    }
    case Concept::kNfcce: {
      for (int i = 1; i <= n; ++i) {
        Trigger trigger;
        trigger.concept_kind = Concept::kNfcce;
        trigger.player = i;
        const Rational honest = HonestValue(game, plan, trigger);
        PartialStrategy beta;
        const Rational deviation =
            BestDeviationValue(game, plan, trigger, &beta, options.cap);
        if (deviation > honest) {
          return Failure(game, trigger, beta, honest, deviation);
        }
      }
      return Verdict{};
    }
    case Concept::kEfce:
    case Concept::kEfcce: {
      for (int i = 1; i <= n; ++i) {
        for (int s : game.player_infosets(i)) {
          const int num_actions =
              static_cast<int>(game.infoset(s).actions.size());
          if (concept_kind == Concept::kEfce) {
            for (int a = 0; a < num_actions; ++a) {
              Trigger trigger;
              trigger.concept_kind = Concept::kEfce;
              trigger.player = i;
              trigger.infoset = s;
              trigger.action = a;
              const Rational honest = HonestValue(game, plan, trigger);
              PartialStrategy beta;
              const Rational deviation =
                  BestDeviationValue(game, plan, trigger, &beta, options.cap);
              if (deviation > honest) {
                return Failure(game, trigger, beta, honest, deviation);
              }
            }
          } else {
            Trigger trigger;
            trigger.concept_kind = Concept::kEfcce;
            trigger.player = i;
            trigger.infoset = s;
            const Rational honest = HonestValue(game, plan, trigger);
            PartialStrategy beta;
            const Rational deviation =
                BestDeviationValue(game, plan, trigger, &beta, options.cap);
            if (deviation > honest) {
              return Failure(game, trigger, beta, honest, deviation);
            }
          }
        }
      }
      return Verdict{};
    }
    case Concept::kAfce:
    case Concept::kAfcce: {
      for (int i = 1; i <= n; ++i) {
        for (int s : game.player_infosets(i)) {
          const int num_actions =
              static_cast<int>(game.infoset(s).actions.size());
          const int num_recommended =
              concept_kind == Concept::kAfce ? num_actions : 1;
          for (int a = 0; a < num_recommended; ++a) {
            for (int b = 0; b < num_actions; ++b) {
              Trigger trigger;
              trigger.concept_kind = concept_kind;
              trigger.player = i;
              trigger.infoset = s;
              trigger.action = concept_kind == Concept::kAfce ? a : -1;
              trigger.deviate_to = b;
              const Rational honest = HonestValue(game, plan, trigger);
              PartialStrategy beta;
              const Rational deviation =
                  BestDeviationValue(game, plan, trigger, &beta, options.cap);
              if (deviation > honest) {
                return Failure(game, trigger, beta, honest, deviation);
              }
            }
          }
        }
      }
      return Verdict{};
    }
  }
  throw std::invalid_argument("unknown concept");
}

std::string VerdictToJson(const Verdict& verdict) {
  nlohmann::ordered_json doc;
  doc["ok"] = verdict.ok;
  if (!verdict.ok) {
    nlohmann::ordered_json w;
    w["player"] = verdict.witness->player;
    w["event"] = verdict.witness->event;
    w["deviation"] = verdict.witness->deviation;
    w["honest_value"] = FormatRational(verdict.witness->honest_value);
    w["deviation_value"] = FormatRational(verdict.witness->deviation_value);
    doc["witness"] = std::move(w);
  }
  return doc.dump(2) + "\n";
}

}  // namespace corrplan
