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

#include "corrplan/strategy.h"

#include <stdexcept>

namespace corrplan {

CorrelationPlan CorrelationPlan::Create(
    std::map<StrategyProfile, Rational> support) {
  Rational sum(0);
  for (const auto& [profile, prob] : support) {
    if (prob <= 0) {
      throw ParseError("correlation plan has a non-positive probability " +
                       FormatRational(prob));
    }
    sum += prob;
  }
  if (sum != 1) {
    throw ParseError("correlation plan probabilities sum to " +
                     FormatRational(sum) + ", expected 1");
  }
  CorrelationPlan plan;
  plan.support_ = std::move(support);
  return plan;
}

CorrelationPlan CorrelationPlan::Dirac(StrategyProfile profile) {
  std::map<StrategyProfile, Rational> support;
  support.emplace(std::move(profile), Rational(1));
  return Create(std::move(support));
}

int ActionAt(const Game& game, const PureStrategy& sigma, int s) {
  return sigma.actions[game.infoset(s).ordinal];
}

StrategyEnumerator::StrategyEnumerator(const Game& game, int player,
                                       std::uint64_t cap)
    : game_(&game), player_(player) {
  boost::multiprecision::mpz_int total(1);
  for (int s : game.player_infosets(player)) {
    radices_.push_back(static_cast<int>(game.infoset(s).actions.size()));
    total *= radices_.back();
  }
  if (total > cap) {
    throw ScaleError("player " + std::to_string(player) + " has " +
                     total.str() + " pure strategies, above the cap of " +
                     std::to_string(cap) + "; oracle infeasible at this scale");
  }
  count_ = static_cast<std::uint64_t>(total);
}

PureStrategy StrategyEnumerator::at(std::uint64_t index) const {
  PureStrategy sigma;
  sigma.player = player_;
  sigma.actions.assign(radices_.size(), 0);
  for (int k = static_cast<int>(radices_.size()) - 1; k >= 0; --k) {
    sigma.actions[k] = static_cast<int>(index % radices_[k]);
    index /= radices_[k];
  }
  return sigma;
}

std::uint64_t StrategyEnumerator::IndexOf(const PureStrategy& sigma) const {
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < radices_.size(); ++k) {
    index = index * radices_[k] + sigma.actions[k];
  }
  return index;
}

ProfileEnumerator::ProfileEnumerator(const Game& game, std::uint64_t cap) {
  boost::multiprecision::mpz_int total(1);
  for (int i = 1; i <= game.num_players(); ++i) {
    per_player_.emplace_back(game, i, cap);
    total *= per_player_.back().count();
  }
  if (total > cap) {
    throw ScaleError("the game has " + total.str() +
                     " pure strategy profiles, above the cap of " +
                     std::to_string(cap) +
                     "; oracle infeasible at this scale");
  }
  count_ = static_cast<std::uint64_t>(total);
  strides_.assign(per_player_.size(), 1);
  for (int i = static_cast<int>(per_player_.size()) - 2; i >= 0; --i) {
    strides_[i] = strides_[i + 1] * per_player_[i + 1].count();
  }
}

StrategyProfile ProfileEnumerator::at(std::uint64_t index) const {
  StrategyProfile profile;
  for (std::size_t i = 0; i < per_player_.size(); ++i) {
    profile.strategies.push_back(
        per_player_[i].at((index / strides_[i]) % per_player_[i].count()));
  }
  return profile;
}

std::uint64_t ProfileEnumerator::SwapPlayer(
    std::uint64_t index, int player, std::uint64_t strategy_index) const {
  const std::size_t i = player - 1;
  const std::uint64_t old = (index / strides_[i]) % per_player_[i].count();
  return index + (strategy_index - old) * strides_[i];
}

std::uint64_t ProfileEnumerator::IndexOf(const StrategyProfile& profile) const {
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < per_player_.size(); ++i) {
    index += per_player_[i].IndexOf(profile.strategies[i]) * strides_[i];
  }
  return index;
}

StrategyProfile ApplyDeviation(const Game& game, const StrategyProfile& sigma,
                               const PartialStrategy& beta) {
  StrategyProfile result = sigma;
  PureStrategy& mine = result.strategies[beta.player - 1];
  for (const auto& [s, action] : beta.choice) {
    mine.actions[game.infoset(s).ordinal] = action;
  }
  return result;
}

StrategyProfile ReplaceStrategy(const StrategyProfile& sigma,
                                const PureStrategy& beta) {
  StrategyProfile result = sigma;
  result.strategies[beta.player - 1] = beta;
  return result;
}

bool ConsistentWithHistory(const Game& game, const PureStrategy& sigma,
                           const PlayerHistory& h) {
  for (const auto& [s, action] : h) {
    if (ActionAt(game, sigma, s) != action) return false;
  }
  return true;
}

bool ConsistentWithHistory(const Game& game, const PartialStrategy& beta,
                           const PlayerHistory& h) {
  (void)game;
  for (const auto& [s, action] : h) {
    auto it = beta.choice.find(s);
    if (it != beta.choice.end() && it->second != action) return false;
  }
  return true;
}

bool ConsistentWithNode(const Game& game, const PureStrategy& sigma, int v) {
  return ConsistentWithHistory(game, sigma, game.History(v, sigma.player));
}

bool ConsistentWithNode(const Game& game, const StrategyProfile& profile,
                        int v) {
  for (const auto& sigma : profile.strategies) {
    if (!ConsistentWithNode(game, sigma, v)) return false;
  }
  return true;
}

bool ConsistentWithHistoryTuple(const Game& game,
                                const StrategyProfile& profile,
                                const std::vector<PlayerHistory>& tuple) {
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (!ConsistentWithHistory(game, profile.strategies[i], tuple[i])) {
      return false;
    }
  }
  return true;
}

bool RecommendsAction(const Game& game, const StrategyProfile& profile, int s,
                      int action_ordinal) {
  const int player = game.infoset(s).player;
  return ActionAt(game, profile.of(player), s) == action_ordinal;
}

namespace {

void AccumulateProfilePayoffs(const Game& game, const StrategyProfile& profile,
                              int v, const Rational& weight,
                              std::vector<Rational>* out) {
  const Node& node = game.node(v);
  switch (node.kind) {
    case NodeKind::kLeaf:
      for (std::size_t i = 0; i < out->size(); ++i) {
        (*out)[i] += weight * node.payoff[i];
      }
      return;
    case NodeKind::kChance:
      for (const auto& e : node.edges) {
        AccumulateProfilePayoffs(game, profile, e.child, weight * e.prob, out);
      }
      return;
    case NodeKind::kPlayer: {
      const int a = ActionAt(game, profile.of(node.player), node.infoset);
      AccumulateProfilePayoffs(game, profile, game.ChildByOrdinal(v, a),
                               weight, out);
      return;
    }
  }
}

}  // namespace

std::vector<Rational> ProfilePayoffs(const Game& game,
                                     const StrategyProfile& profile) {
  std::vector<Rational> values(game.num_players(), Rational(0));
  AccumulateProfilePayoffs(game, profile, game.root(), Rational(1), &values);
  return values;
}

Rational ProfilePayoff(const Game& game, const StrategyProfile& profile,
                       int player) {
  return ProfilePayoffs(game, profile)[player - 1];
}

ExpectedPayoffs ComputeExpectedPayoffs(const Game& game,
                                       const CorrelationPlan& plan) {
  ExpectedPayoffs result;
  result.player_values.assign(game.num_players(), Rational(0));
  for (const auto& [profile, prob] : plan.support()) {
    CheckProfileShape(game, profile);
    const std::vector<Rational> values = ProfilePayoffs(game, profile);
    for (int i = 0; i < game.num_players(); ++i) {
      result.player_values[i] += prob * values[i];
    }
  }
  result.objective = 0;
  for (int i = 0; i < game.num_players(); ++i) {
    result.objective += game.objective_weights()[i] * result.player_values[i];
  }
  return result;
}

void CheckProfileShape(const Game& game, const StrategyProfile& profile) {
  if (static_cast<int>(profile.strategies.size()) != game.num_players()) {
    throw std::invalid_argument("profile has " +
                                std::to_string(profile.strategies.size()) +
                                " strategies for a " +
                                std::to_string(game.num_players()) +
                                "-player game");
  }
  for (int i = 1; i <= game.num_players(); ++i) {
    const PureStrategy& sigma = profile.of(i);
    const auto& infosets = game.player_infosets(i);
    if (sigma.player != i ||
        sigma.actions.size() != infosets.size()) {
      throw std::invalid_argument("strategy of player " + std::to_string(i) +
                                  " does not match the game's infosets");
    }
    for (std::size_t k = 0; k < infosets.size(); ++k) {
      const int num_actions =
          static_cast<int>(game.infoset(infosets[k]).actions.size());
      if (sigma.actions[k] < 0 || sigma.actions[k] >= num_actions) {
        throw std::invalid_argument("strategy of player " + std::to_string(i) +
                                    " picks an unavailable action");
      }
    }
  }
}

std::string FormatStrategy(const Game& game, const PureStrategy& sigma) {
  std::string out = "{";
  const auto& infosets = game.player_infosets(sigma.player);
  for (std::size_t k = 0; k < infosets.size(); ++k) {
    if (k > 0) out += ", ";
    const Infoset& is = game.infoset(infosets[k]);
    out += is.id + "->" + is.actions[sigma.actions[k]];
  }
  return out + "}";
}

std::string FormatProfile(const Game& game, const StrategyProfile& profile) {
  std::string out = "(";
  for (std::size_t i = 0; i < profile.strategies.size(); ++i) {
    if (i > 0) out += ", ";
    out += FormatStrategy(game, profile.strategies[i]);
  }
  return out + ")";
}

}  // namespace corrplan
