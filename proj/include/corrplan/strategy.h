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

#ifndef CORRPLAN_STRATEGY_H_
#define CORRPLAN_STRATEGY_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "corrplan/game.h"
#include "corrplan/rational.h"

namespace corrplan {

// Total map from a player's information sets to action ordinals. Entry k
// chooses the action at the k-th information set of the player's lex-sorted
// list, so comparison order equals lexicographic order in (infoset id,
// action label).
struct PureStrategy {
  int player = 0;
  std::vector<int> actions;

  auto operator<=>(const PureStrategy&) const = default;
};

// Partial strategy beta: explicit domain, keyed by global infoset index.
struct PartialStrategy {
  int player = 0;
  std::map<int, int> choice;  // infoset index -> action ordinal
};

struct StrategyProfile {
  std::vector<PureStrategy> strategies;  // entry i-1 belongs to player i

  const PureStrategy& of(int player) const { return strategies[player - 1]; }
  auto operator<=>(const StrategyProfile&) const = default;
};

// Sparse distribution over pure strategy profiles. Probabilities are
// strictly positive and sum to exactly one.
class CorrelationPlan {
 public:
  static CorrelationPlan Create(std::map<StrategyProfile, Rational> support);

  const std::map<StrategyProfile, Rational>& support() const {
    return support_;
  }
  static CorrelationPlan Dirac(StrategyProfile profile);

 private:
  std::map<StrategyProfile, Rational> support_;
};

// Action ordinal chosen by sigma at global infoset s (sigma's player owns s).
int ActionAt(const Game& game, const PureStrategy& sigma, int s);

// Streams Sigma_i in lexicographic order. Refuses at construction when the
// strategy count exceeds cap.
class StrategyEnumerator {
 public:
  static constexpr std::uint64_t kDefaultCap = 10000000;  // 10^7

  StrategyEnumerator(const Game& game, int player,
                     std::uint64_t cap = kDefaultCap);

  std::uint64_t count() const { return count_; }
  PureStrategy at(std::uint64_t index) const;  // index in [0, count)
  std::uint64_t IndexOf(const PureStrategy& sigma) const;

  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (std::uint64_t k = 0; k < count_; ++k) fn(at(k));
  }

 private:
  const Game* game_;
  int player_;
  std::vector<int> radices_;  // actions per infoset, player's lex order
  std::uint64_t count_;
};

// Streams Sigma = Sigma_1 x ... x Sigma_n in lexicographic order.
class ProfileEnumerator {
 public:
  ProfileEnumerator(const Game& game, std::uint64_t cap);

  std::uint64_t count() const { return count_; }
  StrategyProfile at(std::uint64_t index) const;
  // Index of the profile equal to `profile` except that player i plays beta.
  std::uint64_t SwapPlayer(std::uint64_t index, int player,
                           std::uint64_t strategy_index) const;
  std::uint64_t StrategyCount(int player) const {
    return per_player_[player - 1].count();
  }
  const StrategyEnumerator& player_enumerator(int player) const {
    return per_player_[player - 1];
  }
  std::uint64_t IndexOf(const StrategyProfile& profile) const;

 private:
  std::vector<StrategyEnumerator> per_player_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t count_;
};

// sigma[beta]: plays beta where defined, sigma elsewhere; other players of
// the profile are unchanged.
StrategyProfile ApplyDeviation(const Game& game, const StrategyProfile& sigma,
                               const PartialStrategy& beta);
// Profile with player i's strategy replaced wholesale.
StrategyProfile ReplaceStrategy(const StrategyProfile& sigma,
                                const PureStrategy& beta);

// Indicator functions. Each returns 1 or 0.
bool ConsistentWithHistory(const Game& game, const PureStrategy& sigma,
                           const PlayerHistory& h);
bool ConsistentWithHistory(const Game& game, const PartialStrategy& beta,
                           const PlayerHistory& h);
bool ConsistentWithNode(const Game& game, const PureStrategy& sigma, int v);
bool ConsistentWithNode(const Game& game, const StrategyProfile& profile,
                        int v);
bool ConsistentWithHistoryTuple(const Game& game,
                                const StrategyProfile& profile,
                                const std::vector<PlayerHistory>& tuple);
// ind^sigma(I -> a): the profile recommends action ordinal a at infoset s.
bool RecommendsAction(const Game& game, const StrategyProfile& profile, int s,
                      int action_ordinal);

// Exact expected payoff vector of a single pure profile (Dirac plan).
std::vector<Rational> ProfilePayoffs(const Game& game,
                                     const StrategyProfile& profile);
Rational ProfilePayoff(const Game& game, const StrategyProfile& profile,
                       int player);

struct ExpectedPayoffs {
  std::vector<Rational> player_values;
  Rational objective;
};

// E_mu[U_1..U_n] and E_mu[omega], computed exactly over the plan's support.
ExpectedPayoffs ComputeExpectedPayoffs(const Game& game,
                                       const CorrelationPlan& plan);

// Validates that every profile is typed for this game (player count, per
// player one choice per information set, ordinals in range).
void CheckProfileShape(const Game& game, const StrategyProfile& profile);

std::string FormatStrategy(const Game& game, const PureStrategy& sigma);
std::string FormatProfile(const Game& game, const StrategyProfile& profile);

}  // namespace corrplan

#endif  // CORRPLAN_STRATEGY_H_
