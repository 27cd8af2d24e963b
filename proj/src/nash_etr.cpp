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

#include "corrplan/nash_etr.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace corrplan {
namespace {

void CheckShape(const Game& game, const BehavioralProfile& profile) {
  if (static_cast<int>(profile.probs.size()) != game.num_players()) {
    throw std::invalid_argument("behavioral profile has " +
                                std::to_string(profile.probs.size()) +
                                " players, game has " +
                                std::to_string(game.num_players()));
  }
  for (int i = 1; i <= game.num_players(); ++i) {
    const auto& infosets = game.player_infosets(i);
    if (profile.probs[i - 1].size() != infosets.size()) {
      throw std::invalid_argument("behavioral profile of player " +
                                  std::to_string(i) +
                                  " does not cover every information set");
    }
    for (std::size_t k = 0; k < infosets.size(); ++k) {
      const Infoset& is = game.infoset(infosets[k]);
      const auto& dist = profile.probs[i - 1][k];
      if (dist.size() != is.actions.size()) {
        throw std::invalid_argument("distribution size mismatch at '" +
                                    is.id + "'");
      }
      Rational sum(0);
      for (const Rational& p : dist) {
        if (p < 0) {
          throw ParseError("negative probability at '" + is.id + "'");
        }
        sum += p;
      }
      if (sum != 1) {
        throw ParseError("distribution at '" + is.id + "' sums to " +
                         FormatRational(sum) + ", expected 1");
      }
    }
  }
}

Rational ActionProb(const Game& game, const BehavioralProfile& profile,
                    int infoset, int action) {
  const Infoset& is = game.infoset(infoset);
  return profile.probs[is.player - 1][is.ordinal][action];
}

// Reach probability contributed by the listed players' own moves to v.
Rational PlayersReach(const Game& game, const BehavioralProfile& profile,
                      int v, int excluded_player) {
  Rational prob(1);
  for (int j = 1; j <= game.num_players(); ++j) {
    if (j == excluded_player) continue;
    for (const auto& [infoset, action] : game.History(v, j)) {
      prob *= ActionProb(game, profile, infoset, action);
    }
  }
  return prob;
}

// Backward induction over player i's information-set forest: exact best
// response against the others' behavioral strategies.
class BestResponse {
 public:
  BestResponse(const Game& game, const BehavioralProfile& profile, int player)
      : game_(game), profile_(profile), player_(player) {}

  Rational OfHistory(const PlayerHistory& h) {
    Rational value(0);
    for (int leaf : game_.LeavesWithHistory(player_, h)) {
      value += game_.node(leaf).payoff[player_ - 1] *
               game_.ChanceReach(leaf) *
               PlayersReach(game_, profile_, leaf, player_);
    }
    for (int s : game_.InfosetsWithHistory(player_, h)) {
      value += OfInfoset(s);
    }
    return value;
  }

  Rational OfInfoset(int s) {
    const Infoset& is = game_.infoset(s);
    Rational best(0);
    int best_action = -1;
    for (int a = 0; a < static_cast<int>(is.actions.size()); ++a) {
      PlayerHistory h = is.history;
      h.emplace_back(s, a);
      const Rational value = OfHistory(h);
      if (best_action == -1 || value > best) {
        best = value;
        best_action = a;
      }
    }
    choices_[s] = best_action;
    return best;
  }

  const std::map<int, int>& choices() const { return choices_; }

 private:
  const Game& game_;
  const BehavioralProfile& profile_;
  int player_;
  std::map<int, int> choices_;
};

std::string SmtRational(const Rational& value) {
  const boost::multiprecision::mpz_int num = numerator(value);
  const boost::multiprecision::mpz_int den = denominator(value);
  const std::string n = num < 0
                            ? "(- " + boost::multiprecision::mpz_int(-num).str() + ")"
                            : num.str();
  if (den == 1) return n;
  return "(/ " + n + " " + den.str() + ")";
}

}  // namespace

BehavioralProfile ParseBehavioral(const Game& game,
                                  const std::string& json_text) {
  const auto doc =
      nlohmann::ordered_json::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw ParseError("malformed behavioral document: not a JSON object");
  }
  BehavioralProfile profile;
  profile.probs.resize(game.num_players());
  for (int i = 1; i <= game.num_players(); ++i) {
    const auto& infosets = game.player_infosets(i);
    profile.probs[i - 1].resize(infosets.size());
    const std::string key = std::to_string(i);
    nlohmann::ordered_json per_player = nlohmann::ordered_json::object();
    if (doc.contains(key)) {
      per_player = doc[key];
    } else if (!infosets.empty()) {
      throw ParseError("behavioral document misses player " + key);
    }
    for (std::size_t k = 0; k < infosets.size(); ++k) {
      const Infoset& is = game.infoset(infosets[k]);
      if (!per_player.contains(is.id)) {
        throw ParseError("behavioral document misses information set '" +
                         is.id + "'");
      }
      auto& dist = profile.probs[i - 1][k];
      dist.assign(is.actions.size(), Rational(0));
      for (const auto& [action, value] : per_player[is.id].items()) {
        const auto it =
            std::lower_bound(is.actions.begin(), is.actions.end(), action);
        if (it == is.actions.end() || *it != action) {
          throw ParseError("action '" + action +
                           "' unavailable at information set '" + is.id +
                           "'");
        }
        dist[it - is.actions.begin()] =
            value.is_string() ? ParseRational(value.get<std::string>())
                              : Rational(value.get<long long>());
      }
    }
  }
  CheckShape(game, profile);
  return profile;
}

std::string SerializeBehavioral(const Game& game,
                                const BehavioralProfile& profile) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (int i = 1; i <= game.num_players(); ++i) {
    nlohmann::ordered_json per_player = nlohmann::ordered_json::object();
    const auto& infosets = game.player_infosets(i);
    for (std::size_t k = 0; k < infosets.size(); ++k) {
      const Infoset& is = game.infoset(infosets[k]);
      nlohmann::ordered_json dist = nlohmann::ordered_json::object();
      for (std::size_t a = 0; a < is.actions.size(); ++a) {
        dist[is.actions[a]] = FormatRational(profile.probs[i - 1][k][a]);
      }
      per_player[is.id] = std::move(dist);
    }
    doc[std::to_string(i)] = std::move(per_player);
  }
  return doc.dump(2) + "\n";
}

BehavioralProfile FromPureProfile(const Game& game,
                                  const StrategyProfile& profile) {
  CheckProfileShape(game, profile);
  BehavioralProfile behavioral;
  behavioral.probs.resize(game.num_players());
  for (int i = 1; i <= game.num_players(); ++i) {
    const auto& infosets = game.player_infosets(i);
    behavioral.probs[i - 1].resize(infosets.size());
    for (std::size_t k = 0; k < infosets.size(); ++k) {
      behavioral.probs[i - 1][k].assign(
          game.infoset(infosets[k]).actions.size(), Rational(0));
      behavioral.probs[i - 1][k][profile.of(i).actions[k]] = 1;
    }
  }
  return behavioral;
}

EtrSystem EmitEtr(const Game& game, const Rational& lambda) {
  EtrSystem result;
  std::ostringstream out;
  out << "(set-logic QF_NRA)\n";

  auto x_name = [&](int infoset, int action) {
    const Infoset& is = game.infoset(infoset);
    return "x_" + is.id + "_" + is.actions[action];
  };
  auto w_name = [&](int player, int infoset, int action) {
    std::string name = "w_" + std::to_string(player);
    if (infoset < 0) return name + "_eps";
    name += "_" + game.infoset(infoset).id;
    if (action >= 0) name += "_" + game.infoset(infoset).actions[action];
    return name;
  };

  for (int i = 1; i <= game.num_players(); ++i) {
    for (int s : game.player_infosets(i)) {
      for (int a = 0; a < static_cast<int>(game.infoset(s).actions.size());
           ++a) {
        out << "(declare-const " << x_name(s, a) << " Real)\n";
        ++result.num_x_variables;
      }
    }
  }
  for (int i = 1; i <= game.num_players(); ++i) {
    out << "(declare-const U_" << i << " Real)\n";
    ++result.num_payoff_variables;
  }
  for (int i = 1; i <= game.num_players(); ++i) {
    out << "(declare-const " << w_name(i, -1, -1) << " Real)\n";
    ++result.num_w_variables;
    for (int s : game.player_infosets(i)) {
      out << "(declare-const " << w_name(i, s, -1) << " Real)\n";
      ++result.num_w_variables;
      for (int a = 0; a < static_cast<int>(game.infoset(s).actions.size());
           ++a) {
        out << "(declare-const " << w_name(i, s, a) << " Real)\n";
        ++result.num_w_variables;
      }
    }
  }

  // Behavioral simplex constraints.
  for (int i = 1; i <= game.num_players(); ++i) {
    for (int s : game.player_infosets(i)) {
      const int num_actions =
          static_cast<int>(game.infoset(s).actions.size());
      out << "(assert (= (+";
      for (int a = 0; a < num_actions; ++a) out << " " << x_name(s, a);
      out << ") 1))\n";
      ++result.num_assertions;
      for (int a = 0; a < num_actions; ++a) {
        out << "(assert (>= " << x_name(s, a) << " 0))\n";
        ++result.num_assertions;
      }
    }
  }

  // Monomial over a leaf's path: coefficient times the involved x variables,
  // optionally excluding one player's own moves.
  auto monomial = [&](int leaf, const Rational& coefficient, int excluded) {
    std::string factors;
    int degree = 0;
    for (int j = 1; j <= game.num_players(); ++j) {
      if (j == excluded) continue;
      for (const auto& [infoset, action] : game.History(leaf, j)) {
        factors += " " + x_name(infoset, action);
        ++degree;
      }
    }
    result.max_degree = std::max(result.max_degree, degree);
    if (degree == 0) return SmtRational(coefficient);
    return "(* " + SmtRational(coefficient) + factors + ")";
  };

  // Expected payoffs.
  for (int i = 1; i <= game.num_players(); ++i) {
    out << "(assert (= U_" << i << " (+ 0";
    for (int leaf : game.leaves()) {
      const Rational coefficient =
          game.node(leaf).payoff[i - 1] * game.ChanceReach(leaf);
      if (coefficient == 0) continue;
      out << " " << monomial(leaf, coefficient, /*excluded=*/0);
    }
    out << ")))\n";
    ++result.num_assertions;
  }

  // Best-response recursion.
  for (int i = 1; i <= game.num_players(); ++i) {
    auto emit_history = [&](const PlayerHistory& h, const std::string& var) {
      out << "(assert (= " << var << " (+ 0";
      for (int leaf : game.LeavesWithHistory(i, h)) {
        const Rational coefficient =
            game.node(leaf).payoff[i - 1] * game.ChanceReach(leaf);
        if (coefficient == 0) continue;
        out << " " << monomial(leaf, coefficient, /*excluded=*/i);
      }
      for (int next : game.InfosetsWithHistory(i, h)) {
        out << " " << w_name(i, next, -1);
      }
      out << ")))\n";
      ++result.num_assertions;
    };
    emit_history(PlayerHistory{}, w_name(i, -1, -1));
    for (int s : game.player_infosets(i)) {
      const Infoset& is = game.infoset(s);
      for (int a = 0; a < static_cast<int>(is.actions.size()); ++a) {
        PlayerHistory h = is.history;
        h.emplace_back(s, a);
        emit_history(h, w_name(i, s, a));
      }
      for (int a = 0; a < static_cast<int>(is.actions.size()); ++a) {
        out << "(assert (>= " << w_name(i, s, -1) << " " << w_name(i, s, a)
            << "))\n";
        ++result.num_assertions;
      }
    }
  }

  // Incentive and threshold constraints.
  for (int i = 1; i <= game.num_players(); ++i) {
    out << "(assert (>= U_" << i << " " << w_name(i, -1, -1) << "))\n";
    ++result.num_assertions;
  }
  out << "(assert (>= (+ 0";
  for (int i = 1; i <= game.num_players(); ++i) {
    out << " (* " << SmtRational(game.objective_weights()[i - 1]) << " U_"
        << i << ")";
  }
  out << ") " << SmtRational(lambda) << "))\n";
  ++result.num_assertions;
  out << "(check-sat)\n";
  result.text = out.str();
  return result;
}

Verdict CheckBehavioral(const Game& game, const BehavioralProfile& candidate,
                        const Rational& lambda) {
  CheckShape(game, candidate);
  // Expected payoffs under the candidate.
  std::vector<Rational> values(game.num_players(), Rational(0));
  for (int leaf : game.leaves()) {
    const Rational reach = game.ChanceReach(leaf) *
                           PlayersReach(game, candidate, leaf, /*excluded=*/0);
    if (reach == 0) continue;
    for (int i = 0; i < game.num_players(); ++i) {
      values[i] += game.node(leaf).payoff[i] * reach;
    }
  }
  for (int i = 1; i <= game.num_players(); ++i) {
    BestResponse response(game, candidate, i);
    const Rational best = response.OfHistory(PlayerHistory{});
    if (best > values[i - 1]) {
      Verdict verdict;
      verdict.ok = false;
      Witness witness;
      witness.player = i;
      witness.event = "player " + std::to_string(i) + " best response";
      witness.beta.player = i;
      witness.beta.choice = response.choices();
      std::string rendered = "{";
      bool first = true;
      for (const auto& [s, a] : witness.beta.choice) {
        if (!first) rendered += ", ";
        first = false;
        rendered += game.infoset(s).id + "->" + game.infoset(s).actions[a];
      }
      witness.deviation = rendered + "}";
      witness.trigger.concept_kind = Concept::kNash;
      witness.trigger.player = i;
      witness.honest_value = values[i - 1];
      witness.deviation_value = best;
      verdict.witness = std::move(witness);
      return verdict;
    }
  }
  Rational objective(0);
  for (int i = 0; i < game.num_players(); ++i) {
    objective += game.objective_weights()[i] * values[i];
  }
  if (objective < lambda) {
    Verdict verdict;
    verdict.ok = false;
    Witness witness;
    witness.player = 0;
    witness.event = "objective below threshold";
    witness.deviation = "";
    witness.trigger.concept_kind = Concept::kNash;
    witness.honest_value = objective;
    witness.deviation_value = lambda;
    verdict.witness = std::move(witness);
    return verdict;
  }
  return Verdict{};
}

}  // namespace corrplan
