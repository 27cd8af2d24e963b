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

#include "corrplan/oracle.h"

#include <utility>
#include <vector>

#include "corrplan/simplex.h"
#include "json.hpp"

namespace corrplan {
namespace {

// Expected payoff of `player` in the subtree rooted at v under the profile.
Rational SubtreeValue(const Game& game, const StrategyProfile& profile,
                      int v, int player) {
  const Node& node = game.node(v);
  switch (node.kind) {
    case NodeKind::kLeaf:
      return node.payoff[player - 1];
    case NodeKind::kChance: {
      Rational value(0);
      for (const auto& e : node.edges) {
        value += e.prob * SubtreeValue(game, profile, e.child, player);
      }
      return value;
    }
    case NodeKind::kPlayer: {
      const int a = ActionAt(game, profile.of(node.player), node.infoset);
      return SubtreeValue(game, profile, game.ChildByOrdinal(v, a), player);
    }
  }
  return Rational(0);
}

// Partial strategies over {J : start <= J} of one player, odometer order.
class RegionEnumerator {
 public:
  RegionEnumerator(const Game& game, int player, int start,
                   std::uint64_t cap) {
    boost::multiprecision::mpz_int total(1);
    for (int s : game.player_infosets(player)) {
      if (!game.InfosetLeq(start, s)) continue;
      infosets_.push_back(s);
      radices_.push_back(static_cast<int>(game.infoset(s).actions.size()));
      total *= radices_.back();
    }
    if (total > cap) {
      throw ScaleError("deviation set of size " + total.str() +
                       " exceeds the cap of " + std::to_string(cap) +
                       "; oracle infeasible at this scale");
    }
    count_ = static_cast<std::uint64_t>(total);
    player_ = player;
  }

  std::uint64_t count() const { return count_; }

  PartialStrategy at(std::uint64_t index) const {
    PartialStrategy beta;
    beta.player = player_;
    for (int k = static_cast<int>(radices_.size()) - 1; k >= 0; --k) {
      beta.choice[infosets_[k]] = static_cast<int>(index % radices_[k]);
      index /= radices_[k];
    }
    return beta;
  }

 private:
  int player_ = 0;
  std::vector<int> infosets_;
  std::vector<int> radices_;
  std::uint64_t count_ = 0;
};

class OracleBuilder {
 public:
  OracleBuilder(const Game& game, Concept concept_kind, SystemMode mode,
                const Rational& threshold, const OracleOptions& options)
      : game_(game),
        concept_(concept_kind),
        mode_(mode),
        threshold_(threshold),
        options_(options),
        profiles_(game, options.profile_cap) {}

  OracleReport Run() {
    const std::uint64_t total = profiles_.count();
    for (std::uint64_t k = 0; k < total; ++k) {
      mu_.push_back(system_.AddVariable("mu_" + std::to_string(k),
                                        /*nonnegative=*/true));
    }
    payoffs_.assign(game_.num_players(), {});
    welfare_.assign(total, Rational(0));
    for (std::uint64_t k = 0; k < total; ++k) {
      const StrategyProfile profile = profiles_.at(k);
      const std::vector<Rational> values = ProfilePayoffs(game_, profile);
      for (int i = 0; i < game_.num_players(); ++i) {
        payoffs_[i].push_back(values[i]);
        welfare_[k] += game_.objective_weights()[i] * values[i];
      }
    }

    Constraint sum;
    sum.name = "distribution";
    for (int var : mu_) sum.expr.Add(var, Rational(1));
    sum.relation = Relation::kEq;
    sum.rhs = 1;
    system_.AddConstraint(std::move(sum));

    switch (concept_) {
      case Concept::kNfce:
        EmitNormalForm(/*coarse=*/false);
        break;
      case Concept::kNfcce:
        EmitNormalForm(/*coarse=*/true);
        break;
      case Concept::kEfce:
      case Concept::kEfcce:
        EmitExtensiveForm();
        break;
      case Concept::kAfce:
      case Concept::kAfcce:
        EmitAgentForm();
        break;
      default:
        throw std::invalid_argument(
            "the oracle solves correlated concepts only: nfce, nfcce, efce, "
            "efcce, afce, afcce");
    }

    LinearExpr value;
    for (std::uint64_t k = 0; k < profiles_.count(); ++k) {
      value.Add(mu_[k], welfare_[k]);
    }
    if (mode_ == SystemMode::kThreshold) {
      Constraint c;
      c.name = "threshold";
      c.expr = std::move(value);
      c.relation = Relation::kGe;
      c.rhs = threshold_;
      system_.AddConstraint(std::move(c));
    } else {
      system_.SetObjective(std::move(value));
    }

    OracleReport report;
    report.concept_kind = concept_;
    report.mode = mode_;
    report.num_profiles = profiles_.count();
    report.num_constraints = system_.constraints().size();
    const LpOutcome outcome = SolveLp(system_);
    report.feasible = outcome.status == LpOutcome::Status::kFeasible;
    if (report.feasible) {
      if (mode_ == SystemMode::kMaximize) {
        report.optimal_value = outcome.objective_value;
      }
      std::map<StrategyProfile, Rational> support;
      for (std::uint64_t k = 0; k < profiles_.count(); ++k) {
        const Rational& v =
            outcome.assignment.at(system_.variable_name(mu_[k]));
        if (v > 0) support.emplace(profiles_.at(k), v);
      }
      report.witness = CorrelationPlan::Create(std::move(support));
    }
    return report;
  }

 private:
  // NFCE: for every recommendation alpha and deviation beta of each player,
  // the conditional payoff difference is nonnegative. NFCCE drops the
  // conditioning on alpha.
  void EmitNormalForm(bool coarse) {
    for (int i = 1; i <= game_.num_players(); ++i) {
      const std::uint64_t count = profiles_.StrategyCount(i);
      if (coarse) {
        for (std::uint64_t b = 0; b < count; ++b) {
          Constraint c;
          c.name = "inc_" + std::to_string(i) + "_beta" + std::to_string(b);
          for (std::uint64_t k = 0; k < profiles_.count(); ++k) {
            c.expr.Add(mu_[k], payoffs_[i - 1][k] -
                                   payoffs_[i - 1][profiles_.SwapPlayer(
                                       k, i, b)]);
          }
          c.relation = Relation::kGe;
          c.rhs = 0;
          system_.AddConstraint(std::move(c));
        }
      } else {
        for (std::uint64_t a = 0; a < count; ++a) {
          for (std::uint64_t b = 0; b < count; ++b) {
            if (a == b) continue;
            Constraint c;
            c.name = "inc_" + std::to_string(i) + "_alpha" +
                     std::to_string(a) + "_beta" + std::to_string(b);
            for (std::uint64_t k = 0; k < profiles_.count(); ++k) {
              if (per_player_index(k, i) != a) continue;
              c.expr.Add(mu_[k], payoffs_[i - 1][k] -
                                     payoffs_[i - 1][profiles_.SwapPlayer(
                                         k, i, b)]);
            }
            c.relation = Relation::kGe;
            c.rhs = 0;
            system_.AddConstraint(std::move(c));
          }
        }
      }
    }
  }

  std::uint64_t per_player_index(std::uint64_t k, int player) const {
    return profiles_.player_enumerator(player).IndexOf(
        profiles_.at(k).of(player));
  }

  // Reach-weighted subtree payoffs of player i over the nodes of infoset s
  // under a full profile; zero when the profile does not reach the node.
  Rational ConditionalValue(const StrategyProfile& profile, int s, int player,
                            const StrategyProfile& continuation) const {
    Rational value(0);
    for (int u : game_.infoset(s).nodes) {
      if (!ConsistentWithNode(game_, profile, u)) continue;
      value += game_.ChanceReach(u) *
               SubtreeValue(game_, continuation, u, player);
    }
    return value;
  }

  void EmitExtensiveForm() {
    const bool fine = concept_ == Concept::kEfce;
    for (int i = 1; i <= game_.num_players(); ++i) {
      for (int s : game_.player_infosets(i)) {
        const Infoset& is = game_.infoset(s);
        RegionEnumerator deviations(game_, i, s, options_.profile_cap);
        const int num_recommended =
            fine ? static_cast<int>(is.actions.size()) : 1;
        for (int a = 0; a < num_recommended; ++a) {
          for (std::uint64_t d = 0; d < deviations.count(); ++d) {
            const PartialStrategy beta = deviations.at(d);
            Constraint c;
            c.name = "inc_" + std::to_string(i) + "_" + is.id +
                     (fine ? "_" + is.actions[a] : "") + "_beta" +
                     std::to_string(d);
            for (std::uint64_t k = 0; k < profiles_.count(); ++k) {
              const StrategyProfile profile = profiles_.at(k);
              if (fine && ActionAt(game_, profile.of(i), s) != a) continue;
              const StrategyProfile deviated =
                  ApplyDeviation(game_, profile, beta);
              const Rational diff =
                  ConditionalValue(profile, s, i, profile) -
                  ConditionalValue(profile, s, i, deviated);
              c.expr.Add(mu_[k], diff);
            }
            c.relation = Relation::kGe;
            c.rhs = 0;
            system_.AddConstraint(std::move(c));
          }
        }
      }
    }
  }

  void EmitAgentForm() {
    const bool fine = concept_ == Concept::kAfce;
    for (int i = 1; i <= game_.num_players(); ++i) {
      for (int s : game_.player_infosets(i)) {
        const Infoset& is = game_.infoset(s);
        const int num_actions = static_cast<int>(is.actions.size());
        const int num_recommended = fine ? num_actions : 1;
        for (int a = 0; a < num_recommended; ++a) {
          for (int b = 0; b < num_actions; ++b) {
            if (fine && a == b) continue;
            PartialStrategy beta;
            beta.player = i;
            beta.choice[s] = b;
            Constraint c;
            c.name = "inc_" + std::to_string(i) + "_" + is.id +
                     (fine ? "_" + is.actions[a] : "") + "_swap_" +
                     is.actions[b];
            for (std::uint64_t k = 0; k < profiles_.count(); ++k) {
              const StrategyProfile profile = profiles_.at(k);
              if (fine && ActionAt(game_, profile.of(i), s) != a) continue;
              const StrategyProfile deviated =
                  ApplyDeviation(game_, profile, beta);
              const Rational diff =
                  ConditionalValue(profile, s, i, profile) -
                  ConditionalValue(profile, s, i, deviated);
              c.expr.Add(mu_[k], diff);
            }
            c.relation = Relation::kGe;
            c.rhs = 0;
            system_.AddConstraint(std::move(c));
          }
        }
      }
    }
  }

  const Game& game_;
  Concept concept_;
  SystemMode mode_;
  Rational threshold_;
  OracleOptions options_;
  ProfileEnumerator profiles_;
  LinearSystem system_;
  std::vector<int> mu_;
  std::vector<std::vector<Rational>> payoffs_;  // [player-1][profile]
  std::vector<Rational> welfare_;               // objective value per profile
};

}  // namespace

OracleReport OracleSolve(const Game& game, Concept concept_kind, SystemMode mode,
                         const Rational& threshold,
                         const OracleOptions& options) {
  return OracleBuilder(game, concept_kind, mode, threshold, options).Run();
}

std::string OracleReportToJson(const Game& game, const OracleReport& report) {
  nlohmann::ordered_json doc;
  doc["concept"] = ConceptName(report.concept_kind);
  doc["mode"] =
      report.mode == SystemMode::kThreshold ? "threshold" : "maximize";
  doc["profiles"] = report.num_profiles;
  doc["constraints"] = report.num_constraints;
  doc["feasible"] = report.feasible;
  if (report.optimal_value.has_value()) {
    doc["optimal_value"] = FormatRational(*report.optimal_value);
  }
  if (report.witness.has_value()) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& [profile, prob] : report.witness->support()) {
      nlohmann::ordered_json entry;
      entry["prob"] = FormatRational(prob);
      entry["profile"] = FormatProfile(game, profile);
      entries.push_back(std::move(entry));
    }
    doc["witness"] = std::move(entries);
  }
  return doc.dump(2) + "\n";
}

}  // namespace corrplan
