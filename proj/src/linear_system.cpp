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

#include "corrplan/linear_system.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace corrplan {

int LinearSystem::AddVariable(const std::string& name, bool nonnegative) {
  auto [it, inserted] = index_.emplace(name, num_variables());
  if (!inserted) {
    throw std::logic_error("duplicate variable name '" + name + "'");
  }
  names_.push_back(name);
  nonnegative_.push_back(nonnegative);
  return it->second;
}

int LinearSystem::VariableIndex(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) {
    throw std::invalid_argument("unknown variable '" + name + "'");
  }
  return it->second;
}

bool LinearSystem::HasVariable(const std::string& name) const {
  return index_.count(name) > 0;
}

void LinearSystem::AddConstraint(Constraint constraint) {
  constraints_.push_back(std::move(constraint));
}

Rational LinearSystem::Evaluate(
    const LinearExpr& expr,
    const std::map<std::string, Rational>& assignment) const {
  Rational value(0);
  for (const auto& [var, coef] : expr.terms) {
    auto it = assignment.find(names_[var]);
    if (it != assignment.end()) value += coef * it->second;
  }
  return value;
}

bool LinearSystem::Satisfies(
    const std::map<std::string, Rational>& assignment) const {
  for (const auto& c : constraints_) {
    const Rational lhs = Evaluate(c.expr, assignment);
    switch (c.relation) {
      case Relation::kLe:
        if (!(lhs <= c.rhs)) return false;
        break;
      case Relation::kEq:
        if (lhs != c.rhs) return false;
        break;
      case Relation::kGe:
        if (!(lhs >= c.rhs)) return false;
        break;
    }
  }
  return true;
}

std::string LinearSystem::ExportText() const {
  std::ostringstream out;
  out << "vars:";
  for (int j = 0; j < num_variables(); ++j) {
    out << " " << names_[j];
    if (nonnegative_[j]) out << ">=0";
  }
  out << "\n";
  auto print_expr = [&](const LinearExpr& expr) {
    bool first = true;
    for (const auto& [var, coef] : expr.terms) {
      if (!first) out << " + ";
      first = false;
      out << FormatRational(coef) << "*" << names_[var];
    }
    if (first) out << "0";
  };
  if (objective_.has_value()) {
    out << "maximize: ";
    print_expr(*objective_);
    out << "\n";
  }
  for (const auto& c : constraints_) {
    out << c.name << ": ";
    print_expr(c.expr);
    switch (c.relation) {
      case Relation::kLe:
        out << " <= ";
        break;
      case Relation::kEq:
        out << " = ";
        break;
      case Relation::kGe:
        out << " >= ";
        break;
    }
    out << FormatRational(c.rhs) << "\n";
  }
  return out.str();
}

namespace {

// Shared state of one BuildSystem run.
class SystemBuilder {
 public:
  SystemBuilder(const Game& game, Concept concept_kind,
                const std::vector<StrategyProfile>& support, SystemMode mode,
                const Rational& threshold)
      : game_(game),
        concept_(concept_kind),
        support_(support),
        mode_(mode),
        threshold_(threshold) {}

  BuiltSystem Build() {
    if (!HasLinearSystem(concept_)) {
      throw std::invalid_argument("no linear constraint system exists for " +
                                  ConceptName(concept_) +
                                  "; supported: efce, efcce, nfcce, afce, "
                                  "afcce");
    }
    if (support_.empty()) {
      throw std::invalid_argument("support must be non-empty");
    }
    for (const auto& profile : support_) CheckProfileShape(game_, profile);
    for (std::size_t k = 1; k < support_.size(); ++k) {
      for (std::size_t l = 0; l < k; ++l) {
        if (support_[k] == support_[l]) {
          throw std::invalid_argument("duplicate profiles in support");
        }
      }
    }
    histories_ = BuildRelevantHistories(game_, concept_);

    DeclareVariables();
    EmitDistributionBlock();
    EmitHonestPayoffs();
    EmitDeviations();
    EmitIncentives();
    EmitThresholdOrObjective();

    BuiltSystem built;
    built.support = support_;
    built.histories = std::move(histories_);
    built.count_bound = CountBound();
    const std::size_t total =
        system_.num_variables() + system_.constraints().size();
    if (total > built.count_bound) {
      throw std::logic_error("system size " + std::to_string(total) +
                             " exceeds its bound " +
                             std::to_string(built.count_bound));
    }
    built.system = std::move(system_);
    return built;
  }

 private:
  std::string Hex(std::uint64_t h) const {
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
  }

  int ZVar(const HistoryTuple& tuple) const {
    auto it = z_vars_.find(tuple);
    if (it == z_vars_.end()) {
      throw std::logic_error("constraint references a history outside the "
                             "relevant family");
    }
    return it->second;
  }

  std::string TriggerTag(int infoset, int action) const {
    if (infoset < 0) return "eps";
    std::string tag = game_.infoset(infoset).id;
    if (action >= 0) tag += "@" + game_.infoset(infoset).actions[action];
    return tag;
  }

  void DeclareVariables() {
    for (std::size_t k = 0; k < support_.size(); ++k) {
      x_vars_.push_back(
          system_.AddVariable("x_" + std::to_string(k), /*nonnegative=*/true));
    }
    for (const auto& tuple : histories_.all) {
      z_vars_[tuple] =
          system_.AddVariable("z_" + Hex(TupleHash(game_, tuple)));
    }
    // Honest-payoff variables.
    for (int i = 1; i <= game_.num_players(); ++i) {
      if (concept_ == Concept::kNfcce) {
        u_player_[i] = system_.AddVariable("u_" + std::to_string(i));
        continue;
      }
      for (int s : game_.player_infosets(i)) {
        const Infoset& is = game_.infoset(s);
        if (concept_ == Concept::kEfce || concept_ == Concept::kAfce) {
          for (int a = 0; a < static_cast<int>(is.actions.size()); ++a) {
            u_infoset_action_[{s, a}] = system_.AddVariable(
                "u_" + std::to_string(i) + "_" + is.id + "_" + is.actions[a]);
          }
        } else {
          u_infoset_[s] =
              system_.AddVariable("u_" + std::to_string(i) + "_" + is.id);
        }
      }
    }
    // Best-deviation variables.
    for (int i = 1; i <= game_.num_players(); ++i) {
      switch (concept_) {
        case Concept::kEfce:
          for (int s : game_.player_infosets(i)) {
            const Infoset& is = game_.infoset(s);
            for (int a = 0; a < static_cast<int>(is.actions.size()); ++a) {
              DeclareRecursionVariables(i, s, a, s);
            }
          }
          break;
        case Concept::kEfcce:
          for (int s : game_.player_infosets(i)) {
            DeclareRecursionVariables(i, s, -1, s);
          }
          break;
        case Concept::kNfcce:
          v_eps_[i] =
              system_.AddVariable("v_" + std::to_string(i) + "_eps");
          DeclareRecursionVariables(i, -1, -1, Game::kRootInfoset);
          break;
        case Concept::kAfce:
          for (int s : game_.player_infosets(i)) {
            const Infoset& is = game_.infoset(s);
            const int num_actions = static_cast<int>(is.actions.size());
            for (int a = 0; a < num_actions; ++a) {
              for (int b = 0; b < num_actions; ++b) {
                v_swap_[{s, a, b}] = system_.AddVariable(
                    "v_" + std::to_string(i) + "_" + TriggerTag(s, a) + "_" +
                    is.actions[b]);
              }
            }
          }
          break;
        case Concept::kAfcce:
          for (int s : game_.player_infosets(i)) {
            const Infoset& is = game_.infoset(s);
            for (int b = 0; b < static_cast<int>(is.actions.size()); ++b) {
              v_swap_[{s, -1, b}] = system_.AddVariable(
                  "v_" + std::to_string(i) + "_" + TriggerTag(s, -1) + "_" +
                  is.actions[b]);
            }
          }
          break;
        default:
          break;
      }
    }
  }

  // Variables v_<i>_<tag>_<I'> and v_<i>_<tag>_<I'>_<a'> for every I' at or
  // after the region start.
  void DeclareRecursionVariables(int player, int trigger_infoset,
                                 int trigger_action, int start) {
    const std::string tag = TriggerTag(trigger_infoset, trigger_action);
    for (int s : game_.player_infosets(player)) {
      if (!game_.InfosetLeq(start, s)) continue;
      const Infoset& is = game_.infoset(s);
      v_infoset_[{trigger_infoset, trigger_action, s}] = system_.AddVariable(
          "v_" + std::to_string(player) + "_" + tag + "_" + is.id);
      for (int a = 0; a < static_cast<int>(is.actions.size()); ++a) {
        v_infoset_action_[{trigger_infoset, trigger_action, s, a}] =
            system_.AddVariable("v_" + std::to_string(player) + "_" + tag +
                                "_" + is.id + "_" + is.actions[a]);
      }
    }
  }

  void EmitDistributionBlock() {
    for (std::size_t k = 0; k < support_.size(); ++k) {
      Constraint lo;
      lo.name = "c1lo_" + std::to_string(k);
      lo.expr.Add(x_vars_[k], Rational(1));
      lo.relation = Relation::kGe;
      lo.rhs = 0;
      system_.AddConstraint(std::move(lo));
      Constraint hi;
      hi.name = "c1hi_" + std::to_string(k);
      hi.expr.Add(x_vars_[k], Rational(1));
      hi.relation = Relation::kLe;
      hi.rhs = 1;
      system_.AddConstraint(std::move(hi));
    }
    Constraint c2;
    c2.name = "c2";
    for (int x : x_vars_) c2.expr.Add(x, Rational(1));
    c2.relation = Relation::kEq;
    c2.rhs = 1;
    system_.AddConstraint(std::move(c2));
    for (const auto& tuple : histories_.all) {
      Constraint c3;
      c3.name = "c3_" + Hex(TupleHash(game_, tuple));
      c3.expr.Add(z_vars_.at(tuple), Rational(1));
      for (std::size_t k = 0; k < support_.size(); ++k) {
        if (ConsistentWithHistoryTuple(game_, support_[k], tuple)) {
          c3.expr.Add(x_vars_[k], Rational(-1));
        }
      }
      c3.relation = Relation::kEq;
      c3.rhs = 0;
      system_.AddConstraint(std::move(c3));
    }
  }

  // Leaf coefficient u_i(v) * P_C(v).
  Rational LeafCoefficient(int leaf, int player) const {
    return game_.node(leaf).payoff[player - 1] * game_.ChanceReach(leaf);
  }

  void EmitHonestPayoffs() {
    for (int i = 1; i <= game_.num_players(); ++i) {
      if (concept_ == Concept::kNfcce) {
        Constraint c;
        c.name = "def_u_" + std::to_string(i);
        c.expr.Add(u_player_.at(i), Rational(1));
        for (int leaf : game_.leaves()) {
          c.expr.Add(ZVar(HonestTuple(game_, leaf)),
                     -LeafCoefficient(leaf, i));
        }
        c.relation = Relation::kEq;
        c.rhs = 0;
        system_.AddConstraint(std::move(c));
        continue;
      }
      for (int s : game_.player_infosets(i)) {
        const Infoset& is = game_.infoset(s);
        if (concept_ == Concept::kEfce || concept_ == Concept::kAfce) {
          for (int a = 0; a < static_cast<int>(is.actions.size()); ++a) {
            Constraint c;
            c.name = "def_u_" + std::to_string(i) + "_" + is.id + "_" +
                     is.actions[a];
            c.expr.Add(u_infoset_action_.at({s, a}), Rational(1));
            for (int leaf : game_.leaves()) {
              if (HistoryHasEntry(game_.History(leaf, i), s, a)) {
                c.expr.Add(ZVar(HonestTuple(game_, leaf)),
                           -LeafCoefficient(leaf, i));
              }
            }
            c.relation = Relation::kEq;
            c.rhs = 0;
            system_.AddConstraint(std::move(c));
          }
        } else {
          Constraint c;
          c.name = "def_u_" + std::to_string(i) + "_" + is.id;
          c.expr.Add(u_infoset_.at(s), Rational(1));
          for (int leaf : game_.leaves()) {
            if (game_.NodeBelow(leaf, s)) {
              c.expr.Add(ZVar(HonestTuple(game_, leaf)),
                         -LeafCoefficient(leaf, i));
            }
          }
          c.relation = Relation::kEq;
          c.rhs = 0;
          system_.AddConstraint(std::move(c));
        }
      }
    }
  }

  static bool HistoryHasEntry(const PlayerHistory& h, int infoset,
                              int action) {
    for (const auto& entry : h) {
      if (entry.first == infoset && entry.second == action) return true;
    }
    return false;
  }

  static bool HistoryPrefix(const PlayerHistory& prefix,
                            const PlayerHistory& h) {
    if (prefix.size() > h.size()) return false;
    return std::equal(prefix.begin(), prefix.end(), h.begin());
  }

  // Deviation-history coordinate of player i for the trigger.
  PlayerHistory DeviationCoordinate(int trigger_infoset, int trigger_action,
                                    int leaf) const {
    switch (concept_) {
      case Concept::kEfce:
        return EfceCoordinate(game_, trigger_infoset, trigger_action);
      case Concept::kEfcce:
        return EfcceCoordinate(game_, trigger_infoset);
      case Concept::kNfcce:
        return PlayerHistory{};
      case Concept::kAfce:
        return AfceCoordinate(game_, trigger_infoset, trigger_action, leaf);
      case Concept::kAfcce:
        return AfcceCoordinate(game_, trigger_infoset, leaf);
      default:
        throw std::logic_error("unsupported concept");
    }
  }

  // Equalities and relaxations of the best-deviation recursion for one
  // trigger of one player.
  void EmitRecursion(int player, int trigger_infoset, int trigger_action,
                     int start) {
    const std::string tag = TriggerTag(trigger_infoset, trigger_action);
    if (concept_ == Concept::kNfcce) {
      Constraint c;
      c.name = "def_v_" + std::to_string(player) + "_eps";
      c.expr.Add(v_eps_.at(player), Rational(1));
      AddRecursionTerms(&c.expr, player, trigger_infoset, trigger_action,
                        PlayerHistory{});
      c.relation = Relation::kEq;
      c.rhs = 0;
      system_.AddConstraint(std::move(c));
    }
    for (int s : game_.player_infosets(player)) {
      if (!game_.InfosetLeq(start, s)) continue;
      const Infoset& is = game_.infoset(s);
      for (int a = 0; a < static_cast<int>(is.actions.size()); ++a) {
        PlayerHistory h = is.history;
        h.emplace_back(s, a);
        Constraint c;
        c.name = "def_v_" + std::to_string(player) + "_" + tag + "_" + is.id +
                 "_" + is.actions[a];
        c.expr.Add(v_infoset_action_.at({trigger_infoset, trigger_action, s, a}),
                   Rational(1));
        AddRecursionTerms(&c.expr, player, trigger_infoset, trigger_action, h);
        c.relation = Relation::kEq;
        c.rhs = 0;
        system_.AddConstraint(std::move(c));
      }
      for (int a = 0; a < static_cast<int>(is.actions.size()); ++a) {
        Constraint r;
        r.name = "relax_v_" + std::to_string(player) + "_" + tag + "_" +
                 is.id + "_" + is.actions[a];
        r.expr.Add(v_infoset_.at({trigger_infoset, trigger_action, s}),
                   Rational(1));
        r.expr.Add(v_infoset_action_.at({trigger_infoset, trigger_action, s, a}),
                   Rational(-1));
        r.relation = Relation::kGe;
        r.rhs = 0;
        system_.AddConstraint(std::move(r));
      }
    }
  }

  // -(leaf terms) - (next infoset values) for the history h, moved to the
  // left-hand side of the defining equality.
  void AddRecursionTerms(LinearExpr* expr, int player, int trigger_infoset,
                         int trigger_action, const PlayerHistory& h) {
    for (int leaf : game_.LeavesWithHistory(player, h)) {
      const HistoryTuple tuple = WithCoordinate(
          game_, leaf, player,
          DeviationCoordinate(trigger_infoset, trigger_action, leaf));
      expr->Add(ZVar(tuple), -LeafCoefficient(leaf, player));
    }
    for (int next : game_.InfosetsWithHistory(player, h)) {
      expr->Add(v_infoset_.at({trigger_infoset, trigger_action, next}),
                Rational(-1));
    }
  }

  void EmitDeviations() {
    for (int i = 1; i <= game_.num_players(); ++i) {
      switch (concept_) {
        case Concept::kEfce:
          for (int s : game_.player_infosets(i)) {
            const Infoset& is = game_.infoset(s);
            for (int a = 0; a < static_cast<int>(is.actions.size()); ++a) {
              EmitRecursion(i, s, a, s);
            }
          }
          break;
        case Concept::kEfcce:
          for (int s : game_.player_infosets(i)) {
            EmitRecursion(i, s, -1, s);
          }
          break;
        case Concept::kNfcce:
          EmitRecursion(i, -1, -1, Game::kRootInfoset);
          break;
        case Concept::kAfce:
        case Concept::kAfcce:
          for (int s : game_.player_infosets(i)) {
            const Infoset& is = game_.infoset(s);
            const int num_actions = static_cast<int>(is.actions.size());
            const int num_recommended =
                concept_ == Concept::kAfce ? num_actions : 1;
            for (int a = 0; a < num_recommended; ++a) {
              const int rec = concept_ == Concept::kAfce ? a : -1;
              for (int b = 0; b < num_actions; ++b) {
                PlayerHistory deviated = is.history;
                deviated.emplace_back(s, b);
                Constraint c;
                c.name = "def_v_" + std::to_string(i) + "_" +
                         TriggerTag(s, rec) + "_" + is.actions[b];
                c.expr.Add(v_swap_.at({s, rec, b}), Rational(1));
                for (int leaf : game_.leaves()) {
                  if (!HistoryPrefix(deviated, game_.History(leaf, i))) {
                    continue;
                  }
                  const HistoryTuple tuple = WithCoordinate(
                      game_, leaf, i, DeviationCoordinate(s, rec, leaf));
                  c.expr.Add(ZVar(tuple), -LeafCoefficient(leaf, i));
                }
                c.relation = Relation::kEq;
                c.rhs = 0;
                system_.AddConstraint(std::move(c));
              }
            }
          }
          break;
        default:
          break;
      }
    }
  }

  void EmitIncentives() {
    for (int i = 1; i <= game_.num_players(); ++i) {
      switch (concept_) {
        case Concept::kEfce:
          for (int s : game_.player_infosets(i)) {
            const Infoset& is = game_.infoset(s);
            for (int a = 0; a < static_cast<int>(is.actions.size()); ++a) {
              Constraint c;
              c.name = "inc_" + std::to_string(i) + "_" + is.id + "_" +
                       is.actions[a];
              c.expr.Add(u_infoset_action_.at({s, a}), Rational(1));
              c.expr.Add(v_infoset_.at({s, a, s}), Rational(-1));
              c.relation = Relation::kGe;
              c.rhs = 0;
              system_.AddConstraint(std::move(c));
            }
          }
          break;
        case Concept::kEfcce:
          for (int s : game_.player_infosets(i)) {
            Constraint c;
            c.name = "inc_" + std::to_string(i) + "_" + game_.infoset(s).id;
            c.expr.Add(u_infoset_.at(s), Rational(1));
            c.expr.Add(v_infoset_.at({s, -1, s}), Rational(-1));
            c.relation = Relation::kGe;
            c.rhs = 0;
            system_.AddConstraint(std::move(c));
          }
          break;
        case Concept::kNfcce: {
          Constraint c;
          c.name = "inc_" + std::to_string(i);
          c.expr.Add(u_player_.at(i), Rational(1));
          c.expr.Add(v_eps_.at(i), Rational(-1));
          c.relation = Relation::kGe;
          c.rhs = 0;
          system_.AddConstraint(std::move(c));
          break;
        }
        case Concept::kAfce:
        case Concept::kAfcce:
          for (int s : game_.player_infosets(i)) {
            const Infoset& is = game_.infoset(s);
            const int num_actions = static_cast<int>(is.actions.size());
            const int num_recommended =
                concept_ == Concept::kAfce ? num_actions : 1;
            for (int a = 0; a < num_recommended; ++a) {
              const int rec = concept_ == Concept::kAfce ? a : -1;
              for (int b = 0; b < num_actions; ++b) {
                Constraint c;
                c.name = "inc_" + std::to_string(i) + "_" +
                         TriggerTag(s, rec) + "_" + is.actions[b];
                if (concept_ == Concept::kAfce) {
                  c.expr.Add(u_infoset_action_.at({s, a}), Rational(1));
                } else {
                  c.expr.Add(u_infoset_.at(s), Rational(1));
                }
                c.expr.Add(v_swap_.at({s, rec, b}), Rational(-1));
                c.relation = Relation::kGe;
                c.rhs = 0;
                system_.AddConstraint(std::move(c));
              }
            }
          }
          break;
        default:
          break;
      }
    }
  }

  void EmitThresholdOrObjective() {
    LinearExpr value;
    for (int leaf : game_.leaves()) {
      value.Add(ZVar(HonestTuple(game_, leaf)),
                game_.LeafObjective(leaf) * game_.ChanceReach(leaf));
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
  }

  std::size_t CountBound() const {
    // The recursion variables for EFCE/EFCCE are quadratic in each player's
    // infoset count: one block per trigger times one entry per reachable
    // infoset.
    const std::size_t amax = std::max(1, game_.max_actions());
    std::size_t per_player = 0;
    for (int i = 1; i <= game_.num_players(); ++i) {
      const std::size_t k = game_.player_infosets(i).size();
      per_player += (k + 1) * (k + 1) * amax * amax;
    }
    return 8 * (histories_.all.size() + support_.size() + per_player + 1);
  }

  const Game& game_;
  Concept concept_;
  const std::vector<StrategyProfile>& support_;
  SystemMode mode_;
  Rational threshold_;

  LinearSystem system_;
  RelevantHistories histories_;
  std::vector<int> x_vars_;
  std::map<HistoryTuple, int> z_vars_;
  std::map<int, int> u_player_;                     // NFCCE
  std::map<int, int> u_infoset_;                    // EFCCE, AFCCE
  std::map<std::pair<int, int>, int> u_infoset_action_;  // EFCE, AFCE
  std::map<int, int> v_eps_;                        // NFCCE
  std::map<std::tuple<int, int, int>, int> v_infoset_;
  std::map<std::tuple<int, int, int, int>, int> v_infoset_action_;
  std::map<std::tuple<int, int, int>, int> v_swap_;  // AFCE (I,a,b), AFCCE (I,-1,b)
};

}  // namespace

BuiltSystem BuildSystem(const Game& game, Concept concept_kind,
                        const std::vector<StrategyProfile>& support,
                        SystemMode mode, const Rational& threshold) {
  return SystemBuilder(game, concept_kind, support, mode, threshold).Build();
}

CorrelationPlan ExtractPlan(const Game& game, const BuiltSystem& built,
                            const std::map<std::string, Rational>& assignment) {
  std::map<StrategyProfile, Rational> support;
  Rational sum(0);
  for (std::size_t k = 0; k < built.support.size(); ++k) {
    auto it = assignment.find("x_" + std::to_string(k));
    const Rational value = it == assignment.end() ? Rational(0) : it->second;
    if (value < 0) {
      throw std::logic_error("solution assigns a negative probability");
    }
    sum += value;
    if (value > 0) {
      CheckProfileShape(game, built.support[k]);
      support.emplace(built.support[k], value);
    }
  }
  if (sum != 1) {
    throw std::logic_error("solution's x block sums to " +
                           FormatRational(sum) + ", expected 1");
  }
  return CorrelationPlan::Create(std::move(support));
}

}  // namespace corrplan
