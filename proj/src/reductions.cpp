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

#include "corrplan/reductions.h"

#include <algorithm>
#include <set>
#include <sstream>

namespace corrplan {
namespace {

std::vector<std::string> Tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

int VariableIndex(const std::vector<std::string>& variables,
                  const std::string& name) {
  for (std::size_t k = 0; k < variables.size(); ++k) {
    if (variables[k] == name) return static_cast<int>(k);
  }
  return -1;
}

std::vector<Rational> ZeroPayoff(int players) {
  return std::vector<Rational>(players, Rational(0));
}

}  // namespace

std::string LiteralLabel(const std::string& variable, bool positive) {
  return positive ? variable : "not_" + variable;
}

QbfFormula ParseQbf(const std::string& text, bool pad) {
  struct Quantifier {
    std::string name;
    bool existential;
  };
  std::vector<Quantifier> prefix;
  std::vector<std::vector<std::string>> raw_terms;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const std::vector<std::string> tokens = Tokenize(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens[0] == "exists" || tokens[0] == "forall") {
      if (tokens.size() != 2) {
        throw ParseError("quantifier line needs exactly one variable: '" +
                         line + "'");
      }
      if (!raw_terms.empty()) {
        throw ParseError("quantifier after the first term line");
      }
      prefix.push_back({tokens[1], tokens[0] == "exists"});
    } else if (tokens[0] == "term") {
      if (tokens.size() < 2) {
        throw ParseError("term line without literals");
      }
      raw_terms.emplace_back(tokens.begin() + 1, tokens.end());
    } else {
      throw ParseError("unknown directive '" + tokens[0] + "'");
    }
  }
  if (prefix.empty()) throw ParseError("formula has no quantifiers");
  if (raw_terms.empty()) throw ParseError("formula has no terms");
  {
    std::set<std::string> seen;
    for (const auto& q : prefix) {
      if (!seen.insert(q.name).second) {
        throw ParseError("variable '" + q.name + "' quantified twice");
      }
    }
  }

  // Restore strict exists/forall alternation.
  std::set<std::string> taken;
  for (const auto& q : prefix) taken.insert(q.name);
  std::vector<Quantifier> padded;
  int fresh = 0;
  for (const auto& q : prefix) {
    const bool expect_existential = padded.size() % 2 == 0;
    if (q.existential != expect_existential) {
      if (q.existential || !pad) {
        throw ParseError(
            "prefix is not an alternating exists/forall sequence" +
            std::string(pad ? "; padding only inserts existential variables"
                            : "; rerun with --pad to insert fresh "
                              "existential variables"));
      }
      std::string name;
      do {
        name = "_pad" + std::to_string(++fresh);
      } while (taken.count(name));
      taken.insert(name);
      padded.push_back({name, true});
    }
    padded.push_back(q);
  }
  if (padded.size() % 2 != 0) {
    throw ParseError("prefix ends with an unmatched existential quantifier" +
                     std::string(pad ? "; padding only inserts existential "
                                       "variables"
                                     : ""));
  }

  QbfFormula formula;
  for (const auto& q : padded) formula.variables.push_back(q.name);
  for (const auto& raw : raw_terms) {
    std::vector<int> term;
    for (const auto& token : raw) {
      const bool positive = token[0] != '-';
      const std::string name = positive ? token : token.substr(1);
      const int index = VariableIndex(formula.variables, name);
      if (index < 0) {
        throw ParseError("literal over unquantified variable '" + name + "'");
      }
      term.push_back(positive ? index + 1 : -(index + 1));
    }
    formula.terms.push_back(std::move(term));
  }
  return formula;
}

bool TermSatisfied(const QbfFormula& formula, int term,
                   const QbfAssignment& assignment) {
  for (int lit : formula.terms[term]) {
    const bool value = assignment[std::abs(lit) - 1];
    if (value != (lit > 0)) return false;
  }
  return true;
}

bool MatrixSatisfied(const QbfFormula& formula,
                     const QbfAssignment& assignment) {
  for (std::size_t t = 0; t < formula.terms.size(); ++t) {
    if (TermSatisfied(formula, static_cast<int>(t), assignment)) return true;
  }
  return false;
}

Game ReduceQbf(const QbfFormula& formula) {
  const int n = formula.pairs();
  if (n < 1) throw ParseError("formula needs at least one quantifier pair");
  const int players = n + 2;
  const int m = static_cast<int>(formula.terms.size());
  GameDef def;
  def.players = players;

  // Pair index (1-based) of each variable in quantification order.
  auto pair_of = [](int var_index) { return var_index / 2 + 1; };
  auto universal_of = [](int var_index) {
    return var_index % 2 == 1 ? var_index / 2 + 1 : -1;
  };

  // Information sets: assignment player, universal players, formula player.
  for (int z = 0; z < 2 * n; ++z) {
    def.infosets.push_back(
        {"A_" + formula.variables[z], 1, {"bot", "top"}});
  }
  for (int j = 1; j <= n; ++j) {
    for (int z = 0; z < 2 * j; ++z) {
      GameDef::InfosetDef is;
      is.id = "I_" + std::to_string(j) + "_" + formula.variables[z];
      is.player = j + 2;
      is.actions = universal_of(z) == j
                       ? std::vector<std::string>{"bot", "check", "top"}
                       : std::vector<std::string>{"bot", "top"};
      def.infosets.push_back(std::move(is));
    }
  }
  {
    GameDef::InfosetDef is;
    is.id = "I_phi";
    is.player = 2;
    for (int t = 1; t <= m; ++t) is.actions.push_back("t" + std::to_string(t));
    def.infosets.push_back(std::move(is));
  }

  // Root chance node.
  {
    GameDef::NodeDef root;
    root.id = "C";
    root.kind = "chance";
    for (int z = 0; z < 2 * n; ++z) {
      root.edges.push_back({true, "", Rational(1, 2 * n),
                            "A_" + formula.variables[z]});
    }
    def.nodes.push_back(std::move(root));
  }

  for (int z = 0; z < 2 * n; ++z) {
    const std::string& name = formula.variables[z];
    const int i = pair_of(z);
    // Assignment node: top asserts the variable, bot its negation.
    {
      GameDef::NodeDef node;
      node.id = "A_" + name;
      node.kind = "player";
      node.player = 1;
      node.infoset = "A_" + name;
      node.edges.push_back({false, "top", Rational(0), "C_" + name});
      node.edges.push_back({false, "bot", Rational(0), "C_not_" + name});
      def.nodes.push_back(std::move(node));
    }
    for (bool positive : {true, false}) {
      const std::string lit = LiteralLabel(name, positive);
      // Chance node dispatching to the formula player or a universal player.
      GameDef::NodeDef chance;
      chance.id = "C_" + lit;
      chance.kind = "chance";
      const Rational p(1, n - i + 2);
      chance.edges.push_back({true, "", p, "F_" + lit});
      for (int j = i; j <= n; ++j) {
        chance.edges.push_back(
            {true, "", p, "U_" + std::to_string(j) + "_" + lit});
      }
      def.nodes.push_back(std::move(chance));

      // Universal players' nodes.
      for (int j = i; j <= n; ++j) {
        GameDef::NodeDef node;
        node.id = "U_" + std::to_string(j) + "_" + lit;
        node.kind = "player";
        node.player = j + 2;
        node.infoset = "I_" + std::to_string(j) + "_" + name;
        const bool uncertainty = universal_of(z) == j;
        const std::vector<std::string> actions =
            uncertainty ? std::vector<std::string>{"top", "bot", "check"}
                        : std::vector<std::string>{"top", "bot"};
        for (const std::string& action : actions) {
          const std::string leaf_id = node.id + "_" + action;
          node.edges.push_back({false, action, Rational(0), leaf_id});
          GameDef::NodeDef leaf;
          leaf.id = leaf_id;
          leaf.kind = "leaf";
          leaf.payoff = ZeroPayoff(players);
          const bool guessed_right = (action == "top") == positive;
          if (uncertainty) {
            // Correct guess rewards the guesser; declining to guess pays the
            // guesser 1 and the formula player 2.
            if (action == "check") {
              leaf.payoff[j + 1] = 1;
              leaf.payoff[1] = 2;
            } else if (guessed_right) {
              leaf.payoff[j + 1] = 2;
            }
          } else if (action != "check" && guessed_right) {
            // Knowledge gadget: only the formula player is paid.
            leaf.payoff[1] = 3;
          }
          def.nodes.push_back(std::move(leaf));
        }
        def.nodes.push_back(std::move(node));
      }

      // Formula player's node.
      {
        GameDef::NodeDef node;
        node.id = "F_" + lit;
        node.kind = "player";
        node.player = 2;
        node.infoset = "I_phi";
        for (int t = 0; t < m; ++t) {
          const std::string action = "t" + std::to_string(t + 1);
          const std::string leaf_id = node.id + "_" + action;
          node.edges.push_back({false, action, Rational(0), leaf_id});
          GameDef::NodeDef leaf;
          leaf.id = leaf_id;
          leaf.kind = "leaf";
          leaf.payoff = ZeroPayoff(players);
          // The term survives unless it contains the complement literal.
          const int complement = positive ? -(z + 1) : z + 1;
          const bool falsified =
              std::find(formula.terms[t].begin(), formula.terms[t].end(),
                        complement) != formula.terms[t].end();
          if (!falsified) leaf.payoff[1] = 3;
          def.nodes.push_back(std::move(leaf));
        }
        def.nodes.push_back(std::move(node));
      }
    }
  }
  def.root = "C";
  return Game::FromDef(def);
}

namespace {

// Checks the explicit-proof subtree shape: every universal variable branches
// both ways, every existential one exactly once.
void CheckProofShape(const QbfFormula& formula,
                     const std::vector<const QbfAssignment*>& subset,
                     std::size_t level) {
  if (subset.empty()) {
    throw std::invalid_argument("proof subtree has an empty branch");
  }
  if (level == formula.variables.size()) return;
  std::vector<const QbfAssignment*> low, high;
  for (const QbfAssignment* theta : subset) {
    ((*theta)[level] ? high : low).push_back(theta);
  }
  const bool existential = level % 2 == 0;
  if (existential) {
    if (!low.empty() && !high.empty()) {
      throw std::invalid_argument(
          "proof branches twice at existential variable '" +
          formula.variables[level] + "'");
    }
    CheckProofShape(formula, low.empty() ? high : low, level + 1);
  } else {
    if (low.empty() || high.empty()) {
      throw std::invalid_argument(
          "proof misses a branch at universal variable '" +
          formula.variables[level] + "'");
    }
    CheckProofShape(formula, low, level + 1);
    CheckProofShape(formula, high, level + 1);
  }
}

// Ordinal of an action label at a game infoset.
int OrdinalOf(const Game& game, int infoset, const std::string& label) {
  const auto& actions = game.infoset(infoset).actions;
  const auto it = std::lower_bound(actions.begin(), actions.end(), label);
  if (it == actions.end() || *it != label) {
    throw std::logic_error("action '" + label + "' missing at '" +
                           game.infoset(infoset).id + "'");
  }
  return static_cast<int>(it - actions.begin());
}

PureStrategy MakeStrategy(
    const Game& game, int player,
    const std::function<std::string(const Infoset&)>& pick) {
  PureStrategy sigma;
  sigma.player = player;
  for (int s : game.player_infosets(player)) {
    sigma.actions.push_back(OrdinalOf(game, s, pick(game.infoset(s))));
  }
  return sigma;
}

}  // namespace

CorrelationPlan QbfProofPlan(const Game& game, const QbfFormula& formula,
                             const std::vector<QbfAssignment>& proof) {
  const int n = formula.pairs();
  std::set<QbfAssignment> dedup;
  for (const auto& theta : proof) {
    if (static_cast<int>(theta.size()) != 2 * n) {
      throw std::invalid_argument("assignment length differs from prefix");
    }
    if (!MatrixSatisfied(formula, theta)) {
      throw std::invalid_argument("a proof assignment falsifies the matrix");
    }
    if (!dedup.insert(theta).second) {
      throw std::invalid_argument("duplicate assignment in proof");
    }
  }
  std::vector<const QbfAssignment*> all;
  for (const auto& theta : dedup) all.push_back(&theta);
  CheckProofShape(formula, all, 0);

  std::map<StrategyProfile, Rational> support;
  const Rational weight(1, static_cast<long>(dedup.size()));
  for (const QbfAssignment* theta : all) {
    int term = -1;
    for (std::size_t t = 0; t < formula.terms.size(); ++t) {
      if (TermSatisfied(formula, static_cast<int>(t), *theta)) {
        term = static_cast<int>(t);
        break;
      }
    }
    StrategyProfile profile;
    // Assignment player echoes theta.
    profile.strategies.push_back(MakeStrategy(game, 1, [&](const Infoset& is) {
      const int z = VariableIndex(formula.variables, is.id.substr(2));
      return (*theta)[z] ? "top" : "bot";
    }));
    // Formula player commits to the satisfied term.
    profile.strategies.push_back(MakeStrategy(game, 2, [&](const Infoset&) {
      return "t" + std::to_string(term + 1);
    }));
    // Universal players decline at their own variable and echo theta at
    // earlier ones.
    for (int j = 1; j <= n; ++j) {
      const std::string prefix = "I_" + std::to_string(j) + "_";
      profile.strategies.push_back(
          MakeStrategy(game, j + 2, [&](const Infoset& is) -> std::string {
            const std::string name = is.id.substr(prefix.size());
            const int z = VariableIndex(formula.variables, name);
            if (z == 2 * j - 1) return "check";
            return (*theta)[z] ? "top" : "bot";
          }));
    }
    support.emplace(std::move(profile), weight);
  }
  return CorrelationPlan::Create(std::move(support));
}

CnfFormula ParseDimacs(const std::string& text) {
  CnfFormula formula;
  std::istringstream in(text);
  std::string line;
  int declared_vars = -1;
  std::vector<int> pending;
  while (std::getline(in, line)) {
    const std::vector<std::string> tokens = Tokenize(line);
    if (tokens.empty() || tokens[0] == "c" || tokens[0][0] == '%') continue;
    if (tokens[0] == "p") {
      if (tokens.size() < 4 || tokens[1] != "cnf") {
        throw ParseError("malformed DIMACS problem line: '" + line + "'");
      }
      declared_vars = std::stoi(tokens[2]);
      continue;
    }
    for (const std::string& token : tokens) {
      int lit;
      try {
        lit = std::stoi(token);
      } catch (const std::exception&) {
        throw ParseError("malformed DIMACS literal '" + token + "'");
      }
      if (lit == 0) {
        if (pending.empty()) {
          throw ParseError("DIMACS input contains an empty clause");
        }
        formula.clauses.push_back(pending);
        pending.clear();
      } else {
        if (declared_vars >= 0 && std::abs(lit) > declared_vars) {
          throw ParseError("literal " + token +
                           " out of the declared variable range");
        }
        pending.push_back(lit);
      }
    }
  }
  if (!pending.empty()) {
    throw ParseError("DIMACS input ends inside a clause (missing 0)");
  }
  if (formula.clauses.empty()) {
    throw ParseError("DIMACS input has no clauses");
  }
  int max_var = declared_vars;
  for (const auto& clause : formula.clauses) {
    for (int lit : clause) max_var = std::max(max_var, std::abs(lit));
  }
  for (int v = 1; v <= max_var; ++v) {
    formula.variables.push_back("x" + std::to_string(v));
  }
  return formula;
}

bool SatisfiesCnf(const CnfFormula& formula, const CnfAssignment& assignment) {
  for (const auto& clause : formula.clauses) {
    bool satisfied = false;
    for (int lit : clause) {
      if (assignment[std::abs(lit) - 1] == (lit > 0)) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied) return false;
  }
  return true;
}

Game ReduceSat3(const CnfFormula& formula) {
  const int m = static_cast<int>(formula.clauses.size());
  GameDef def;
  def.players = 2;

  // Spoiler information sets are singletons; the formula player has one
  // information set per variable that occurs in some clause.
  {
    GameDef::InfosetDef root;
    root.id = "R";
    root.player = 1;
    root.actions.push_back("end");
    for (int i = 1; i <= m; ++i) {
      root.actions.push_back("c" + std::to_string(i));
    }
    def.infosets.push_back(std::move(root));
  }
  std::vector<std::vector<std::string>> clause_actions(m);
  std::set<int> used_vars;
  for (int i = 0; i < m; ++i) {
    std::set<std::string> labels;
    for (int lit : formula.clauses[i]) {
      labels.insert(LiteralLabel(formula.variables[std::abs(lit) - 1],
                                 lit > 0));
      used_vars.insert(std::abs(lit));
    }
    clause_actions[i].assign(labels.begin(), labels.end());
    def.infosets.push_back({"C" + std::to_string(i + 1), 1,
                            clause_actions[i]});
  }
  for (int v : used_vars) {
    def.infosets.push_back(
        {"I_" + formula.variables[v - 1], 2, {"bot", "top"}});
  }

  {
    GameDef::NodeDef root;
    root.id = "R";
    root.kind = "player";
    root.player = 1;
    root.infoset = "R";
    root.edges.push_back({false, "end", Rational(0), "L_end"});
    for (int i = 1; i <= m; ++i) {
      root.edges.push_back(
          {false, "c" + std::to_string(i), Rational(0),
           "C" + std::to_string(i)});
    }
    def.nodes.push_back(std::move(root));
    GameDef::NodeDef end;
    end.id = "L_end";
    end.kind = "leaf";
    end.payoff = {Rational(-1), Rational(2)};
    def.nodes.push_back(std::move(end));
  }

  for (int i = 0; i < m; ++i) {
    GameDef::NodeDef clause_node;
    clause_node.id = "C" + std::to_string(i + 1);
    clause_node.kind = "player";
    clause_node.player = 1;
    clause_node.infoset = "C" + std::to_string(i + 1);
    for (const std::string& label : clause_actions[i]) {
      const std::string node_id =
          "N_" + label + "_" + std::to_string(i + 1);
      clause_node.edges.push_back({false, label, Rational(0), node_id});
      const bool positive = label.rfind("not_", 0) != 0;
      const std::string var = positive ? label : label.substr(4);
      GameDef::NodeDef literal_node;
      literal_node.id = node_id;
      literal_node.kind = "player";
      literal_node.player = 2;
      literal_node.infoset = "I_" + var;
      for (const std::string& value : {"top", "bot"}) {
        const std::string leaf_id = node_id + "_" + value;
        literal_node.edges.push_back({false, value, Rational(0), leaf_id});
        GameDef::NodeDef leaf;
        leaf.id = leaf_id;
        leaf.kind = "leaf";
        const bool satisfied = (value == "top") == positive;
        leaf.payoff = satisfied
                          ? std::vector<Rational>{Rational(-1), Rational(2)}
                          : std::vector<Rational>{Rational(0), Rational(0)};
        def.nodes.push_back(std::move(leaf));
      }
      def.nodes.push_back(std::move(literal_node));
    }
    def.nodes.push_back(std::move(clause_node));
  }
  def.root = "R";
  return Game::FromDef(def);
}

CorrelationPlan SatPlan(const Game& game, const CnfFormula& formula,
                        const CnfAssignment& theta) {
  if (theta.size() != formula.variables.size()) {
    throw std::invalid_argument("assignment length differs from variables");
  }
  if (!SatisfiesCnf(formula, theta)) {
    throw std::invalid_argument(
        "the assignment does not satisfy the formula");
  }
  StrategyProfile profile;
  profile.strategies.push_back(
      MakeStrategy(game, 1, [&](const Infoset& is) -> std::string {
        if (is.id == "R") return "end";
        const int clause = std::stoi(is.id.substr(1)) - 1;
        for (int lit : formula.clauses[clause]) {
          if (theta[std::abs(lit) - 1] == (lit > 0)) {
            return LiteralLabel(formula.variables[std::abs(lit) - 1],
                                lit > 0);
          }
        }
        throw std::logic_error("satisfying assignment misses clause " +
                               is.id);
      }));
  profile.strategies.push_back(
      MakeStrategy(game, 2, [&](const Infoset& is) -> std::string {
        const std::string var = is.id.substr(2);
        const int v = VariableIndex(formula.variables, var);
        return theta[v] ? "top" : "bot";
      }));
  return CorrelationPlan::Dirac(std::move(profile));
}

}  // namespace corrplan
