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

#include "corrplan/game.h"

#include <algorithm>
#include <set>

namespace corrplan {
namespace {

NodeKind KindFromString(const std::string& kind, const std::string& node_id) {
  if (kind == "chance") return NodeKind::kChance;
  if (kind == "player") return NodeKind::kPlayer;
  if (kind == "leaf") return NodeKind::kLeaf;
  throw ParseError("node '" + node_id + "': unknown kind '" + kind + "'");
}

}  // namespace

Game Game::FromDef(const GameDef& def) {
  Game game;
  if (def.players < 1) {
    throw ParseError("players must be a positive integer");
  }
  game.num_players_ = def.players;
  if (def.objective.empty()) {
    game.objective_.assign(def.players, Rational(1));
  } else if (static_cast<int>(def.objective.size()) == def.players) {
    game.objective_ = def.objective;
  } else {
    throw ParseError("objective weight vector length differs from players");
  }

  // Information sets.
  for (const auto& idef : def.infosets) {
    if (game.infoset_index_.count(idef.id)) {
      throw ParseError("duplicate information set id '" + idef.id + "'");
    }
    if (idef.player < 1 || idef.player > def.players) {
      throw ParseError("information set '" + idef.id + "': player " +
                       std::to_string(idef.player) + " out of range");
    }
    if (idef.actions.empty()) {
      throw ParseError("information set '" + idef.id + "' has no actions");
    }
    Infoset is;
    is.id = idef.id;
    is.player = idef.player;
    is.actions = idef.actions;
    std::sort(is.actions.begin(), is.actions.end());
    if (std::adjacent_find(is.actions.begin(), is.actions.end()) !=
        is.actions.end()) {
      throw ParseError("information set '" + idef.id +
                       "' has duplicate action labels");
    }
    game.infoset_index_[is.id] = static_cast<int>(game.infosets_.size());
    game.infosets_.push_back(std::move(is));
  }
  game.max_actions_ = 0;
  for (const auto& is : game.infosets_) {
    game.max_actions_ =
        std::max(game.max_actions_, static_cast<int>(is.actions.size()));
  }

  // Nodes.
  for (const auto& ndef : def.nodes) {
    if (game.node_index_.count(ndef.id)) {
      throw ParseError("duplicate node id '" + ndef.id + "'");
    }
    Node node;
    node.id = ndef.id;
    node.kind = KindFromString(ndef.kind, ndef.id);
    if (node.kind == NodeKind::kLeaf) {
      if (!ndef.edges.empty()) {
        throw ParseError("leaf '" + ndef.id + "' has outgoing edges");
      }
      if (static_cast<int>(ndef.payoff.size()) != def.players) {
        throw ParseError("leaf '" + ndef.id + "': payoff vector length " +
                         std::to_string(ndef.payoff.size()) + " differs from " +
                         std::to_string(def.players) + " players");
      }
      node.payoff = ndef.payoff;
    } else {
      if (!ndef.payoff.empty()) {
        throw ParseError("non-leaf '" + ndef.id + "' carries a payoff");
      }
      if (ndef.edges.empty()) {
        throw ParseError("non-leaf '" + ndef.id + "' has no children");
      }
    }
    if (node.kind == NodeKind::kChance) {
      Rational sum(0);
      for (const auto& e : ndef.edges) {
        if (!e.is_chance) {
          throw ParseError("chance node '" + ndef.id +
                           "' has an action-labeled edge");
        }
        if (e.prob <= 0) {
          throw ParseError("chance node '" + ndef.id +
                           "': edge probability must be positive");
        }
        sum += e.prob;
      }
      if (sum != 1) {
        throw ParseError("chance node '" + ndef.id +
                         "': probabilities sum to " + FormatRational(sum) +
                         ", expected 1");
      }
    }
    if (node.kind == NodeKind::kPlayer) {
      if (ndef.player < 1 || ndef.player > def.players) {
        throw ParseError("node '" + ndef.id + "': player out of range");
      }
      node.player = ndef.player;
      auto it = game.infoset_index_.find(ndef.infoset);
      if (it == game.infoset_index_.end()) {
        throw ParseError("node '" + ndef.id + "': unknown information set '" +
                         ndef.infoset + "'");
      }
      node.infoset = it->second;
      if (game.infosets_[node.infoset].player != node.player) {
        throw ParseError("node '" + ndef.id + "' of player " +
                         std::to_string(node.player) +
                         " assigned to information set '" + ndef.infoset +
                         "' of player " +
                         std::to_string(game.infosets_[node.infoset].player));
      }
      std::set<std::string> labels;
      for (const auto& e : ndef.edges) {
        if (e.is_chance) {
          throw ParseError("player node '" + ndef.id +
                           "' has a probability-labeled edge");
        }
        if (!labels.insert(e.action).second) {
          throw ParseError("player node '" + ndef.id +
                           "': duplicate action label '" + e.action + "'");
        }
      }
      const auto& expected = game.infosets_[node.infoset].actions;
      if (std::vector<std::string>(labels.begin(), labels.end()) != expected) {
        throw ParseError("player node '" + ndef.id +
                         "': action labels differ from information set '" +
                         ndef.infoset + "'");
      }
    }
    game.node_index_[node.id] = static_cast<int>(game.nodes_.size());
    game.nodes_.push_back(std::move(node));
  }

  // Edges, resolved to indices; each node may be a child at most once.
  for (std::size_t i = 0; i < def.nodes.size(); ++i) {
    Node& node = game.nodes_[i];
    for (const auto& e : def.nodes[i].edges) {
      auto it = game.node_index_.find(e.child);
      if (it == game.node_index_.end()) {
        throw ParseError("node '" + node.id + "': unknown child '" + e.child +
                         "'");
      }
      Node& child = game.nodes_[it->second];
      if (child.parent != -1) {
        throw ParseError("node '" + child.id + "' has two parents");
      }
      if (it->second == static_cast<int>(i)) {
        throw ParseError("node '" + node.id + "' is its own child");
      }
      child.parent = static_cast<int>(i);
      node.edges.push_back(Edge{e.action, e.prob, it->second});
    }
  }

  auto root_it = game.node_index_.find(def.root);
  if (root_it == game.node_index_.end()) {
    throw ParseError("unknown root node '" + def.root + "'");
  }
  game.root_ = root_it->second;
  if (game.nodes_[game.root_].parent != -1) {
    throw ParseError("root node '" + def.root + "' has a parent");
  }

  // Reachability from the root; computes P_C and per-player histories.
  const int n = def.players;
  game.chance_reach_.assign(game.nodes_.size(), Rational(0));
  game.histories_.assign(game.nodes_.size(),
                         std::vector<PlayerHistory>(n, PlayerHistory{}));
  std::vector<bool> visited(game.nodes_.size(), false);
  std::vector<int> stack = {game.root_};
  game.chance_reach_[game.root_] = 1;
  visited[game.root_] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    const Node& node = game.nodes_[v];
    if (node.kind == NodeKind::kLeaf) continue;
    for (const auto& e : node.edges) {
      visited[e.child] = true;
      game.histories_[e.child] = game.histories_[v];
      if (node.kind == NodeKind::kChance) {
        game.chance_reach_[e.child] = game.chance_reach_[v] * e.prob;
      } else {
        game.chance_reach_[e.child] = game.chance_reach_[v];
        const Infoset& is = game.infosets_[node.infoset];
        const int ordinal = static_cast<int>(
            std::lower_bound(is.actions.begin(), is.actions.end(), e.action) -
            is.actions.begin());
        game.histories_[e.child][node.player - 1].emplace_back(node.infoset,
                                                               ordinal);
      }
      stack.push_back(e.child);
    }
  }
  for (std::size_t v = 0; v < game.nodes_.size(); ++v) {
    if (!visited[v]) {
      throw ParseError("node '" + game.nodes_[v].id +
                       "' is not reachable from the root");
    }
  }

  for (std::size_t v = 0; v < game.nodes_.size(); ++v) {
    if (game.nodes_[v].kind == NodeKind::kLeaf) {
      game.leaves_.push_back(static_cast<int>(v));
    } else if (game.nodes_[v].kind == NodeKind::kPlayer) {
      game.infosets_[game.nodes_[v].infoset].nodes.push_back(
          static_cast<int>(v));
    }
  }

  // Perfect recall: all nodes of an information set share one history.
  for (auto& is : game.infosets_) {
    if (is.nodes.empty()) {
      throw ParseError("information set '" + is.id + "' has no nodes");
    }
    is.history = game.histories_[is.nodes.front()][is.player - 1];
    for (int v : is.nodes) {
      const PlayerHistory& h = game.histories_[v][is.player - 1];
      if (h != is.history) {
        throw ParseError(
            "perfect recall violation at information set '" + is.id +
            "': node '" + game.nodes_[is.nodes.front()].id + "' has history " +
            game.FormatHistory(is.history) + " but node '" + game.nodes_[v].id +
            "' has history " + game.FormatHistory(h));
      }
    }
  }

  // Per-player infoset lists sorted by id, and ordinals.
  game.infosets_by_player_.assign(n, {});
  for (int s = 0; s < game.num_infosets(); ++s) {
    game.infosets_by_player_[game.infosets_[s].player - 1].push_back(s);
  }
  for (auto& list : game.infosets_by_player_) {
    std::sort(list.begin(), list.end(), [&game](int a, int b) {
      return game.infosets_[a].id < game.infosets_[b].id;
    });
    for (std::size_t k = 0; k < list.size(); ++k) {
      game.infosets_[list[k]].ordinal = static_cast<int>(k);
    }
  }

  // Reach order closure over each player's information sets.
  const int m = game.num_infosets();
  game.infoset_reach_.assign(m, std::vector<bool>(m, false));
  for (int s = 0; s < m; ++s) {
    game.infoset_reach_[s][s] = true;
    const int player = game.infosets_[s].player;
    for (int start : game.infosets_[s].nodes) {
      std::vector<int> work = {start};
      while (!work.empty()) {
        const int v = work.back();
        work.pop_back();
        const Node& node = game.nodes_[v];
        if (v != start && node.kind == NodeKind::kPlayer &&
            node.player == player) {
          game.infoset_reach_[s][node.infoset] = true;
        }
        for (const auto& e : node.edges) work.push_back(e.child);
      }
    }
  }

  game.child_by_ordinal_.assign(game.nodes_.size(), {});
  for (std::size_t v = 0; v < game.nodes_.size(); ++v) {
    const Node& node = game.nodes_[v];
    if (node.kind != NodeKind::kPlayer) continue;
    const auto& actions = game.infosets_[node.infoset].actions;
    game.child_by_ordinal_[v].assign(actions.size(), -1);
    for (const auto& e : node.edges) {
      const int ordinal = static_cast<int>(
          std::lower_bound(actions.begin(), actions.end(), e.action) -
          actions.begin());
      game.child_by_ordinal_[v][ordinal] = e.child;
    }
  }

  // History lookup tables used by the deviation recursions.
  game.infosets_by_history_.assign(n, {});
  game.leaves_by_history_.assign(n, {});
  for (int s = 0; s < m; ++s) {
    const Infoset& is = game.infosets_[s];
    game.infosets_by_history_[is.player - 1][is.history].push_back(s);
  }
  for (int leaf : game.leaves_) {
    for (int i = 1; i <= n; ++i) {
      game.leaves_by_history_[i - 1][game.histories_[leaf][i - 1]].push_back(
          leaf);
    }
  }
  return game;
}

int Game::NodeIndex(const std::string& id) const {
  auto it = node_index_.find(id);
  if (it == node_index_.end()) {
    throw std::invalid_argument("unknown node id '" + id + "'");
  }
  return it->second;
}

int Game::InfosetIndex(const std::string& id) const {
  auto it = infoset_index_.find(id);
  if (it == infoset_index_.end()) {
    throw std::invalid_argument("unknown information set id '" + id + "'");
  }
  return it->second;
}

const std::vector<int>& Game::player_infosets(int player) const {
  if (player < 1 || player > num_players_) {
    throw std::invalid_argument("player " + std::to_string(player) +
                                " out of range");
  }
  return infosets_by_player_[player - 1];
}

bool Game::NodeBelow(int v, int s) const {
  const int player = infosets_[s].player;
  for (const auto& [infoset, action] : histories_[v][player - 1]) {
    if (infoset == s) return true;
  }
  return false;
}

bool Game::InfosetLeq(int a, int b) const {
  if (a == kRootInfoset) return true;
  if (b == kRootInfoset) return false;
  if (infosets_[a].player != infosets_[b].player) {
    throw std::invalid_argument(
        "reach order compares information sets of one player");
  }
  return infoset_reach_[a][b];
}

const std::vector<int>& Game::InfosetsWithHistory(
    int player, const PlayerHistory& h) const {
  const auto& table = infosets_by_history_[player - 1];
  auto it = table.find(h);
  return it == table.end() ? empty_result_ : it->second;
}

const std::vector<int>& Game::LeavesWithHistory(int player,
                                                const PlayerHistory& h) const {
  const auto& table = leaves_by_history_[player - 1];
  auto it = table.find(h);
  return it == table.end() ? empty_result_ : it->second;
}

int Game::ChildByAction(int v, const std::string& action) const {
  for (const auto& e : nodes_[v].edges) {
    if (e.action == action) return e.child;
  }
  return -1;
}

Rational Game::LeafObjective(int leaf) const {
  Rational value(0);
  for (int i = 0; i < num_players_; ++i) {
    value += objective_[i] * nodes_[leaf].payoff[i];
  }
  return value;
}

std::string Game::FormatHistory(const PlayerHistory& h) const {
  if (h.empty()) return "eps";
  std::string out;
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (k > 0) out += ".";
    const Infoset& is = infosets_[h[k].first];
    out += "(" + is.id + "," + is.actions[h[k].second] + ")";
  }
  return out;
}

}  // namespace corrplan
