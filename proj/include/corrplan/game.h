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

#ifndef CORRPLAN_GAME_H_
#define CORRPLAN_GAME_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "corrplan/errors.h"
#include "corrplan/rational.h"

namespace corrplan {

// A player history: the (information set, action) pairs of one player along
// a root-to-node path, in order. Entries are (infoset index, action ordinal),
// where ordinals index the infoset's lexicographically sorted action list.
// The empty history is a valid value.
using PlayerHistory = std::vector<std::pair<int, int>>;

enum class NodeKind { kChance, kPlayer, kLeaf };

struct Edge {
  std::string action;  // player edges only
  Rational prob;       // chance edges only
  int child = -1;
};

struct Node {
  std::string id;
  NodeKind kind = NodeKind::kLeaf;
  int player = 0;    // 1-based, player nodes only
  int infoset = -1;  // player nodes only
  std::vector<Edge> edges;
  std::vector<Rational> payoff;  // leaves only, length n
  int parent = -1;
};

struct Infoset {
  std::string id;
  int player = 0;                    // 1-based
  std::vector<std::string> actions;  // sorted lexicographically
  std::vector<int> nodes;
  PlayerHistory history;  // shared player history of all member nodes
  int ordinal = 0;        // position in the player's lex-sorted infoset list
};

// Raw, unvalidated description of a game document. Game::FromDef checks all
// structural invariants and builds the immutable representation.
struct GameDef {
  struct InfosetDef {
    std::string id;
    int player = 0;
    std::vector<std::string> actions;
  };
  struct EdgeDef {
    bool is_chance = false;
    std::string action;
    Rational prob;
    std::string child;
  };
  struct NodeDef {
    std::string id;
    std::string kind;  // "chance" | "player" | "leaf"
    int player = 0;
    std::string infoset;
    std::vector<Rational> payoff;
    std::vector<EdgeDef> edges;
  };
  int players = 1;
  std::vector<Rational> objective;  // empty means all-ones (social welfare)
  std::vector<InfosetDef> infosets;
  std::vector<NodeDef> nodes;
  std::string root;
};

// Immutable extensive-form game with perfect recall. Construction validates:
// rooted tree shape, chance probabilities positive and summing to one, leaf
// payoff lengths, identical action sets within an information set, and the
// perfect recall property (all nodes of an information set share a bitwise
// identical player history). Safe for concurrent read access.
class Game {
 public:
  static constexpr int kRootInfoset = -1;  // virtual root, one per player

  static Game FromDef(const GameDef& def);

  int num_players() const { return num_players_; }
  const std::vector<Rational>& objective_weights() const { return objective_; }

  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int v) const { return nodes_[v]; }
  int root() const { return root_; }
  const std::vector<int>& leaves() const { return leaves_; }
  int NodeIndex(const std::string& id) const;

  int num_infosets() const { return static_cast<int>(infosets_.size()); }
  const Infoset& infoset(int s) const { return infosets_[s]; }
  int InfosetIndex(const std::string& id) const;
  // A player's information sets, sorted lexicographically by id.
  const std::vector<int>& player_infosets(int player) const;

  // Largest action set over all information sets (0 when there are none).
  int max_actions() const { return max_actions_; }

  // P_C(v): product of chance probabilities on the root-to-v path.
  const Rational& ChanceReach(int v) const { return chance_reach_[v]; }

  // h_i(v) for any node v and player i.
  const PlayerHistory& History(int v, int player) const {
    return histories_[v][player - 1];
  }

  // ind_I(v): v is a strict descendant of some node in infoset s.
  bool NodeBelow(int v, int s) const;

  // Reach order over one player's information sets plus the virtual root.
  // a and b are infoset indices of the same player or kRootInfoset.
  bool InfosetLeq(int a, int b) const;

  // J in I_i with h_i(J) == h, ascending by infoset index; empty when none.
  const std::vector<int>& InfosetsWithHistory(int player,
                                              const PlayerHistory& h) const;
  // Leaves v with h_i(v) == h, ascending by node index.
  const std::vector<int>& LeavesWithHistory(int player,
                                            const PlayerHistory& h) const;

  // Child node reached from a player node by action label; -1 when absent.
  int ChildByAction(int v, const std::string& action) const;
  // Child node reached from a player node by action ordinal.
  int ChildByOrdinal(int v, int ordinal) const {
    return child_by_ordinal_[v][ordinal];
  }

  // omega(u(v)): objective weights applied to a leaf's payoff vector.
  Rational LeafObjective(int leaf) const;

  std::string FormatHistory(const PlayerHistory& h) const;

 private:
  Game() = default;

  int num_players_ = 0;
  std::vector<Rational> objective_;
  std::vector<Node> nodes_;
  std::vector<Infoset> infosets_;
  int root_ = -1;
  int max_actions_ = 0;
  std::vector<int> leaves_;
  std::vector<Rational> chance_reach_;
  std::vector<std::vector<PlayerHistory>> histories_;  // [node][player-1]
  std::vector<std::vector<int>> infosets_by_player_;
  std::map<std::string, int> node_index_;
  std::map<std::string, int> infoset_index_;
  // Per player: reachability closure over that player's infosets.
  std::vector<std::vector<bool>> infoset_reach_;  // [a][b] over global indices
  std::vector<std::map<PlayerHistory, std::vector<int>>> infosets_by_history_;
  std::vector<std::map<PlayerHistory, std::vector<int>>> leaves_by_history_;
  std::vector<std::vector<int>> child_by_ordinal_;  // player nodes only
  std::vector<int> empty_result_;  // shared empty lookup result
};

}  // namespace corrplan

#endif  // CORRPLAN_GAME_H_
