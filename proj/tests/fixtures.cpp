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

#include "fixtures.h"

#include <algorithm>
#include <stdexcept>

namespace corrplan {
namespace testing {

const char kSignalingGameJson[] = R"({
  "players": 2,
  "infosets": [
    {"id": "I_S", "player": 1, "actions": ["E_S", "G_S"]},
    {"id": "I_W", "player": 1, "actions": ["E_W", "G_W"]},
    {"id": "I_E", "player": 2, "actions": ["A_E", "R_E"]},
    {"id": "I_G", "player": 2, "actions": ["A_G", "R_G"]}
  ],
  "nodes": [
    {"id": "root", "kind": "chance",
     "edges": [{"prob": "1/2", "child": "S"}, {"prob": "1/2", "child": "W"}]},
    {"id": "S", "kind": "player", "player": 1, "infoset": "I_S",
     "edges": [{"action": "E_S", "child": "N1"},
               {"action": "G_S", "child": "N2"}]},
    {"id": "W", "kind": "player", "player": 1, "infoset": "I_W",
     "edges": [{"action": "E_W", "child": "N3"},
               {"action": "G_W", "child": "N4"}]},
    {"id": "N1", "kind": "player", "player": 2, "infoset": "I_E",
     "edges": [{"action": "A_E", "child": "N1A"},
               {"action": "R_E", "child": "N1R"}]},
    {"id": "N2", "kind": "player", "player": 2, "infoset": "I_G",
     "edges": [{"action": "A_G", "child": "N2A"},
               {"action": "R_G", "child": "N2R"}]},
    {"id": "N3", "kind": "player", "player": 2, "infoset": "I_E",
     "edges": [{"action": "A_E", "child": "N3A"},
               {"action": "R_E", "child": "N3R"}]},
    {"id": "N4", "kind": "player", "player": 2, "infoset": "I_G",
     "edges": [{"action": "A_G", "child": "N4A"},
               {"action": "R_G", "child": "N4R"}]},
    {"id": "N1A", "kind": "leaf", "payoff": ["4", "10"]},
    {"id": "N1R", "kind": "leaf", "payoff": ["0", "6"]},
    {"id": "N2A", "kind": "leaf", "payoff": ["4", "10"]},
    {"id": "N2R", "kind": "leaf", "payoff": ["0", "6"]},
    {"id": "N3A", "kind": "leaf", "payoff": ["6", "0"]},
    {"id": "N3R", "kind": "leaf", "payoff": ["0", "6"]},
    {"id": "N4A", "kind": "leaf", "payoff": ["6", "0"]},
    {"id": "N4R", "kind": "leaf", "payoff": ["0", "6"]}
  ],
  "root": "root"
})";

const char kSignalingFourProfilePlanJson[] = R"({
  "plan": [
    {"prob": "1/4", "profile": {
      "1": {"I_S": "E_S", "I_W": "E_W"},
      "2": {"I_E": "A_E", "I_G": "R_G"}}},
    {"prob": "1/4", "profile": {
      "1": {"I_S": "G_S", "I_W": "E_W"},
      "2": {"I_E": "R_E", "I_G": "A_G"}}},
    {"prob": "1/4", "profile": {
      "1": {"I_S": "E_S", "I_W": "G_W"},
      "2": {"I_E": "A_E", "I_G": "R_G"}}},
    {"prob": "1/4", "profile": {
      "1": {"I_S": "G_S", "I_W": "G_W"},
      "2": {"I_E": "R_E", "I_G": "A_G"}}}
  ]
})";

const char kSignalingRejectPlanJson[] = R"({
  "plan": [
    {"prob": "1", "profile": {
      "1": {"I_S": "G_S", "I_W": "G_W"},
      "2": {"I_E": "R_E", "I_G": "R_G"}}}
  ]
})";

const char kSignalingBrokenRecallJson[] = R"({
  "players": 2,
  "infosets": [
    {"id": "I_0", "player": 2, "actions": ["a", "b"]},
    {"id": "I_S", "player": 1, "actions": ["E_S", "G_S"]},
    {"id": "I_W", "player": 1, "actions": ["E_W", "G_W"]},
    {"id": "I_E", "player": 2, "actions": ["A_E", "R_E"]},
    {"id": "I_G", "player": 2, "actions": ["A_G", "R_G"]}
  ],
  "nodes": [
    {"id": "N0", "kind": "player", "player": 2, "infoset": "I_0",
     "edges": [{"action": "a", "child": "S"}, {"action": "b", "child": "W"}]},
    {"id": "S", "kind": "player", "player": 1, "infoset": "I_S",
     "edges": [{"action": "E_S", "child": "N1"},
               {"action": "G_S", "child": "N2"}]},
    {"id": "W", "kind": "player", "player": 1, "infoset": "I_W",
     "edges": [{"action": "E_W", "child": "N3"},
               {"action": "G_W", "child": "N4"}]},
    {"id": "N1", "kind": "player", "player": 2, "infoset": "I_E",
     "edges": [{"action": "A_E", "child": "N1A"},
               {"action": "R_E", "child": "N1R"}]},
    {"id": "N2", "kind": "player", "player": 2, "infoset": "I_G",
     "edges": [{"action": "A_G", "child": "N2A"},
               {"action": "R_G", "child": "N2R"}]},
    {"id": "N3", "kind": "player", "player": 2, "infoset": "I_E",
     "edges": [{"action": "A_E", "child": "N3A"},
               {"action": "R_E", "child": "N3R"}]},
    {"id": "N4", "kind": "player", "player": 2, "infoset": "I_G",
     "edges": [{"action": "A_G", "child": "N4A"},
               {"action": "R_G", "child": "N4R"}]},
    {"id": "N1A", "kind": "leaf", "payoff": ["4", "10"]},
    {"id": "N1R", "kind": "leaf", "payoff": ["0", "6"]},
    {"id": "N2A", "kind": "leaf", "payoff": ["4", "10"]},
    {"id": "N2R", "kind": "leaf", "payoff": ["0", "6"]},
    {"id": "N3A", "kind": "leaf", "payoff": ["6", "0"]},
    {"id": "N3R", "kind": "leaf", "payoff": ["0", "6"]},
    {"id": "N4A", "kind": "leaf", "payoff": ["6", "0"]},
    {"id": "N4R", "kind": "leaf", "payoff": ["0", "6"]}
  ],
  "root": "N0"
})";

const char kThreePlayerGameJson[] = R"({
  "players": 3,
  "infosets": [
    {"id": "I1", "player": 1, "actions": ["a", "na"]},
    {"id": "I2", "player": 2, "actions": ["b", "nb"]},
    {"id": "L3", "player": 1, "actions": ["c", "nc"]},
    {"id": "R3", "player": 1, "actions": ["d", "nd"]},
    {"id": "I4", "player": 3, "actions": ["e", "ne"]}
  ],
  "nodes": [
    {"id": "root", "kind": "chance",
     "edges": [{"prob": "1/3", "child": "L1"}, {"prob": "2/3", "child": "R1"}]},
    {"id": "L1", "kind": "player", "player": 1, "infoset": "I1",
     "edges": [{"action": "a", "child": "L2"},
               {"action": "na", "child": "lf5"}]},
    {"id": "L2", "kind": "player", "player": 2, "infoset": "I2",
     "edges": [{"action": "b", "child": "L3n"},
               {"action": "nb", "child": "lf4"}]},
    {"id": "L3n", "kind": "player", "player": 1, "infoset": "L3",
     "edges": [{"action": "c", "child": "L4n"},
               {"action": "nc", "child": "lf3"}]},
    {"id": "L4n", "kind": "player", "player": 3, "infoset": "I4",
     "edges": [{"action": "e", "child": "lf1"},
               {"action": "ne", "child": "lf2"}]},
    {"id": "R1", "kind": "player", "player": 1, "infoset": "I1",
     "edges": [{"action": "a", "child": "rf5"},
               {"action": "na", "child": "R2n"}]},
    {"id": "R2n", "kind": "player", "player": 2, "infoset": "I2",
     "edges": [{"action": "b", "child": "rf4"},
               {"action": "nb", "child": "R3n"}]},
    {"id": "R3n", "kind": "player", "player": 1, "infoset": "R3",
     "edges": [{"action": "d", "child": "rf3"},
               {"action": "nd", "child": "R4n"}]},
    {"id": "R4n", "kind": "player", "player": 3, "infoset": "I4",
     "edges": [{"action": "e", "child": "rf2"},
               {"action": "ne", "child": "rf1"}]},
    {"id": "lf1", "kind": "leaf", "payoff": ["1", "1", "11"]},
    {"id": "lf2", "kind": "leaf", "payoff": ["1", "2", "12"]},
    {"id": "lf3", "kind": "leaf", "payoff": ["1", "3", "13"]},
    {"id": "lf4", "kind": "leaf", "payoff": ["1", "4", "14"]},
    {"id": "lf5", "kind": "leaf", "payoff": ["1", "5", "15"]},
    {"id": "rf1", "kind": "leaf", "payoff": ["1", "21", "31"]},
    {"id": "rf2", "kind": "leaf", "payoff": ["1", "22", "32"]},
    {"id": "rf3", "kind": "leaf", "payoff": ["1", "23", "33"]},
    {"id": "rf4", "kind": "leaf", "payoff": ["1", "24", "34"]},
    {"id": "rf5", "kind": "leaf", "payoff": ["1", "25", "35"]}
  ],
  "root": "root"
})";

std::string SingleLeafGameJson(const std::string& payoff) {
  return R"({"players": 1, "infosets": [], "nodes": [{"id": "only",)"
         R"( "kind": "leaf", "payoff": [")" +
         payoff + R"("]}], "root": "only"})";
}

Game ChainGame(int players) {
  GameDef def;
  def.players = players;
  for (int i = 1; i <= players; ++i) {
    def.infosets.push_back({"s" + std::to_string(i), i, {"go", "stop"}});
  }
  for (int i = 1; i <= players; ++i) {
    GameDef::NodeDef node;
    node.id = "v" + std::to_string(i);
    node.kind = "player";
    node.player = i;
    node.infoset = "s" + std::to_string(i);
    const std::string next = i == players ? "leaf_go_" + std::to_string(i)
                                          : "v" + std::to_string(i + 1);
    node.edges.push_back({false, "go", Rational(0), next});
    node.edges.push_back(
        {false, "stop", Rational(0), "leaf_stop_" + std::to_string(i)});
    def.nodes.push_back(std::move(node));
    GameDef::NodeDef stop_leaf;
    stop_leaf.id = "leaf_stop_" + std::to_string(i);
    stop_leaf.kind = "leaf";
    stop_leaf.payoff.assign(players, Rational(0));
    stop_leaf.payoff[i - 1] = i;
    def.nodes.push_back(std::move(stop_leaf));
  }
  GameDef::NodeDef go_leaf;
  go_leaf.id = "leaf_go_" + std::to_string(players);
  go_leaf.kind = "leaf";
  go_leaf.payoff.assign(players, Rational(1));
  def.nodes.push_back(std::move(go_leaf));
  def.root = "v1";
  return Game::FromDef(def);
}

StrategyProfile ProfileFromLabels(
    const Game& game,
    const std::vector<std::vector<std::string>>& labels) {
  if (static_cast<int>(labels.size()) != game.num_players()) {
    throw std::invalid_argument("one label list per player expected");
  }
  StrategyProfile profile;
  for (int i = 1; i <= game.num_players(); ++i) {
    const auto& infosets = game.player_infosets(i);
    if (labels[i - 1].size() != infosets.size()) {
      throw std::invalid_argument("label count differs from infoset count");
    }
    PureStrategy sigma;
    sigma.player = i;
    for (std::size_t k = 0; k < infosets.size(); ++k) {
      const auto& actions = game.infoset(infosets[k]).actions;
      const auto it = std::find(actions.begin(), actions.end(),
                                labels[i - 1][k]);
      if (it == actions.end()) {
        throw std::invalid_argument("unknown action label '" +
                                    labels[i - 1][k] + "'");
      }
      sigma.actions.push_back(static_cast<int>(it - actions.begin()));
    }
    profile.strategies.push_back(std::move(sigma));
  }
  return profile;
}

}  // namespace testing
}  // namespace corrplan
