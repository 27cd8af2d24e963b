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

#include "corrplan/io.h"

#include <algorithm>

#include "json.hpp"

namespace corrplan {
namespace {

using Json = nlohmann::ordered_json;

Rational RationalFromJson(const Json& value, const std::string& where) {
  if (value.is_string()) return ParseRational(value.get<std::string>());
  if (value.is_number_integer()) {
    return Rational(value.get<long long>());
  }
  throw ParseError(where + ": expected a rational as \"p/q\" or integer");
}

Json ParseTop(const std::string& text, const std::string& what) {
  Json doc = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw ParseError("malformed " + what + " document: not a JSON object");
  }
  return doc;
}

}  // namespace

Game ParseGame(const std::string& json_text) {
  const Json doc = ParseTop(json_text, "game");
  GameDef def;
  if (!doc.contains("players") || !doc["players"].is_number_integer()) {
    throw ParseError("game document: missing integer field 'players'");
  }
  def.players = doc["players"].get<int>();
  if (doc.contains("objective")) {
    for (const auto& w : doc["objective"]) {
      def.objective.push_back(RationalFromJson(w, "objective"));
    }
  }
  if (!doc.contains("infosets") || !doc["infosets"].is_array()) {
    throw ParseError("game document: missing array field 'infosets'");
  }
  for (const auto& j : doc["infosets"]) {
    GameDef::InfosetDef idef;
    idef.id = j.value("id", std::string());
    idef.player = j.value("player", 0);
    if (idef.id.empty()) throw ParseError("information set without id");
    if (!j.contains("actions") || !j["actions"].is_array()) {
      throw ParseError("information set '" + idef.id + "' without actions");
    }
    for (const auto& a : j["actions"]) {
      idef.actions.push_back(a.get<std::string>());
    }
    def.infosets.push_back(std::move(idef));
  }
  if (!doc.contains("nodes") || !doc["nodes"].is_array()) {
    throw ParseError("game document: missing array field 'nodes'");
  }
  for (const auto& j : doc["nodes"]) {
    GameDef::NodeDef ndef;
    ndef.id = j.value("id", std::string());
    if (ndef.id.empty()) throw ParseError("node without id");
    ndef.kind = j.value("kind", std::string());
    ndef.player = j.value("player", 0);
    ndef.infoset = j.value("infoset", std::string());
    if (j.contains("payoff")) {
      for (const auto& p : j["payoff"]) {
        ndef.payoff.push_back(
            RationalFromJson(p, "payoff of node '" + ndef.id + "'"));
      }
    }
    if (j.contains("edges")) {
      for (const auto& e : j["edges"]) {
        GameDef::EdgeDef edef;
        if (!e.contains("child")) {
          throw ParseError("edge of node '" + ndef.id + "' without child");
        }
        edef.child = e["child"].get<std::string>();
        if (e.contains("prob") == e.contains("action")) {
          throw ParseError("edge of node '" + ndef.id +
                           "' must carry exactly one of 'action' or 'prob'");
        }
        if (e.contains("prob")) {
          edef.is_chance = true;
          edef.prob =
              RationalFromJson(e["prob"], "edge of node '" + ndef.id + "'");
        } else {
          edef.action = e["action"].get<std::string>();
        }
        ndef.edges.push_back(std::move(edef));
      }
    }
    def.nodes.push_back(std::move(ndef));
  }
  if (!doc.contains("root")) {
    throw ParseError("game document: missing field 'root'");
  }
  def.root = doc["root"].get<std::string>();
  return Game::FromDef(def);
}

std::string SerializeGame(const Game& game) {
  Json doc = Json::object();
  doc["players"] = game.num_players();
  Json objective = Json::array();
  for (const auto& w : game.objective_weights()) {
    objective.push_back(FormatRational(w));
  }
  doc["objective"] = std::move(objective);
  Json infosets = Json::array();
  for (int s = 0; s < game.num_infosets(); ++s) {
    const Infoset& is = game.infoset(s);
    Json j = Json::object();
    j["id"] = is.id;
    j["player"] = is.player;
    j["actions"] = is.actions;
    infosets.push_back(std::move(j));
  }
  doc["infosets"] = std::move(infosets);
  Json nodes = Json::array();
  for (int v = 0; v < game.num_nodes(); ++v) {
    const Node& node = game.node(v);
    Json j = Json::object();
    j["id"] = node.id;
    switch (node.kind) {
      case NodeKind::kChance:
        j["kind"] = "chance";
        break;
      case NodeKind::kPlayer:
        j["kind"] = "player";
        j["player"] = node.player;
        j["infoset"] = game.infoset(node.infoset).id;
        break;
      case NodeKind::kLeaf: {
        j["kind"] = "leaf";
        Json payoff = Json::array();
        for (const auto& p : node.payoff) payoff.push_back(FormatRational(p));
        j["payoff"] = std::move(payoff);
        break;
      }
    }
    if (!node.edges.empty()) {
      Json edges = Json::array();
      for (const auto& e : node.edges) {
        Json je = Json::object();
        if (node.kind == NodeKind::kChance) {
          je["prob"] = FormatRational(e.prob);
        } else {
          je["action"] = e.action;
        }
        je["child"] = game.node(e.child).id;
        edges.push_back(std::move(je));
      }
      j["edges"] = std::move(edges);
    }
    nodes.push_back(std::move(j));
  }
  doc["nodes"] = std::move(nodes);
  doc["root"] = game.node(game.root()).id;
  return doc.dump(2) + "\n";
}

CorrelationPlan ParsePlan(const Game& game, const std::string& json_text) {
  const Json doc = ParseTop(json_text, "plan");
  if (!doc.contains("plan") || !doc["plan"].is_array()) {
    throw ParseError("plan document: missing array field 'plan'");
  }
  std::map<StrategyProfile, Rational> support;
  for (const auto& entry : doc["plan"]) {
    if (!entry.contains("prob") || !entry.contains("profile")) {
      throw ParseError("plan entry must carry 'prob' and 'profile'");
    }
    const Rational prob = RationalFromJson(entry["prob"], "plan entry");
    StrategyProfile profile;
    for (int i = 1; i <= game.num_players(); ++i) {
      const std::string key = std::to_string(i);
      if (!entry["profile"].contains(key)) {
        throw ParseError("plan profile missing player " + key);
      }
      const Json& jmap = entry["profile"][key];
      PureStrategy sigma;
      sigma.player = i;
      const auto& infosets = game.player_infosets(i);
      sigma.actions.assign(infosets.size(), -1);
      for (const auto& [infoset_id, action] : jmap.items()) {
        int s;
        try {
          s = game.InfosetIndex(infoset_id);
        } catch (const std::invalid_argument&) {
          throw ParseError("plan profile names unknown information set '" +
                           infoset_id + "'");
        }
        const Infoset& is = game.infoset(s);
        if (is.player != i) {
          throw ParseError("plan profile assigns information set '" +
                           infoset_id + "' to the wrong player");
        }
        const std::string label = action.get<std::string>();
        const auto it =
            std::lower_bound(is.actions.begin(), is.actions.end(), label);
        if (it == is.actions.end() || *it != label) {
          throw ParseError("action '" + label +
                           "' unavailable at information set '" + infoset_id +
                           "'");
        }
        sigma.actions[is.ordinal] =
            static_cast<int>(it - is.actions.begin());
      }
      for (std::size_t k = 0; k < infosets.size(); ++k) {
        if (sigma.actions[k] == -1) {
          throw ParseError("plan profile of player " + key +
                           " misses information set '" +
                           game.infoset(infosets[k]).id + "'");
        }
      }
      profile.strategies.push_back(std::move(sigma));
    }
    auto [it, inserted] = support.emplace(std::move(profile), prob);
    if (!inserted) {
      throw ParseError("plan lists the same profile twice");
    }
  }
  return CorrelationPlan::Create(std::move(support));
}

std::string SerializePlan(const Game& game, const CorrelationPlan& plan) {
  Json entries = Json::array();
  for (const auto& [profile, prob] : plan.support()) {
    Json entry = Json::object();
    entry["prob"] = FormatRational(prob);
    Json jprofile = Json::object();
    for (int i = 1; i <= game.num_players(); ++i) {
      Json jmap = Json::object();
      const auto& infosets = game.player_infosets(i);
      for (std::size_t k = 0; k < infosets.size(); ++k) {
        const Infoset& is = game.infoset(infosets[k]);
        jmap[is.id] = is.actions[profile.of(i).actions[k]];
      }
      jprofile[std::to_string(i)] = std::move(jmap);
    }
    entry["profile"] = std::move(jprofile);
    entries.push_back(std::move(entry));
  }
  Json doc = Json::object();
  doc["plan"] = std::move(entries);
  return doc.dump(2) + "\n";
}

}  // namespace corrplan
