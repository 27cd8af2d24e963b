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

#ifndef CORRPLAN_IO_H_
#define CORRPLAN_IO_H_

#include <string>

#include "corrplan/game.h"
#include "corrplan/strategy.h"

namespace corrplan {

// Parses a JSON game document and validates all game invariants.
// Rationals are accepted as "p/q" strings, integer strings, or integral
// JSON numbers, and are always emitted as canonical strings.
Game ParseGame(const std::string& json_text);
std::string SerializeGame(const Game& game);

// Plan document: {"plan": [{"prob": "p/q", "profile": {"<player>":
// {"<infoset>": "<action>", ...}, ...}}, ...]}. Each profile must assign an
// action to every information set of every player.
CorrelationPlan ParsePlan(const Game& game, const std::string& json_text);
std::string SerializePlan(const Game& game, const CorrelationPlan& plan);

}  // namespace corrplan

#endif  // CORRPLAN_IO_H_
