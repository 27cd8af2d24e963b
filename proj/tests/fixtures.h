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

#ifndef CORRPLAN_TESTS_FIXTURES_H_
#define CORRPLAN_TESTS_FIXTURES_H_

#include <string>

#include "corrplan/game.h"
#include "corrplan/strategy.h"

namespace corrplan {
namespace testing {

// Job-signaling game: a chance node draws a strong or weak applicant with
// equal probability, the applicant signals with an eager or generic letter,
// the company accepts or rejects knowing only the letter.
extern const char kSignalingGameJson[];
// Uniform plan over the four letter/decision profiles that alternate
// acceptance between the two letters.
extern const char kSignalingFourProfilePlanJson[];
// Dirac plan on (G_S, G_W, R_E, R_G): generic letters, always reject.
extern const char kSignalingRejectPlanJson[];
// The same tree with the chance root replaced by a company decision node,
// which breaks the company's recall.
extern const char kSignalingBrokenRecallJson[];

// Three-player fixture with a 1/3 / 2/3 chance root, player 1 acting at the
// root information set {L1,R1} and again deeper on both sides, player 2 at
// {L2,R2}, player 3 at {L4,R4}. Player 1's payoff is 1 at every leaf.
extern const char kThreePlayerGameJson[];

std::string SingleLeafGameJson(const std::string& payoff);

// Chain of single-node players: player i's node continues to player i+1 or
// stops at a leaf. Its pairwise history combinations grow exponentially,
// the per-concept families must not.
Game ChainGame(int players);

// Profile helper: builds a profile from action labels listed per player in
// the player's lexicographic infoset order.
StrategyProfile ProfileFromLabels(
    const Game& game,
    const std::vector<std::vector<std::string>>& labels);

}  // namespace testing
}  // namespace corrplan

#endif  // CORRPLAN_TESTS_FIXTURES_H_
