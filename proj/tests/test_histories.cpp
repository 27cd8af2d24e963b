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

#include <algorithm>
#include <random>
#include <set>

#include "corrplan/histories.h"
#include "corrplan/io.h"
#include "doctest.h"
#include "fixtures.h"
#include "random_games.h"

namespace corrplan {
namespace {

using testing::RandomGame;
using testing::RandomProfile;

bool Contains(const Game& game, const std::vector<HistoryTuple>& tuples,
              const std::string& encoded) {
  return std::any_of(tuples.begin(), tuples.end(),
                     [&](const HistoryTuple& t) {
                       return EncodeTuple(game, t) == encoded;
                     });
}

TEST_CASE("honest histories, one per leaf") {
  const Game signaling = ParseGame(testing::kSignalingGameJson);
  CHECK(HonestHistories(signaling).size() == 8);

  const Game leaf_game = ParseGame(testing::SingleLeafGameJson("0"));
  const auto honest = HonestHistories(leaf_game);
  REQUIRE(honest.size() == 1);
  CHECK(EncodeTuple(leaf_game, honest[0]) == "eps");

  const Game three = ParseGame(testing::kThreePlayerGameJson);
  CHECK(Contains(three, HonestHistories(three),
                 "(I1,a).(L3,c)|(I2,b)|(I4,e)"));
}

TEST_CASE("efce deviation family contains the documented trigger block") {
  const Game game = ParseGame(testing::kThreePlayerGameJson);
  const auto deviation = DeviationHistories(game, Concept::kEfce);
  // Deviations of player 1 at I1 recommended a, one per leaf reached by na.
  CHECK(Contains(game, deviation, "(I1,a)|eps|eps"));            // lf5
  CHECK(Contains(game, deviation, "(I1,a)|(I2,b)|eps"));         // rf4
  CHECK(Contains(game, deviation, "(I1,a)|(I2,nb)|eps"));        // rf3
  CHECK(Contains(game, deviation, "(I1,a)|(I2,nb)|(I4,e)"));     // rf2
  CHECK(Contains(game, deviation, "(I1,a)|(I2,nb)|(I4,ne)"));    // rf1
}

TEST_CASE("nfcce deviation family blanks one coordinate per player and leaf") {
  const Game game = ParseGame(testing::kSignalingGameJson);
  const auto deviation = DeviationHistories(game, Concept::kNfcce);
  // Per (player, leaf) with duplicates collapsed: four distinct applicant
  // coordinates and four distinct company coordinates.
  CHECK(deviation.size() == 8);
  for (const auto& tuple : deviation) {
    CHECK(tuple.size() == 2);
    CHECK((tuple[0].empty() || tuple[1].empty()));
  }
}

TEST_CASE("afce and efce families coincide without continuations") {
  // One player, one information set, two actions: h' is always empty.
  const char* tiny = R"({
    "players": 1,
    "infosets": [{"id": "s", "player": 1, "actions": ["l", "r"]}],
    "nodes": [
      {"id": "v", "kind": "player", "player": 1, "infoset": "s",
       "edges": [{"action": "l", "child": "a"},
                 {"action": "r", "child": "b"}]},
      {"id": "a", "kind": "leaf", "payoff": ["1"]},
      {"id": "b", "kind": "leaf", "payoff": ["0"]}
    ],
    "root": "v"})";
  const Game game = ParseGame(tiny);
  CHECK(DeviationHistories(game, Concept::kAfce) ==
        DeviationHistories(game, Concept::kEfce));
}

TEST_CASE("unsupported concepts are explicit errors") {
  const Game game = ParseGame(testing::kSignalingGameJson);
  CHECK_THROWS_AS(DeviationHistories(game, Concept::kNfce),
                  std::invalid_argument);
  CHECK_THROWS_AS(DeviationHistories(game, Concept::kNash),
                  std::invalid_argument);
  CHECK_THROWS_AS(BuildRelevantHistories(game, Concept::kNfce),
                  std::invalid_argument);
}

TEST_CASE("pure-chance game has no deviation histories") {
  const char* chance_only = R"({
    "players": 1,
    "infosets": [],
    "nodes": [
      {"id": "c", "kind": "chance",
       "edges": [{"prob": "1/2", "child": "a"},
                 {"prob": "1/2", "child": "b"}]},
      {"id": "a", "kind": "leaf", "payoff": ["1"]},
      {"id": "b", "kind": "leaf", "payoff": ["2"]}
    ],
    "root": "c"})";
  const Game game = ParseGame(chance_only);
  for (Concept c : {Concept::kEfce, Concept::kEfcce, Concept::kAfce,
                    Concept::kAfcce}) {
    const RelevantHistories r = BuildRelevantHistories(game, c);
    CHECK(r.deviation.empty());
    CHECK(r.all == r.honest);
  }
  // NFCCE still blanks the (empty) coordinate, which collapses into the
  // honest tuple.
  const RelevantHistories r = BuildRelevantHistories(game, Concept::kNfcce);
  CHECK(r.all == r.honest);
}

TEST_CASE("signaling efce family meets the stated bound") {
  const Game game = ParseGame(testing::kSignalingGameJson);
  const RelevantHistories r = BuildRelevantHistories(game, Concept::kEfce);
  CHECK(r.size_bound == 2 * 4 * 8 * 2 + 8);
  CHECK(r.all.size() <= r.size_bound);
  CHECK(r.honest.size() == 8);
}

TEST_CASE("every deviation tuple differs from an honest one off-coordinate") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const Game game = RandomGame(rng);
    const auto honest = HonestHistories(game);
    for (Concept c : {Concept::kEfce, Concept::kEfcce, Concept::kNfcce,
                      Concept::kAfce, Concept::kAfcce}) {
      for (const auto& tuple : DeviationHistories(game, c)) {
        bool matched = false;
        for (const auto& h : honest) {
          int diffs = 0;
          for (int i = 0; i < game.num_players(); ++i) {
            if (tuple[i] != h[i]) ++diffs;
          }
          if (diffs <= 1) {
            matched = true;
            break;
          }
        }
        CHECK(matched);
      }
    }
  }
}

TEST_CASE("family sizes stay within the polynomial bounds on random games") {
  std::mt19937_64 rng(131);
  for (int trial = 0; trial < 100; ++trial) {
    const Game game = RandomGame(rng);
    for (Concept c : {Concept::kEfce, Concept::kEfcce, Concept::kNfcce,
                      Concept::kAfce, Concept::kAfcce}) {
      // BuildRelevantHistories throws if the bound fails.
      const RelevantHistories r = BuildRelevantHistories(game, c);
      CHECK(r.all.size() <= r.size_bound);
    }
  }
}

TEST_CASE("chain game stays polynomial where pairwise relevance explodes") {
  const int n = 10;
  const Game game = testing::ChainGame(n);
  // Every tuple of per-player histories is pairwise-relevant in the chain:
  // each player holds three histories (empty, go, stop).
  boost::multiprecision::mpz_int pairwise = 1;
  for (int i = 1; i <= n; ++i) pairwise *= 3;
  CHECK(pairwise == 59049);
  for (Concept c : {Concept::kEfce, Concept::kEfcce, Concept::kNfcce,
                    Concept::kAfce, Concept::kAfcce}) {
    const RelevantHistories r = BuildRelevantHistories(game, c);
    CHECK(r.all.size() <= r.size_bound);
    CHECK(r.all.size() < 59049);
  }
  // Exact count for EFCE: the family is far below the pairwise blow-up.
  const RelevantHistories efce = BuildRelevantHistories(game, Concept::kEfce);
  CHECK(efce.honest.size() == n + 1);
  CHECK(efce.all.size() <= efce.size_bound);
}

TEST_CASE("honest tuple consistency equals leaf consistency") {
  std::mt19937_64 rng(137);
  for (int trial = 0; trial < 30; ++trial) {
    const Game game = RandomGame(rng);
    const StrategyProfile profile = RandomProfile(rng, game);
    for (int leaf : game.leaves()) {
      CHECK(ConsistentWithHistoryTuple(game, profile,
                                       HonestTuple(game, leaf)) ==
            ConsistentWithNode(game, profile, leaf));
    }
  }
}

TEST_CASE("tuple interning keys are stable") {
  const Game game = ParseGame(testing::kThreePlayerGameJson);
  const RelevantHistories r = BuildRelevantHistories(game, Concept::kEfce);
  std::set<std::string> encodings;
  std::set<std::uint64_t> hashes;
  for (const auto& tuple : r.all) {
    encodings.insert(EncodeTuple(game, tuple));
    hashes.insert(TupleHash(game, tuple));
  }
  CHECK(encodings.size() == r.all.size());
  CHECK(hashes.size() == r.all.size());
}

}  // namespace
}  // namespace corrplan
