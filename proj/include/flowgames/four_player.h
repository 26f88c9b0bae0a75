// Copyright 2026 The Flowgames Authors.
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

#ifndef FLOWGAMES_FOUR_PLAYER_H_
#define FLOWGAMES_FOUR_PLAYER_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flowgames/personalized.h"
#include "flowgames/rational.h"

namespace flowgames::reductions {

// A graphical game with two strategies (0 and 1) per node. A node's payoff
// depends on its own bit and the bits of at most two input nodes; the key
// of `payoff` is (own bit, input bits...), missing keys pay 0.
struct GraphicalNode {
  std::string id;
  std::vector<int> inputs;
  std::map<std::vector<int>, Rational> payoff;
};

struct GraphicalGame {
  std::vector<GraphicalNode> nodes;
};

// f(lhs...) summed equals f(rhs...) summed, over (player, strategy) masses.
struct MassEquation {
  std::vector<std::pair<int, int>> lhs;
  std::vector<std::pair<int, int>> rhs;
};

struct FourPlayerResult {
  GraphicalGame reduced;        // After inserting copy nodes.
  std::vector<int> color;       // Per reduced node, in {0, 1, 2}.
  int pairs_per_player = 0;     // k: strategy pairs of players 1..3.
  // slot[c][s]: reduced node behind pair s of player c, or -1 for padding.
  std::vector<std::vector<int>> slot;
  personalized::MatrixGame game;
  Rational big_m;
  std::vector<MassEquation> equations;
};

// Degree reduction with copy nodes (every node ends up touching at most
// three others, counting an edge between the two inputs of a node), a
// 3-colouring by backtracking, one player per colour with a pair of
// strategies per node, and a fourth player whose M-sized bonuses force
// equal mass on matching pairs. Throws InputError on more than two inputs,
// unknown inputs or an uncolourable graph.
FourPlayerResult GraphicalToFourPlayer(const GraphicalGame& input);

// Exact check of every equation on a mixed profile of the 4-player game.
bool SatisfiesMassEquations(const FourPlayerResult& result,
                            const personalized::MixProfile& p);

}  // namespace flowgames::reductions

#endif  // FLOWGAMES_FOUR_PLAYER_H_
