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

#ifndef FLOWGAMES_PREF_GAME_H_
#define FLOWGAMES_PREF_GAME_H_

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "flowgames/rational.h"

namespace flowgames::pref {

// Ranked tie classes of player indices, most preferred first.
using TieClasses = std::vector<std::vector<int>>;

// A preference game. Every player ranks the players it may allocate weight
// to; players missing from a list share an implicit bottom class.
class PreferenceGame {
 public:
  PreferenceGame() = default;
  // Throws InputError when a list names an unknown player, names a player
  // twice, or omits the owner itself.
  PreferenceGame(std::vector<std::string> players,
                 std::vector<TieClasses> prefs);

  int num_players() const { return static_cast<int>(players_.size()); }
  const std::string& name(int i) const { return players_[i]; }
  const std::vector<std::string>& names() const { return players_; }
  // Throws InputError for unknown names.
  int index(const std::string& name) const;
  std::optional<int> find(const std::string& name) const;

  // Listed classes only; the bottom class is implicit.
  const TieClasses& classes(int i) const { return prefs_[i]; }
  // Listed classes plus one (possibly empty) bottom class.
  int num_ranks(int i) const { return static_cast<int>(prefs_[i].size()) + 1; }
  int rank(int i, int j) const { return rank_[i][j]; }
  // Members of rank c for player i, bottom class included.
  std::vector<int> members(int i, int c) const;
  // j >=_i k.
  bool weakly_prefers(int i, int j, int k) const {
    return rank_[i][j] <= rank_[i][k];
  }

 private:
  std::vector<std::string> players_;
  std::vector<TieClasses> prefs_;
  std::vector<std::vector<int>> rank_;
  std::unordered_map<std::string, int> index_;
};

// w[i][j] is the weight player i places on player j.
using Profile = std::vector<std::vector<Rational>>;

Profile ZeroProfile(int n);
// Every player puts all of its weight on itself.
Profile SelfProfile(int n);

enum class ViolationKind { kNegative, kSum, kCapacity };

struct Violation {
  ViolationKind kind;
  int player = 0;
  int other = 0;    // The capped player for kCapacity, else == player.
  Rational excess;  // Amount by which the constraint is violated.
};

struct FeasibilityReport {
  bool ok = true;
  std::vector<Violation> violations;
};

// Each row is a distribution and w_i(j) <= w_j(j) for i != j.
FeasibilityReport CheckFeasible(const PreferenceGame& game, const Profile& w);

// Water-fills the ranks of player i in order. A rank receives the minimum of
// the remaining weight and its total capacity and splits it in proportion to
// the capacities of its members. Capacity is w_j(j) for others and 1 for i.
std::vector<Rational> BestResponse(const PreferenceGame& game,
                                   const Profile& w, int i);

// Sums of row i per rank, bottom rank last.
std::vector<Rational> RankSums(const PreferenceGame& game,
                               const std::vector<Rational>& row, int i);

// True iff row i has the same prefix sums per rank as the best response,
// which is the same as being lexicographically maximal.
bool IsBestResponse(const PreferenceGame& game, const Profile& w, int i);

struct EquilibriumReport {
  bool ok = true;
  bool feasible = true;
  int witness_player = -1;
  int witness_rank = -1;  // First rank whose prefix sum differs.
};

EquilibriumReport IsEquilibrium(const PreferenceGame& game, const Profile& w);

struct EpsReport {
  bool ok = true;
  char condition = 0;  // 'a', 'b' or 'c' for the first failing condition.
  int player = -1;
  int other = -1;
};

// Approximate equilibrium test with tolerance eps, all comparisons
// non-strict: (a) rows are distributions, (b) w_i(j) <= w_j(j) + eps, and
// (c) for every j either the weight on players ranked at least as high as j
// is >= 1 - eps, or |w_i(j) - cap_i(j)| <= eps. The capacity of i for
// itself is 1. Only players in `subset` are tested when it is given.
EpsReport IsEpsEquilibrium(const PreferenceGame& game, const Profile& w,
                           const Rational& eps,
                           const std::vector<int>* subset = nullptr);

struct DynamicsResult {
  Profile profile;
  int rounds = 0;
  bool converged = false;
};

// Sequential best-response dynamics. `order` is a permutation of the players
// (empty means 0..n-1). A round updates every player once; the run stops
// after a round with no change or after `max_rounds` rounds.
DynamicsResult BestResponseDynamics(const PreferenceGame& game,
                                    const Profile& init,
                                    const std::vector<int>& order,
                                    int max_rounds);

}  // namespace flowgames::pref

#endif  // FLOWGAMES_PREF_GAME_H_
