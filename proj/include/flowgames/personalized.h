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

#ifndef FLOWGAMES_PERSONALIZED_H_
#define FLOWGAMES_PERSONALIZED_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "flowgames/rational.h"

namespace flowgames::personalized {

// A k-player game in normal form. Hyperedges (pure profiles) are encoded as
// mixed-radix integers; utilities are sparse with default 0.
class MatrixGame {
 public:
  MatrixGame() = default;
  MatrixGame(std::vector<std::string> players,
             std::vector<std::vector<std::string>> strategies);

  int num_players() const { return static_cast<int>(players_.size()); }
  const std::string& player(int i) const { return players_[i]; }
  const std::vector<std::string>& players() const { return players_; }
  int player_index(const std::string& name) const;
  int num_strategies(int i) const {
    return static_cast<int>(strategies_[i].size());
  }
  const std::string& strategy(int i, int s) const { return strategies_[i][s]; }
  const std::vector<std::string>& strategies(int i) const {
    return strategies_[i];
  }
  int strategy_index(int i, const std::string& name) const;

  int64_t num_hyperedges() const { return num_edges_; }
  int64_t stride(int i) const { return stride_[i]; }
  int64_t Encode(const std::vector<int>& edge) const;
  std::vector<int> Decode(int64_t code) const;
  int Component(int64_t code, int player) const {
    return static_cast<int>((code / stride_[player]) %
                            strategies_[player].size());
  }

  const Rational& utility(int i, int64_t code) const;
  void set_utility(int i, const std::vector<int>& edge, const Rational& v);
  void add_utility(int i, const std::vector<int>& edge, const Rational& v);
  const std::map<int64_t, Rational>& utilities(int i) const {
    return utilities_[i];
  }

 private:
  std::vector<std::string> players_;
  std::vector<std::vector<std::string>> strategies_;
  std::vector<int64_t> stride_;
  int64_t num_edges_ = 0;
  std::vector<std::map<int64_t, Rational>> utilities_;
  std::unordered_map<std::string, int> player_index_;
  std::vector<std::unordered_map<std::string, int>> strategy_index_;
};

// p[i][s]: probability that player i plays strategy s.
using MixProfile = std::vector<std::vector<Rational>>;

// Throws InputError unless every row is a distribution of the right size.
void ValidateProfile(const MatrixGame& game, const MixProfile& p);

struct PlanResult {
  Rational value;
  std::map<int64_t, Rational> plan;  // Positive weights only.
};

// Best value of a joint distribution whose marginals equal every player's
// mixed strategy, measured with player i's utility.
PlanResult PersonalizedPayoff(const MatrixGame& game, const MixProfile& p,
                              int i);

// As above, but player i's own marginal is free.
PlanResult BestResponseValue(const MatrixGame& game, const MixProfile& p,
                             int i);

struct EquilibriumReport {
  bool ok = true;
  int witness = -1;
  std::vector<Rational> payoff;
  std::vector<Rational> best;
};

EquilibriumReport IsPersonalizedEquilibrium(const MatrixGame& game,
                                            const MixProfile& p);

// Two-player best-response graph. Nodes 0..m-1 are ROW strategies, nodes
// m..m+n-1 are COLUMN strategies. Row i points to column j when i maximizes
// ROW's utility in column j; column j points to row i when j maximizes
// COLUMN's utility in row i. Ties keep every maximizer.
struct BestResponseGraph {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<int>> adj;
};

BestResponseGraph BuildBestResponseGraph(const MatrixGame& game);

struct CycleSolution {
  std::vector<int> cycle;  // Alternating row and column nodes, row first.
  MixProfile profile;      // Uniform over the cycle's rows and columns.
};

// Trims nodes without in- or out-edges, then walks first out-edges from
// the lowest remaining node until a node repeats.
CycleSolution FindCycleEquilibrium(const MatrixGame& game);

struct CycleComponent {
  CycleSolution cycle;
  Rational lambda;
};

// Writes an equilibrium as a convex combination of cycle equilibria. Throws
// PreconditionError when p is not an equilibrium.
std::vector<CycleComponent> DecomposeIntoCycles(const MatrixGame& game,
                                                const MixProfile& p);

struct EnumerationOptions {
  long max_lps = 20000;
};

struct EnumerationResult {
  std::vector<MixProfile> equilibria;
  bool complete = false;  // False when the LP budget ran out.
  long lps = 0;
};

// Branch-and-pin search over the joint-distribution LP for games with at
// most 64 pure profiles. Each branch pins one hyperedge weight of one player
// to zero; branching happens on the support of a player's joint
// distribution when that player has a strictly improving direction within
// it. Every returned profile passes IsPersonalizedEquilibrium.
EnumerationResult EnumerateRationalEquilibria(
    const MatrixGame& game, const EnumerationOptions& options = {});

// True iff some direction that keeps the other players' marginals, moves
// weight only off hyperedges in `support` and stays nonnegative elsewhere
// strictly increases player l's utility.
bool HasImprovingDirection(const MatrixGame& game, int l,
                           const std::vector<int64_t>& support, long* lps);

// The hyperedges such an improving direction strictly decreases, or nullopt
// when there is no improving direction.
std::optional<std::vector<int64_t>> ImprovingDirection(
    const MatrixGame& game, int l, const std::vector<int64_t>& support,
    long* lps);

}  // namespace flowgames::personalized

#endif  // FLOWGAMES_PERSONALIZED_H_
