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

#ifndef FLOWGAMES_REDUCTIONS_H_
#define FLOWGAMES_REDUCTIONS_H_

#include <map>
#include <string>
#include <vector>

#include "flowgames/bbc.h"
#include "flowgames/bgp.h"
#include "flowgames/personalized.h"
#include "flowgames/pref_game.h"
#include "flowgames/rational.h"

namespace flowgames::reductions {

// Solutions of every game kind in one shape: player -> strategy -> weight,
// keyed by names. Preference games use player names as strategies, BGP
// instances use path indices, BBC instances use edge heads and matrix games
// use strategy names. Zero entries are omitted.
using NamedSolution = std::map<std::string, std::map<std::string, Rational>>;

NamedSolution ToNamed(const pref::PreferenceGame& game,
                      const pref::Profile& w);
NamedSolution ToNamed(const bgp::BgpInstance& inst, const bgp::Assignment& w);
NamedSolution ToNamed(const bbc::BbcInstance& inst, const bbc::Profile& w);
NamedSolution ToNamed(const personalized::MatrixGame& game,
                      const personalized::MixProfile& p);

// The inverse conversions throw InputError on unknown names.
pref::Profile PrefProfileFromNamed(const pref::PreferenceGame& game,
                                   const NamedSolution& s);
bgp::Assignment BgpAssignmentFromNamed(const bgp::BgpInstance& inst,
                                       const NamedSolution& s);
bbc::Profile BbcProfileFromNamed(const bbc::BbcInstance& inst,
                                 const NamedSolution& s);
personalized::MixProfile MixProfileFromNamed(
    const personalized::MatrixGame& game, const NamedSolution& s);

struct StrategyRef {
  std::string player;
  std::string strategy;
  auto operator<=>(const StrategyRef&) const = default;
};

// Per-player correspondence between source and target strategies. A slack
// target strategy receives whatever weight its player has left in the
// forward direction and is ignored in the backward direction.
class SolutionMap {
 public:
  void Add(StrategyRef source, StrategyRef target);
  void AddSlack(StrategyRef target);

  // Throw InputError on weight placed on an unmapped strategy.
  NamedSolution Forward(const NamedSolution& source) const;
  NamedSolution Backward(const NamedSolution& target) const;

  // this first, then `next`.
  SolutionMap Then(const SolutionMap& next) const;

  const std::map<StrategyRef, StrategyRef>& forward_table() const {
    return forward_;
  }
  const std::vector<StrategyRef>& slack() const { return slack_; }

 private:
  std::map<StrategyRef, StrategyRef> forward_;
  std::map<StrategyRef, StrategyRef> backward_;
  std::vector<StrategyRef> slack_;
};

template <typename Source, typename Target>
struct Reduction {
  Source source;
  Target target;
  SolutionMap map;
};

// Each player i gets the path (i, j, d) for every j it ranks at least as
// high as itself, and (i, d) for itself, ranked like the players.
Reduction<pref::PreferenceGame, bgp::BgpInstance> PrefToBgp(
    const pref::PreferenceGame& game);

// Unit costs and budgets; player i's lengths make routing through j cost
// one more than the number of players i ranks at least as high as j.
Reduction<pref::PreferenceGame, bbc::BbcInstance> PrefToBbc(
    const pref::PreferenceGame& game);

// One player per node with its paths plus a "(none)" strategy. A path pays
// its owner one plus the number of listed paths it is weakly preferred to,
// provided every proper suffix is played by the suffix's start node.
Reduction<bgp::BgpInstance, personalized::MatrixGame> BgpToMatrix(
    const bgp::BgpInstance& inst);

// One player per node with one strategy per available edge plus "(none)".
// A hyperedge pays the negated shortest-path length from the player to the
// destination over the chosen edges, or -M without a path.
Reduction<bbc::BbcInstance, personalized::MatrixGame> BbcToMatrix(
    const bbc::BbcInstance& inst);

inline constexpr char kNoneStrategy[] = "(none)";

}  // namespace flowgames::reductions

#endif  // FLOWGAMES_REDUCTIONS_H_
