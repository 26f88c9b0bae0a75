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

#ifndef FLOWGAMES_TESTS_SUPPORT_GENERATORS_H_
#define FLOWGAMES_TESTS_SUPPORT_GENERATORS_H_

#include <random>
#include <vector>

#include "flowgames/bgp.h"
#include "flowgames/gadgets.h"
#include "flowgames/personalized.h"
#include "flowgames/pref_game.h"
#include "flowgames/rational.h"

namespace flowgames::testing {

using Rng = std::mt19937_64;

int Uniform(Rng& rng, int lo, int hi);  // Inclusive.

// k / den with den in [1, max_den] and k in [0, den].
Rational RandomUnitRational(Rng& rng, int max_den);
// Integer numerator in [lo, hi] over a denominator in [1, max_den].
Rational RandomRational(Rng& rng, int lo, int hi, int max_den);

// Every player lists a random subset of the others plus itself, grouped
// into random tie classes.
pref::PreferenceGame RandomPreferenceGame(Rng& rng, int n);

// Every player ranks a random ordered subset of at most `max_others` other
// players strictly, then itself. No ties.
pref::PreferenceGame StrictPreferenceGame(Rng& rng, int n, int max_others);

// Nodes v0..v{n-1} plus "d"; each node owns up to max_paths simple paths
// to d, ranked in random tie classes.
bgp::BgpInstance RandomBgpInstance(Rng& rng, int max_nodes, int max_paths);

// Random rows made feasible by scaling paths down in order of length, so
// every suffix capacity is final before the paths it bounds are fixed.
bgp::Assignment RandomFeasibleAssignment(const bgp::BgpInstance& inst, Rng& rng,
                                         int max_den);

personalized::MatrixGame RandomMatrixGame(Rng& rng,
                                          const std::vector<int>& sizes,
                                          int lo, int hi, int max_den);

// Replays an exact fixpoint with every internal player re-choosing its row
// in evaluation order: it fills its list in order, asking each listed
// player for that player's current self-weight shifted by a random amount
// in [-eps, eps], and keeps the remainder. Inputs stay pinned.
pref::Profile PerturbedProfile(const gadgets::FixpointResult& fix,
                               const Rational& eps, Rng& rng);

}  // namespace flowgames::testing

#endif  // FLOWGAMES_TESTS_SUPPORT_GENERATORS_H_
