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

#ifndef FLOWGAMES_GADGETS_H_
#define FLOWGAMES_GADGETS_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flowgames/pref_game.h"
#include "flowgames/rational.h"

namespace flowgames::gadgets {

enum class GadgetKind {
  kOr,
  kNot,
  kAnd,
  kSum,
  kDiff,
  kCopy,
  kDouble,
  kHalf,
  kValue,
  kLess,
  kCorrection,
  kOne,  // A single player that ranks only itself; its weight is 1.
};

std::string ToString(GadgetKind kind);
// Accepts the upper-case names used in circuit files ("AND", "LESS", ...).
GadgetKind ParseGadgetKind(const std::string& name);
int Arity(GadgetKind kind);

struct PlayerSpec {
  std::string id;
  std::vector<std::vector<std::string>> prefs;
};

// Build tree of a gadget instance: wires are player ids, children are the
// sub-gadgets in build order.
struct GadgetNode {
  GadgetKind kind = GadgetKind::kOne;
  std::string instance;
  std::vector<std::string> inputs;
  std::string output;
  // LESS only: the helper player of the final sum, which keeps its weight
  // on itself exactly when the comparison comes out false.
  std::string complement;
  std::vector<GadgetNode> children;
};

// A gadget's players. Inputs are external players that the fragment reads.
// Internal ids are namespaced as "<instance>/<role>".
struct GameFragment {
  std::vector<std::string> inputs;
  std::string output;
  std::vector<PlayerSpec> players;
  GadgetNode root;
};

// Builds one gadget. eps_l sets the precision of LESS and CORRECTION.
GameFragment BuildGadget(GadgetKind kind,
                         const std::vector<std::string>& inputs,
                         const std::string& instance,
                         const Rational& eps_l = Rational(1, 64));

// The preference game over the fragment's inputs (each ranking only
// itself) followed by its internal players.
pref::PreferenceGame FragmentGame(const GameFragment& fragment);

struct FixpointResult {
  pref::PreferenceGame game;
  pref::Profile profile;
  Rational output;
  std::vector<int> order;  // Internal players in evaluation order.
};

// Exact equilibrium of the internal players with every input pinned to the
// given weight on itself. Acyclic parts are solved by best responses in
// dependency order; three-player cycles with the structure of the halving
// gadget are solved as a linear system. Any other cycle raises
// AnalysisError. The result passes a best-response check for every
// internal player.
FixpointResult EvaluateFixpoint(const GameFragment& fragment,
                                const std::map<std::string, Rational>& pins);

struct Interval {
  Rational lo;
  Rational hi;
  bool Contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// Worst-case output range over approximate equilibria with tolerance eps in
// which internal players only weight players they list, given ranges for
// the inputs. Rules per primitive, applied through the build tree and
// clamped to [0, 1]:
//   NOT 1 - v +- eps, OR and SUM min(1, a + b) +- 3 eps,
//   DIFF max(0, a - b) +- 3 eps, COPY v +- 2 eps, HALF v / 2 +- 4 eps.
// CORRECTION maps inputs within 5 eps_l of 0 (of 1) to [0, 2 eps_l]
// ([1 - 2 eps_l, 1]) and anything else to [0, 1]. Requires
// eps <= eps_l^3 and a range for every input.
Interval IntervalPropagate(const GadgetNode& gadget,
                           const std::map<std::string, Interval>& inputs,
                           const Rational& eps, const Rational& eps_l);

struct Gate {
  std::string id;
  GadgetKind kind = GadgetKind::kOne;
  std::vector<std::string> args;
};

// Extracts n binary digits of wire `of`, most significant first.
struct BitsSpec {
  std::string of;
  int n = 0;
};

// Feeds eight groups of six wires back into three coordinate inputs: one OR
// per wire position across the groups, one AND per coordinate over its two
// ORs, then NOT, and the coordinate becomes SUM(COPY(coordinate), NOT).
struct FeedbackSpec {
  std::vector<std::string> coordinates;
  std::vector<std::vector<std::string>> groups;
};

struct Circuit {
  std::vector<std::string> inputs;
  std::vector<Gate> gates;
  std::vector<std::string> outputs;
  std::optional<BitsSpec> bits;
  std::optional<FeedbackSpec> feedback;
  Rational eps_l = Rational(1, 64);
};

struct CompiledCircuit {
  GameFragment fragment;  // Inputs are the circuit inputs not fed back.
  pref::PreferenceGame game;
  // Wire -> player id: every input, gate and output, plus "bit<i>".
  std::map<std::string, std::string> ports;
};

// Throws InputError on unknown wires, arity mismatches and cyclic gates.
CompiledCircuit CompileCircuit(const Circuit& circuit);

}  // namespace flowgames::gadgets

#endif  // FLOWGAMES_GADGETS_H_
