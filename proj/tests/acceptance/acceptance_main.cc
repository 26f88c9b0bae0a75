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

// Runs the twelve acceptance criteria and prints one PASS/FAIL line each.
// Exits nonzero when any criterion fails. Every sample size, seed and
// tolerance is fixed below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "flowgames/bbc.h"
#include "flowgames/bgp.h"
#include "flowgames/errors.h"
#include "flowgames/gadgets.h"
#include "flowgames/io.h"
#include "flowgames/metric_lengths.h"
#include "flowgames/personalized.h"
#include "flowgames/pref_game.h"
#include "flowgames/reductions.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace flowgames {
namespace {

using gadgets::GadgetKind;
using personalized::MatrixGame;
using personalized::MixProfile;

constexpr uint64_t kSeed = 20260601;
constexpr double kFixtureSeconds = 1.0;
constexpr double kBgpSeconds = 60.0;
constexpr int kBgpInstances = 300;
constexpr int kBgpMaxNodes = 4;  // Plus the destination.
constexpr int kBgpMaxPaths = 4;
constexpr int kBgpMaxDen = 8;
constexpr int kArithmeticSamples = 50;
constexpr int kArithmeticMaxDen = 16;
constexpr int kLessPairs = 20;
constexpr int kBits = 3;
constexpr int kRandomPrefGames = 20;
constexpr int kRandomPrefMaxPlayers = 5;
constexpr int kTwoPlayerGames = 200;
constexpr int kEnumerationGames = 30;
constexpr int kEnumerationMaxEdges = 16;
constexpr int kIntervalSamples = 100;
constexpr int kIntervalAttempts = 20000;
constexpr int kMetricGames = 50;

const Rational& IntervalEpsL() {
  static const Rational v(1, 16);
  return v;
}
const Rational& IntervalEps() {
  static const Rational v(1, 4096);
  return v;
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first failure message and keeps counting.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  Outcome Done(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failure(s), first: " + first_};
  }

 private:
  int failures_ = 0;
  std::string first_;
};

std::string Str(const Rational& r) { return r.ToString(); }

std::string DataPath(const std::string& name) {
  return std::string(FLOWGAMES_TEST_DATA) + "/" + name;
}

pref::Profile LoadPrefProfile(const pref::PreferenceGame& game,
                              const std::string& name) {
  return reductions::PrefProfileFromNamed(
      game, io::ParseWeights(io::ReadJsonFile(DataPath(name))));
}

pref::Profile Midpoint(const pref::Profile& a, const pref::Profile& b) {
  pref::Profile m = a;
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < a[i].size(); ++j) {
      m[i][j] = (a[i][j] + b[i][j]) * Rational(1, 2);
    }
  }
  return m;
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

// An exact equilibrium found by best-response dynamics, trying a few
// player orders. Empty when none converges quickly.
std::optional<pref::Profile> DynamicsEquilibrium(const pref::PreferenceGame& game,
                                                 testing::Rng& rng) {
  std::vector<int> order(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) order[i] = i;
  for (int attempt = 0; attempt < 4; ++attempt) {
    const auto run = pref::BestResponseDynamics(
        game, pref::SelfProfile(game.num_players()), order, 10);
    if (run.converged && pref::IsEquilibrium(game, run.profile).ok) {
      return run.profile;
    }
    std::shuffle(order.begin(), order.end(), rng);
  }
  return std::nullopt;
}

// 1. Two seven-player equilibria whose midpoint is not one.
Outcome SevenPlayerNonConvexity() {
  const auto start = std::chrono::steady_clock::now();
  const auto game =
      io::ParsePreferenceGame(io::ReadJsonFile(DataPath("nonconvex.json")));
  const pref::Profile w = LoadPrefProfile(game, "nonconvex_w.json");
  const pref::Profile w2 = LoadPrefProfile(game, "nonconvex_w2.json");
  Check check;
  check.Expect(pref::IsEquilibrium(game, w).ok, "w is not an equilibrium");
  check.Expect(pref::IsEquilibrium(game, w2).ok, "w' is not an equilibrium");
  const auto mid = pref::IsEquilibrium(game, Midpoint(w, w2));
  check.Expect(!mid.ok, "midpoint verified as an equilibrium");
  const std::string witness =
      mid.witness_player >= 0 ? game.name(mid.witness_player) : "none";
  check.Expect(witness == "x", "midpoint witness is " + witness);
  const double secs = Seconds(start);
  check.Expect(secs < kFixtureSeconds, "took " + std::to_string(secs) + " s");
  return check.Done("w, w' verify; midpoint fails at x");
}

// 2. Stability coincides with every node being lexicographically maximal.
Outcome BgpStabilityEquivalence() {
  const auto start = std::chrono::steady_clock::now();
  testing::Rng rng(kSeed + 2);
  Check check;
  int stable = 0, unstable = 0;
  for (int trial = 0; trial < kBgpInstances; ++trial) {
    const bgp::BgpInstance inst =
        testing::RandomBgpInstance(rng, kBgpMaxNodes, kBgpMaxPaths);
    bgp::Assignment w = testing::RandomFeasibleAssignment(inst, rng, kBgpMaxDen);
    if (trial % 2 == 1) {
      const bgp::Assignment run = bgp::BestResponseDynamics(inst, w, 20).assignment;
      if (bgp::CheckFeasible(inst, run).ok) w = run;
    }
    bool all_lex = true;
    for (int v = 0; v < inst.num_nodes(); ++v) {
      if (v != inst.dest()) all_lex = all_lex && bgp::IsLexMaximal(inst, w, v);
    }
    const bool s = bgp::CheckStable(inst, w).stable;
    check.Expect(s == all_lex, "disagreement on instance " + std::to_string(trial));
    (s ? stable : unstable) += 1;
  }
  check.Expect(stable > 0 && unstable > 0, "only one verdict was exercised");
  const double secs = Seconds(start);
  check.Expect(secs < kBgpSeconds, "took " + std::to_string(secs) + " s");
  return check.Done(std::to_string(kBgpInstances) + " instances, " +
                    std::to_string(stable) + " stable, 0 disagreements");
}

Rational RunGadget(GadgetKind kind, const std::vector<Rational>& args,
                   const Rational& eps_l = Rational(1, 64)) {
  std::vector<std::string> names = {"x", "y"};
  names.resize(args.size());
  const auto f = gadgets::BuildGadget(kind, names, "g", eps_l);
  std::map<std::string, Rational> pins;
  for (size_t k = 0; k < args.size(); ++k) pins[names[k]] = args[k];
  return gadgets::EvaluateFixpoint(f, pins).output;
}

// 3. Boolean truth tables and exact arithmetic.
Outcome GadgetTruthTables() {
  Check check;
  for (int a = 0; a < 2; ++a) {
    check.Expect(RunGadget(GadgetKind::kNot, {Rational(a)}) == Rational(1 - a),
                 "NOT(" + std::to_string(a) + ")");
    for (int b = 0; b < 2; ++b) {
      const std::vector<Rational> in = {Rational(a), Rational(b)};
      const std::string at = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
      check.Expect(RunGadget(GadgetKind::kOr, in) == Rational(a | b), "OR" + at);
      check.Expect(RunGadget(GadgetKind::kAnd, in) == Rational(a & b), "AND" + at);
    }
  }
  testing::Rng rng(kSeed + 3);
  const Rational one(1), zero(0);
  for (int t = 0; t < kArithmeticSamples; ++t) {
    const Rational v = testing::RandomUnitRational(rng, kArithmeticMaxDen);
    const Rational u = testing::RandomUnitRational(rng, kArithmeticMaxDen);
    const std::string at = " at " + Str(v) + ", " + Str(u);
    check.Expect(RunGadget(GadgetKind::kHalf, {v}) == v / Rational(2), "HALF" + at);
    check.Expect(RunGadget(GadgetKind::kDouble, {v}) == Min(one, v * Rational(2)),
                 "DOUBLE" + at);
    check.Expect(RunGadget(GadgetKind::kCopy, {v}) == v, "COPY" + at);
    check.Expect(RunGadget(GadgetKind::kSum, {v, zero}) == v, "SUM(v,0)" + at);
    check.Expect(RunGadget(GadgetKind::kSum, {v, u}) == Min(one, v + u), "SUM" + at);
    check.Expect(RunGadget(GadgetKind::kDiff, {v, zero}) == v, "DIFF(v,0)" + at);
    check.Expect(RunGadget(GadgetKind::kDiff, {v, v}) == zero, "DIFF(v,v)" + at);
    check.Expect(RunGadget(GadgetKind::kDiff, {v, u}) == Max(zero, v - u), "DIFF" + at);
  }
  return check.Done("NOT/OR/AND tables; " + std::to_string(kArithmeticSamples) +
                    " samples of HALF, DOUBLE, COPY, SUM, DIFF");
}

// 4. LESS outputs 0 when v1 <= v2 and 1 when v1 - v2 >= eps_l.
Outcome LessThresholds() {
  Check check;
  testing::Rng rng(kSeed + 4);
  for (const Rational& eps_l : {Rational(1, 8), Rational(1, 64)}) {
    for (int t = 0; t < kLessPairs; ++t) {
      const Rational v2 = testing::RandomUnitRational(rng, 16) * (Rational(1) - eps_l);
      // The first pairs sit exactly on the thresholds.
      const Rational low = t == 0 ? v2 : v2 * testing::RandomUnitRational(rng, 8);
      const Rational high =
          t == 0 ? v2 + eps_l
                 : v2 + eps_l + (Rational(1) - v2 - eps_l) * testing::RandomUnitRational(rng, 8);
      const std::string tag = " eps_l=" + Str(eps_l) + " v2=" + Str(v2);
      check.Expect(RunGadget(GadgetKind::kLess, {low, v2}, eps_l) == Rational(0),
                   "LESS(" + Str(low) + ")" + tag);
      check.Expect(RunGadget(GadgetKind::kLess, {high, v2}, eps_l) == Rational(1),
                   "LESS(" + Str(high) + ")" + tag);
    }
  }
  return check.Done(std::to_string(kLessPairs) +
                    " pairs on each side for eps_l in {1/8, 1/64}");
}

// 5. Bits of k/8 + 1/16.
Outcome BitExtraction() {
  Check check;
  gadgets::Circuit c;
  c.inputs = {"x"};
  c.bits = gadgets::BitsSpec{"x", kBits};
  const auto cc = gadgets::CompileCircuit(c);
  const int values = 1 << kBits;
  for (int k = 0; k < values; ++k) {
    const auto r = gadgets::EvaluateFixpoint(
        cc.fragment, {{"x", Rational(2 * k + 1, 2 * values)}});
    for (int i = 1; i <= kBits; ++i) {
      const int p = r.game.index(cc.ports.at("bit" + std::to_string(i)));
      check.Expect(r.profile[p][p] == Rational((k >> (kBits - i)) & 1),
                   "bit " + std::to_string(i) + " of k=" + std::to_string(k));
    }
  }
  return check.Done("all 3 bits for the 8 inputs");
}

// 6. Equilibria survive every reduction and come back unchanged.
Outcome ReductionRoundTrips() {
  Check check;
  testing::Rng rng(kSeed + 6);
  std::vector<std::pair<pref::PreferenceGame, pref::Profile>> cases;
  const auto nonconvex = io::ParsePreferenceGame(io::ReadJsonFile(DataPath("nonconvex.json")));
  cases.emplace_back(nonconvex, LoadPrefProfile(nonconvex, "nonconvex_w.json"));
  int skipped = 0;
  while (static_cast<int>(cases.size()) < kRandomPrefGames + 1 && skipped < 200) {
    const auto game = testing::RandomPreferenceGame(
        rng, testing::Uniform(rng, 2, kRandomPrefMaxPlayers));
    const auto eq = DynamicsEquilibrium(game, rng);
    if (!eq) {
      ++skipped;
      continue;
    }
    cases.emplace_back(game, *eq);
  }
  check.Expect(static_cast<int>(cases.size()) == kRandomPrefGames + 1,
               "too few random games with a known equilibrium");

  int pulled_back = 0;
  for (size_t c = 0; c < cases.size(); ++c) {
    const auto& [game, w] = cases[c];
    const std::string tag = " (case " + std::to_string(c) + ")";
    const auto named = reductions::ToNamed(game, w);
    check.Expect(reductions::PrefProfileFromNamed(game, named) == w,
                 "identity round trip" + tag);
    const auto to_bgp = reductions::PrefToBgp(game);
    const auto to_bbc = reductions::PrefToBbc(game);
    const auto to_matrix = reductions::BgpToMatrix(to_bgp.target);
    const auto chain = to_bgp.map.Then(to_matrix.map);

    const auto in_bgp = to_bgp.map.Forward(named);
    const auto in_bbc = to_bbc.map.Forward(named);
    const auto in_matrix = chain.Forward(named);
    const auto w_bgp = reductions::BgpAssignmentFromNamed(to_bgp.target, in_bgp);
    check.Expect(bgp::CheckStable(to_bgp.target, w_bgp).stable, "BGP image" + tag);
    check.Expect(bbc::IsEquilibrium(to_bbc.target, reductions::BbcProfileFromNamed(
                                                       to_bbc.target, in_bbc))
                     .ok,
                 "BBC image" + tag);
    check.Expect(personalized::IsPersonalizedEquilibrium(
                     to_matrix.target,
                     reductions::MixProfileFromNamed(to_matrix.target, in_matrix))
                     .ok,
                 "matrix image" + tag);
    for (const auto* back : {&to_bgp.map, &to_bbc.map, &chain}) {
      const auto& forward = back == &to_bbc.map ? in_bbc
                            : back == &chain    ? in_matrix
                                                : in_bgp;
      const auto source = reductions::PrefProfileFromNamed(game, back->Backward(forward));
      check.Expect(source == w, "backward map is not the inverse" + tag);
      check.Expect(pref::IsEquilibrium(game, source).ok, "backward image" + tag);
    }
    // Stable assignments found directly on the BGP side map back to
    // equilibria as well.
    const auto run = bgp::BestResponseDynamics(
        to_bgp.target, bgp::ZeroAssignment(to_bgp.target), 20);
    if (run.converged && bgp::CheckStable(to_bgp.target, run.assignment).stable) {
      const auto source = reductions::PrefProfileFromNamed(
          game, to_bgp.map.Backward(reductions::ToNamed(to_bgp.target, run.assignment)));
      check.Expect(pref::IsEquilibrium(game, source).ok,
                   "BGP dynamics result maps back to a non-equilibrium" + tag);
      ++pulled_back;
    }
  }
  return check.Done("seven-player game + " + std::to_string(cases.size() - 1) +
                    " random games through BGP, BBC, matrix; " +
                    std::to_string(pulled_back) + " BGP-side equilibria pulled back");
}

std::vector<Rational> RandomDistribution(testing::Rng& rng, int n) {
  std::vector<Rational> y(n, Rational(0));
  Rational left(1);
  for (int c = 0; c + 1 < n; ++c) {
    y[c] = Min(left, testing::RandomUnitRational(rng, 6));
    left -= y[c];
  }
  y[n - 1] += left;
  return y;
}

// 7. Cycle equilibria of two-player games, and the closed-form best value.
Outcome TwoPlayerCycles() {
  Check check;
  testing::Rng rng(kSeed + 7);
  for (int t = 0; t < kTwoPlayerGames; ++t) {
    const int m = testing::Uniform(rng, 1, 4), n = testing::Uniform(rng, 1, 4);
    const MatrixGame g = testing::RandomMatrixGame(rng, {m, n}, -5, 5, 4);
    const std::string tag = " (game " + std::to_string(t) + ")";
    const auto sol = personalized::FindCycleEquilibrium(g);
    check.Expect(personalized::IsPersonalizedEquilibrium(g, sol.profile).ok,
                 "cycle profile fails" + tag);
    std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(n));
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < n; ++c) rows[r][c] = g.utility(0, g.Encode({r, c}));
    }
    const MixProfile p = {RandomDistribution(rng, m), RandomDistribution(rng, n)};
    check.Expect(personalized::BestResponseValue(g, p, 0).value ==
                     testing::TwoPlayerBestValue(rows, p[1]),
                 "best-response value differs from the closed form" + tag);
  }
  return check.Done(std::to_string(kTwoPlayerGames) + " games, m, n <= 4");
}

MixProfile PureProfile(const MatrixGame& g, const std::vector<int>& s) {
  MixProfile p;
  for (int i = 0; i < g.num_players(); ++i) {
    p.emplace_back(g.num_strategies(i), Rational(0));
    p[i][s[i]] = Rational(1);
  }
  return p;
}

// 8. Two pure equilibria of the three-player fixture; their mixture fails.
Outcome ThreePlayerNonConvexity() {
  Check check;
  const MatrixGame g = io::ParseMatrix(io::ReadJsonFile(DataPath("three_player.json")));
  const MixProfile p = PureProfile(g, {0, 0, 0});
  const MixProfile q = PureProfile(g, {0, 1, 1});
  check.Expect(personalized::IsPersonalizedEquilibrium(g, p).ok, "(a1,a2,a3) fails");
  check.Expect(personalized::IsPersonalizedEquilibrium(g, q).ok, "(a1,b2,b3) fails");
  MixProfile mid = p;
  for (int i = 0; i < 3; ++i) {
    for (int s = 0; s < 2; ++s) mid[i][s] = (p[i][s] + q[i][s]) * Rational(1, 2);
  }
  const auto r = personalized::IsPersonalizedEquilibrium(g, mid);
  check.Expect(!r.ok, "the mixture verifies");
  std::string detail = "pure profiles verify; mixture fails";
  if (!r.ok && r.witness >= 0) {
    detail += " at " + g.player(r.witness) + " (payoff " + Str(r.payoff[r.witness]) +
              " < " + Str(r.best[r.witness]) + ")";
  }
  return check.Done(detail);
}

// 9. Enumerated equilibria are exact, verified, and never missing.
Outcome EnumerationIsRational() {
  Check check;
  testing::Rng rng(kSeed + 9);
  std::vector<MatrixGame> games = {
      io::ParseMatrix(io::ReadJsonFile(DataPath("three_player.json")))};
  while (static_cast<int>(games.size()) < kEnumerationGames) {
    std::vector<int> sizes;
    const int players = testing::Uniform(rng, 2, 3);
    int product = 1;
    for (int i = 0; i < players; ++i) {
      const int cap = kEnumerationMaxEdges / product / (1 << (players - 1 - i));
      sizes.push_back(testing::Uniform(rng, 1, std::max(1, std::min(4, cap))));
      product *= sizes.back();
    }
    games.push_back(testing::RandomMatrixGame(rng, sizes, -3, 4, 3));
  }
  int total = 0;
  for (size_t k = 0; k < games.size(); ++k) {
    const std::string tag = " (game " + std::to_string(k) + ")";
    check.Expect(games[k].num_hyperedges() <= kEnumerationMaxEdges, "game too big" + tag);
    const auto res = personalized::EnumerateRationalEquilibria(games[k]);
    check.Expect(!res.equilibria.empty(), "no equilibrium emitted" + tag);
    for (const MixProfile& p : res.equilibria) {
      bool valid = true;
      try {
        personalized::ValidateProfile(games[k], p);
      } catch (const InputError&) {
        valid = false;
      }
      check.Expect(valid, "emitted profile is not a distribution" + tag);
      check.Expect(valid && personalized::IsPersonalizedEquilibrium(games[k], p).ok,
                   "emitted profile fails the verifier" + tag);
      ++total;
    }
  }
  return check.Done(std::to_string(games.size()) + " games, " + std::to_string(total) +
                    " equilibria, all verified");
}

// 10. Exact equilibria are eps-equilibria; the seven-player shift passes iff
// delta <= eps.
Outcome EpsMonotonicity() {
  Check check;
  const std::vector<Rational> eps_values = {Rational(0), Rational(1, 100),
                                            Rational(1, 10)};
  struct Case {
    pref::PreferenceGame game;
    pref::Profile w;
    std::vector<int> subset;  // Empty means all players.
  };
  std::vector<Case> corpus;
  const auto nonconvex = io::ParsePreferenceGame(io::ReadJsonFile(DataPath("nonconvex.json")));
  corpus.push_back({nonconvex, LoadPrefProfile(nonconvex, "nonconvex_w.json"), {}});
  corpus.push_back({nonconvex, LoadPrefProfile(nonconvex, "nonconvex_w2.json"), {}});
  testing::Rng rng(kSeed + 10);
  for (int t = 0; t < kRandomPrefGames; ++t) {
    const auto game = testing::RandomPreferenceGame(
        rng, testing::Uniform(rng, 2, kRandomPrefMaxPlayers));
    if (auto eq = DynamicsEquilibrium(game, rng)) corpus.push_back({game, *eq, {}});
  }
  for (GadgetKind kind : {GadgetKind::kAnd, GadgetKind::kHalf, GadgetKind::kLess}) {
    std::vector<std::string> names = {"x", "y"};
    names.resize(gadgets::Arity(kind));
    const auto f = gadgets::BuildGadget(kind, names, "g");
    std::map<std::string, Rational> pins;
    for (const auto& n : names) pins[n] = testing::RandomUnitRational(rng, 8);
    const auto fix = gadgets::EvaluateFixpoint(f, pins);
    corpus.push_back({fix.game, fix.profile, fix.order});
  }
  for (size_t c = 0; c < corpus.size(); ++c) {
    const auto& [game, w, subset] = corpus[c];
    for (const Rational& eps : eps_values) {
      check.Expect(pref::IsEpsEquilibrium(game, w, eps, subset.empty() ? nullptr : &subset)
                       .ok,
                   "corpus entry " + std::to_string(c) + " fails at eps=" + Str(eps));
    }
  }

  // x moves delta of its weight from b1 to c1, whose self-weight is 0.
  const pref::Profile base = LoadPrefProfile(nonconvex, "nonconvex_w.json");
  const int x = nonconvex.index("x"), b1 = nonconvex.index("b1"), c1 = nonconvex.index("c1");
  int checks = 0;
  for (const Rational& delta : {Rational(0), Rational(1, 200), Rational(1, 100),
                                Rational(3, 200), Rational(1, 20), Rational(1, 10),
                                Rational(3, 20)}) {
    pref::Profile w = base;
    w[x][b1] -= delta;
    w[x][c1] += delta;
    for (const Rational& eps : eps_values) {
      const bool ok = pref::IsEpsEquilibrium(nonconvex, w, eps).ok;
      check.Expect(ok == (delta <= eps),
                   "delta=" + Str(delta) + " eps=" + Str(eps) + " gave " +
                       (ok ? "pass" : "fail"));
      ++checks;
    }
  }
  return check.Done(std::to_string(corpus.size()) + " exact equilibria at 3 eps values; " +
                    std::to_string(checks) + " perturbation checks");
}

// 11. Propagated intervals contain perturbed outputs.
Outcome IntervalLemmas() {
  Check check;
  const Rational& eps_l = IntervalEpsL();
  const Rational& eps = IntervalEps();
  testing::Rng rng(kSeed + 11);
  std::ostringstream summary;
  for (GadgetKind kind :
       {GadgetKind::kNot, GadgetKind::kOr, GadgetKind::kAnd, GadgetKind::kSum,
        GadgetKind::kDiff, GadgetKind::kCopy, GadgetKind::kDouble, GadgetKind::kHalf,
        GadgetKind::kValue, GadgetKind::kLess, GadgetKind::kCorrection}) {
    std::vector<std::string> names = {"x", "y"};
    names.resize(gadgets::Arity(kind));
    const auto f = gadgets::BuildGadget(kind, names, "g", eps_l);
    const bool boolean_in = kind == GadgetKind::kNot || kind == GadgetKind::kOr ||
                            kind == GadgetKind::kAnd;
    int passed = 0, attempts = 0;
    while (passed < kIntervalSamples && attempts < kIntervalAttempts) {
      ++attempts;
      std::map<std::string, Rational> pins;
      std::map<std::string, gadgets::Interval> ranges;
      Rational truth(0);
      for (const auto& n : names) {
        Rational v;
        if (boolean_in) {
          v = Rational(testing::Uniform(rng, 0, 1));
        } else if (kind == GadgetKind::kCorrection) {
          // Within 5 eps_l of a boolean value.
          const Rational off = Rational(5) * eps_l * testing::RandomUnitRational(rng, 16);
          truth = Rational(testing::Uniform(rng, 0, 1));
          v = truth.is_zero() ? off : Rational(1) - off;
        } else {
          v = testing::RandomUnitRational(rng, 16);
        }
        pins[n] = v;
        ranges[n] = {v, v};
      }
      const auto fix = gadgets::EvaluateFixpoint(f, pins);
      const pref::Profile w = testing::PerturbedProfile(fix, eps, rng);
      if (!pref::IsEpsEquilibrium(fix.game, w, eps, &fix.order).ok) continue;
      ++passed;
      const int out = fix.game.index(f.output);
      const Rational y = w[out][out];
      const auto iv = gadgets::IntervalPropagate(f.root, ranges, eps, eps_l);
      check.Expect(iv.Contains(y), gadgets::ToString(kind) + " output " + Str(y) +
                                       " outside [" + Str(iv.lo) + ", " + Str(iv.hi) + "]");
      if (kind == GadgetKind::kCorrection) {
        const Rational gap = truth.is_zero() ? y : Rational(1) - y;
        check.Expect(gap <= Rational(2) * eps_l,
                     "CORRECTION output " + Str(y) + " is not within 2 eps_l of " +
                         Str(truth));
      }
    }
    check.Expect(passed == kIntervalSamples,
                 gadgets::ToString(kind) + ": only " + std::to_string(passed) +
                     " passing samples in " + std::to_string(attempts) + " attempts");
  }
  return check.Done(std::to_string(kIntervalSamples) +
                    " passing samples per gadget at (eps_l, eps) = (1/16, 1/4096)");
}

// 12. Both length encodings pass the library audit and the exhaustive
// oracle.
Outcome MetricAudits() {
  Check check;
  testing::Rng rng(kSeed + 12);
  std::vector<pref::PreferenceGame> games = {
      io::ParsePreferenceGame(io::ReadJsonFile(DataPath("nonconvex.json")))};
  for (int t = 0; t < kMetricGames; ++t) {
    games.push_back(testing::StrictPreferenceGame(rng, testing::Uniform(rng, 2, 5), 3));
  }
  int tables = 0;
  for (size_t k = 0; k < games.size(); ++k) {
    const std::string tag = " (game " + std::to_string(k) + ")";
    const auto inst = reductions::PrefToBgp(games[k]).target;
    const int d = inst.dest();
    const auto sp = reductions::ShortestPathLengths(inst);
    check.Expect(reductions::VerifyShortestPathRanking(inst, sp).ok,
                 "shortest-path ranking audit" + tag);
    for (int u = 0; u < inst.num_nodes(); ++u) {
      if (u == d) continue;
      check.Expect(testing::ExhaustiveRankingHolds(sp[u], inst.num_nodes(), d,
                                                   testing::ListedPaths(inst, u),
                                                   [](int a, int b) { return a != b; }),
                   "shortest-path oracle" + tag);
      ++tables;
    }
    const auto enc = reductions::MetricLengths(inst);
    const auto audit = reductions::VerifyMetricEncoding(enc);
    check.Expect(audit.triangle_ok, "metric triangle audit" + tag + ": " + audit.detail);
    check.Expect(audit.ranking_ok, "metric ranking audit" + tag + ": " + audit.detail);
    const int total = enc.augmented.num_nodes();
    auto allowed = [&enc](int a, int b) { return reductions::IsTemplateEdge(enc, a, b); };
    auto related = [&](int a, int b) { return allowed(a, b) || allowed(b, a); };
    for (int u = 0; u < static_cast<int>(enc.primed.size()); ++u) {
      if (u == d) continue;
      check.Expect(testing::ExhaustiveRankingHolds(enc.tables[u], total, d,
                                                   testing::ListedPaths(enc.augmented, u),
                                                   allowed),
                   "metric ranking oracle" + tag);
      check.Expect(testing::ExhaustiveTriangleHolds(enc.tables[u], total, related),
                   "metric triangle oracle" + tag);
      ++tables;
    }
  }
  return check.Done(std::to_string(games.size()) + " games, " + std::to_string(tables) +
                    " tables audited");
}

}  // namespace
}  // namespace flowgames

int main() {
  using flowgames::Outcome;
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
      {"seven-player non-convexity", flowgames::SevenPlayerNonConvexity},
      {"BGP stability equals lex-maximality", flowgames::BgpStabilityEquivalence},
      {"gadget truth tables", flowgames::GadgetTruthTables},
      {"LESS thresholds", flowgames::LessThresholds},
      {"bit extraction", flowgames::BitExtraction},
      {"reduction round trips", flowgames::ReductionRoundTrips},
      {"two-player cycle equilibria", flowgames::TwoPlayerCycles},
      {"three-player non-convexity", flowgames::ThreePlayerNonConvexity},
      {"rational enumeration", flowgames::EnumerationIsRational},
      {"eps-equilibrium monotonicity", flowgames::EpsMonotonicity},
      {"interval bounds", flowgames::IntervalLemmas},
      {"length encodings", flowgames::MetricAudits},
  };
  int failed = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[k].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double ms = flowgames::Seconds(start) * 1000.0;
    std::printf("%s %2zu %s (%.0f ms): %s\n", out.pass ? "PASS" : "FAIL", k + 1,
                criteria[k].first, ms, out.detail.c_str());
    std::fflush(stdout);
    failed += out.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
