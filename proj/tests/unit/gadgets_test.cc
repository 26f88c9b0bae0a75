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

#include "flowgames/gadgets.h"

#include <gtest/gtest.h>

#include "flowgames/errors.h"
#include "support/generators.h"

namespace flowgames::gadgets {
namespace {

Rational Output(GadgetKind kind, const std::vector<Rational>& args,
             const Rational& eps_l = Rational(1, 64)) {
  std::vector<std::string> names = {"x", "y"};
  names.resize(args.size());
  const GameFragment f = BuildGadget(kind, names, "g", eps_l);
  std::map<std::string, Rational> pins;
  for (size_t k = 0; k < args.size(); ++k) pins[names[k]] = args[k];
  return EvaluateFixpoint(f, pins).output;
}

const PlayerSpec& Find(const GameFragment& f, const std::string& id) {
  for (const auto& p : f.players) {
    if (p.id == id) return p;
  }
  throw std::runtime_error("no player " + id);
}

using Prefs = std::vector<std::vector<std::string>>;

TEST(GadgetsTest, KindNamesRoundTrip) {
  for (GadgetKind k : {GadgetKind::kOr, GadgetKind::kNot, GadgetKind::kAnd,
                       GadgetKind::kSum, GadgetKind::kDiff, GadgetKind::kCopy,
                       GadgetKind::kDouble, GadgetKind::kHalf,
                       GadgetKind::kValue, GadgetKind::kLess,
                       GadgetKind::kCorrection}) {
    EXPECT_EQ(ParseGadgetKind(ToString(k)), k);
  }
  EXPECT_THROW(ParseGadgetKind("XOR"), InputError);
  EXPECT_EQ(Arity(GadgetKind::kLess), 2);
  EXPECT_EQ(Arity(GadgetKind::kValue), 0);
}

TEST(GadgetsTest, BuildsListedPreferenceStructure) {
  const GameFragment orf = BuildGadget(GadgetKind::kOr, {"x", "y"}, "g");
  EXPECT_EQ(Find(orf, "g/R1").prefs, (Prefs{{"x"}, {"y"}, {"g/R1"}}));
  EXPECT_EQ(Find(orf, "g/R").prefs, (Prefs{{"g/R1"}, {"g/R"}}));
  EXPECT_EQ(orf.output, "g/R");

  const GameFragment half = BuildGadget(GadgetKind::kHalf, {"x"}, "h");
  EXPECT_EQ(Find(half, "h/H1").prefs, (Prefs{{"x"}, {"h/H1"}}));
  EXPECT_EQ(Find(half, "h/H2").prefs, (Prefs{{"h/H1"}, {"h/H3"}, {"h/H2"}}));
  EXPECT_EQ(Find(half, "h/H3").prefs, (Prefs{{"h/H1"}, {"h/H"}, {"h/H3"}}));
  EXPECT_EQ(Find(half, "h/H").prefs, (Prefs{{"h/H1"}, {"h/H2"}, {"h/H"}}));

  const GameFragment diff = BuildGadget(GadgetKind::kDiff, {"x", "y"}, "d");
  EXPECT_EQ(Find(diff, "d/D").prefs, (Prefs{{"d/D1"}, {"y"}, {"d/D"}}));

  // One DIFF plus 1 + ceil(log2 8) DOUBLEs of four players each.
  const GameFragment less =
      BuildGadget(GadgetKind::kLess, {"x", "y"}, "l", Rational(1, 8));
  EXPECT_EQ(less.players.size(), 2u + 4u * 4u);
  EXPECT_THROW(BuildGadget(GadgetKind::kLess, {"x", "y"}, "l", Rational(3, 4)),
               InputError);
  EXPECT_THROW(BuildGadget(GadgetKind::kOr, {"x"}, "g"), InputError);
}

TEST(GadgetsTest, BooleanTruthTables) {
  for (int a = 0; a < 2; ++a) {
    EXPECT_EQ(Output(GadgetKind::kNot, {Rational(a)}), Rational(1 - a));
    for (int b = 0; b < 2; ++b) {
      const std::vector<Rational> in = {Rational(a), Rational(b)};
      EXPECT_EQ(Output(GadgetKind::kOr, in), Rational(a | b));
      EXPECT_EQ(Output(GadgetKind::kAnd, in), Rational(a & b));
    }
  }
  EXPECT_EQ(Output(GadgetKind::kValue, {}), Rational(1, 2));
}

// Property: the arithmetic gadgets compute their functions exactly.
TEST(GadgetsTest, ArithmeticIsExact) {
  testing::Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational a = testing::RandomUnitRational(rng, 16);
    const Rational b = testing::RandomUnitRational(rng, 16);
    EXPECT_EQ(Output(GadgetKind::kHalf, {a}), a / Rational(2));
    EXPECT_EQ(Output(GadgetKind::kDouble, {a}), Min(Rational(1), a * Rational(2)));
    EXPECT_EQ(Output(GadgetKind::kCopy, {a}), a);
    EXPECT_EQ(Output(GadgetKind::kSum, {a, b}), Min(Rational(1), a + b));
    EXPECT_EQ(Output(GadgetKind::kDiff, {a, b}), Max(Rational(0), a - b));
    EXPECT_EQ(Output(GadgetKind::kDiff, {a, a}), Rational(0));
    EXPECT_EQ(Output(GadgetKind::kSum, {a, Rational(0)}), a);
  }
}

TEST(GadgetsTest, LessThresholds) {
  for (const Rational& eps_l : {Rational(1, 8), Rational(1, 64)}) {
    testing::Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      const Rational b = testing::RandomUnitRational(rng, 16) * (Rational(1) - eps_l);
      const Rational below = b * testing::RandomUnitRational(rng, 8);
      const Rational above =
          b + eps_l + (Rational(1) - b - eps_l) * testing::RandomUnitRational(rng, 8);
      EXPECT_EQ(Output(GadgetKind::kLess, {below, b}, eps_l), Rational(0));
      EXPECT_EQ(Output(GadgetKind::kLess, {above, b}, eps_l), Rational(1));
    }
  }
  EXPECT_EQ(Output(GadgetKind::kLess, {Rational(1, 2), Rational(1, 2)}, Rational(1, 8)),
            Rational(0));
  EXPECT_EQ(Output(GadgetKind::kLess, {Rational(5, 8), Rational(1, 2)}, Rational(1, 8)),
            Rational(1));
}

TEST(GadgetsTest, CorrectionSnapsNearBooleanInputs) {
  const Rational eps_l(1, 16);
  for (const Rational& v : {Rational(0), Rational(1, 32), Rational(5, 16)}) {
    const Rational out = Output(GadgetKind::kCorrection, {v}, eps_l);
    if (v <= Rational(5) * eps_l) EXPECT_LE(out, Rational(2) * eps_l) << v;
  }
  for (const Rational& v : {Rational(11, 16), Rational(15, 16), Rational(1)}) {
    EXPECT_GE(Output(GadgetKind::kCorrection, {v}, eps_l),
              Rational(1) - Rational(2) * eps_l)
        << v;
  }
}

TEST(GadgetsTest, PinsAreValidated) {
  const GameFragment f = BuildGadget(GadgetKind::kOr, {"x", "y"}, "g");
  EXPECT_THROW(EvaluateFixpoint(f, {{"x", Rational(1)}}), InputError);
  EXPECT_THROW(EvaluateFixpoint(f, {{"x", Rational(1)}, {"y", Rational(2)}}),
               InputError);
  EXPECT_THROW(EvaluateFixpoint(
                   f, {{"x", Rational(0)}, {"y", Rational(0)}, {"z", Rational(0)}}),
               InputError);
}

// Property: outputs of eps-perturbed profiles that pass the eps test stay
// inside the propagated interval.
TEST(GadgetsTest, IntervalsContainPerturbedOutputs) {
  const Rational eps_l(1, 16), eps(1, 4096);
  testing::Rng rng(29);
  for (GadgetKind kind : {GadgetKind::kNot, GadgetKind::kOr, GadgetKind::kSum,
                          GadgetKind::kDiff, GadgetKind::kCopy,
                          GadgetKind::kHalf, GadgetKind::kDouble,
                          GadgetKind::kCorrection}) {
    std::vector<std::string> names = {"x", "y"};
    names.resize(Arity(kind));
    const GameFragment f = BuildGadget(kind, names, "g", eps_l);
    int checked = 0;
    for (int attempt = 0; attempt < 400 && checked < 30; ++attempt) {
      std::map<std::string, Rational> pins;
      std::map<std::string, Interval> ranges;
      for (const auto& name : names) {
        const Rational v = kind == GadgetKind::kCorrection
                               ? Rational(testing::Uniform(rng, 0, 1))
                               : testing::RandomUnitRational(rng, 16);
        pins[name] = v;
        ranges[name] = {v, v};
      }
      const FixpointResult fix = EvaluateFixpoint(f, pins);
      const pref::Profile w = testing::PerturbedProfile(fix, eps, rng);
      if (!pref::IsEpsEquilibrium(fix.game, w, eps, &fix.order).ok) continue;
      const int out = fix.game.index(f.output);
      const Interval iv = IntervalPropagate(f.root, ranges, eps, eps_l);
      EXPECT_TRUE(iv.Contains(w[out][out]))
          << ToString(kind) << " output " << w[out][out] << " outside ["
          << iv.lo << ", " << iv.hi << "]";
      ++checked;
    }
    EXPECT_GE(checked, 30) << ToString(kind);
  }
}

TEST(GadgetsTest, BitExtraction) {
  Circuit c;
  c.inputs = {"x"};
  c.bits = BitsSpec{"x", 3};
  const CompiledCircuit cc = CompileCircuit(c);
  for (int k = 0; k < 8; ++k) {
    const FixpointResult r =
        EvaluateFixpoint(cc.fragment, {{"x", Rational(2 * k + 1, 16)}});
    for (int i = 1; i <= 3; ++i) {
      const int p = r.game.index(cc.ports.at("bit" + std::to_string(i)));
      EXPECT_EQ(r.profile[p][p], Rational((k >> (3 - i)) & 1))
          << "k=" << k << " bit " << i;
    }
  }
}

TEST(GadgetsTest, CircuitCompilationRejectsCycles) {
  Circuit c;
  c.inputs = {"x"};
  c.gates = {{"a", GadgetKind::kOr, {"x", "b"}}, {"b", GadgetKind::kNot, {"a"}}};
  c.outputs = {"a"};
  EXPECT_THROW(CompileCircuit(c), InputError);
  c.inputs = {"x", "y"};
  c.gates = {{"a", GadgetKind::kOr, {"x", "y"}}, {"b", GadgetKind::kNot, {"a"}}};
  const CompiledCircuit ok = CompileCircuit(c);
  EXPECT_EQ(ok.ports.count("b"), 1u);
}

}  // namespace
}  // namespace flowgames::gadgets
