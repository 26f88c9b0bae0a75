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

#include "flowgames/bbc.h"

#include <gtest/gtest.h>

#include "flowgames/errors.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace flowgames::bbc {
namespace {

// u can go direct (length 3) or through v (1 + 1); v only goes direct.
BbcInstance Small() {
  return BbcInstance({"u", "v", "d"}, 2,
                     {{{0, 1}, Rational(1)}, {{0, 2}, Rational(1)},
                      {{1, 2}, Rational(1)}, {{1, 0}, Rational(1)}},
                     {Rational(1), Rational(1), Rational(0)},
                     {{{{0, 1}, Rational(1)}, {{1, 2}, Rational(1)}, {{0, 2}, Rational(3)}},
                      {{{1, 2}, Rational(1)}, {{1, 0}, Rational(2)}, {{0, 2}, Rational(2)}},
                      {}},
                     Rational(100));
}

TEST(BbcTest, ValidatesInstance) {
  auto make = [](Rational cost, Rational m) {
    return BbcInstance({"u", "d"}, 1, {{{0, 1}, cost}}, {Rational(1), Rational(0)},
                       {{{{0, 1}, Rational(5)}}, {}}, m);
  };
  EXPECT_NO_THROW(make(Rational(1), Rational(11)));
  EXPECT_THROW(make(Rational(-1), Rational(11)), InputError);
  EXPECT_THROW(make(Rational(1), Rational(10)), InputError);  // M <= n * 5
  const BbcInstance inst = Small();
  EXPECT_EQ(inst.length(0, 1, 0), Rational(100));  // Unlisted lengths cost M.
  EXPECT_FALSE(inst.is_available(2, 0));
}

TEST(BbcTest, UtilityUsesCheapestRouteAndPenalty) {
  const BbcInstance inst = Small();
  Profile w = ZeroProfile(inst);
  EXPECT_EQ(Utility(inst, w, 0).utility, Rational(-100));
  EXPECT_EQ(Utility(inst, w, 0).penalty, Rational(1));
  w[0][1] = Rational(1, 2);
  w[0][2] = Rational(1, 2);
  w[1][2] = Rational(1);
  const UtilityResult r = Utility(inst, w, 0);
  EXPECT_EQ(r.utility, -(Rational(1, 2) * Rational(2) + Rational(1, 2) * Rational(3)));
  EXPECT_EQ(r.penalty, Rational(0));
  EXPECT_EQ(r.flow.at({1, 2}), Rational(1, 2));
}

TEST(BbcTest, BestResponseAndEquilibrium) {
  const BbcInstance inst = Small();
  Profile w = ZeroProfile(inst);
  w[1][2] = Rational(1);
  const auto br = BestResponse(inst, w, 0);
  EXPECT_EQ(br.utility, Rational(-2));
  EXPECT_EQ(br.weights[1], Rational(1));
  w[0] = br.weights;
  EXPECT_TRUE(IsEquilibrium(inst, w).ok);
  w[0][1] = Rational(0);
  w[0][2] = Rational(1);
  const auto rep = IsEquilibrium(inst, w);
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.witness, 0);
  EXPECT_EQ(rep.best, Rational(-2));
  w[0][1] = Rational(1);
  EXPECT_FALSE(CheckFeasible(inst, w).ok);  // Budget 1, spends 2.
}

TEST(BbcTest, AnyNodePenaltyAddsArcsFromIntermediates) {
  BbcInstance inst = Small();
  Profile w = ZeroProfile(inst);
  w[0][1] = Rational(1);
  w[1][0] = Rational(1);
  // Stranded at v: defaulting from u directly is the only option.
  EXPECT_EQ(Utility(inst, w, 1).utility, Rational(-100));
  inst.set_penalty(PenaltyMode::kAnyNode);
  // v may now hop to u (length 2 for v) but that only adds cost.
  EXPECT_EQ(Utility(inst, w, 1).utility, Rational(-100));
  EXPECT_EQ(Utility(inst, w, 1).penalty, Rational(1));
}

// Property: the LP best response is at least as good as every grid row,
// and equals the grid optimum when costs are unit and capacities come
// from the same grid.
TEST(BbcTest, BestResponseMatchesGridSearch) {
  testing::Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = testing::Uniform(rng, 2, 3) + 1;
    const int d = n - 1;
    std::vector<std::string> names;
    for (int i = 0; i < d; ++i) names.push_back("n" + std::to_string(i));
    names.push_back("d");
    std::map<Edge, Rational> cost;
    std::vector<std::map<Edge, Rational>> lengths(n);
    for (int x = 0; x < d; ++x) {
      for (int y = 0; y < n; ++y) {
        if (x != y && testing::Uniform(rng, 0, 2) != 0) cost[{x, y}] = Rational(1);
      }
    }
    for (int u = 0; u < d; ++u) {
      for (const auto& [e, c] : cost) {
        lengths[u][e] = Rational(testing::Uniform(rng, 1, 5));
      }
    }
    std::vector<Rational> budget(n, Rational(0));
    for (int u = 0; u < d; ++u) budget[u] = Rational(testing::Uniform(rng, 1, 2));
    const BbcInstance inst(names, d, cost, budget, lengths, Rational(100));
    Profile w = ZeroProfile(inst);
    for (int x = 0; x < d; ++x) {
      Rational left = budget[x];
      for (int y : inst.available(x)) {
        const Rational v = Min(left, Rational(testing::Uniform(rng, 0, 6), 6));
        w[x][y] = v;
        left -= v;
      }
    }
    for (int u = 0; u < d; ++u) {
      const auto br = BestResponse(inst, w, u);
      Profile with = w;
      with[u] = br.weights;
      EXPECT_TRUE(CheckFeasible(inst, with).ok);
      EXPECT_EQ(Utility(inst, with, u).utility, br.utility);
      EXPECT_EQ(br.utility, testing::BbcGridBest(inst, w, u, 6)) << "trial " << trial;
    }
  }
}

}  // namespace
}  // namespace flowgames::bbc
