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

#include "flowgames/personalized.h"

#include <gtest/gtest.h>

#include "flowgames/errors.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace flowgames::personalized {
namespace {

// Player 1 earns 1 on (a1,a2,a3) and (a1,b2,b3), 2 on (b1,a2,b3) and
// (b1,b2,a3); players 2 and 3 earn 1 everywhere.
MatrixGame ThreePlayer() {
  MatrixGame g({"P1", "P2", "P3"}, {{"a1", "b1"}, {"a2", "b2"}, {"a3", "b3"}});
  for (int64_t code = 0; code < g.num_hyperedges(); ++code) {
    const auto e = g.Decode(code);
    g.set_utility(1, e, Rational(1));
    g.set_utility(2, e, Rational(1));
  }
  g.set_utility(0, {0, 0, 0}, Rational(1));
  g.set_utility(0, {0, 1, 1}, Rational(1));
  g.set_utility(0, {1, 0, 1}, Rational(2));
  g.set_utility(0, {1, 1, 0}, Rational(2));
  return g;
}

MixProfile Pure(const MatrixGame& g, const std::vector<int>& s) {
  MixProfile p;
  for (int i = 0; i < g.num_players(); ++i) {
    p.emplace_back(g.num_strategies(i), Rational(0));
    p[i][s[i]] = Rational(1);
  }
  return p;
}

TEST(PersonalizedTest, EncodingRoundTrips) {
  MatrixGame g({"A", "B", "C"}, {{"x", "y"}, {"p", "q", "r"}, {"s"}});
  EXPECT_EQ(g.num_hyperedges(), 6);
  for (int64_t code = 0; code < 6; ++code) {
    const auto e = g.Decode(code);
    EXPECT_EQ(g.Encode(e), code);
    for (int i = 0; i < 3; ++i) EXPECT_EQ(g.Component(code, i), e[i]);
  }
  EXPECT_THROW(g.Encode({0, 3, 0}), InputError);
  EXPECT_THROW(MatrixGame({"A"}, {{"x", "x"}}), InputError);
  EXPECT_EQ(g.utility(0, 3), Rational(0));
}

TEST(PersonalizedTest, ValidatesProfiles) {
  const MatrixGame g = ThreePlayer();
  MixProfile p = Pure(g, {0, 0, 0});
  EXPECT_NO_THROW(ValidateProfile(g, p));
  p[0][0] = Rational(1, 2);
  EXPECT_THROW(ValidateProfile(g, p), InputError);
  p[0][1] = Rational(1, 2);
  p[2] = {Rational(3, 2), Rational(-1, 2)};
  EXPECT_THROW(ValidateProfile(g, p), InputError);
}

TEST(PersonalizedTest, ThreePlayerMixtureIsNotAnEquilibrium) {
  const MatrixGame g = ThreePlayer();
  const MixProfile p = Pure(g, {0, 0, 0});
  const MixProfile q = Pure(g, {0, 1, 1});
  EXPECT_TRUE(IsPersonalizedEquilibrium(g, p).ok);
  EXPECT_TRUE(IsPersonalizedEquilibrium(g, q).ok);
  MixProfile mid = p;
  for (int i = 0; i < 3; ++i) {
    for (int s = 0; s < 2; ++s) mid[i][s] = (p[i][s] + q[i][s]) * Rational(1, 2);
  }
  const auto r = IsPersonalizedEquilibrium(g, mid);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.witness, 0);
  EXPECT_EQ(r.payoff[0], Rational(1));
  EXPECT_EQ(r.best[0], Rational(2));
}

TEST(PersonalizedTest, BestResponseGraphKeepsTies) {
  MatrixGame g({"R", "C"}, {{"r0", "r1"}, {"c0", "c1"}});
  g.set_utility(0, {0, 0}, Rational(1));
  g.set_utility(0, {1, 0}, Rational(1));
  g.set_utility(1, {0, 1}, Rational(1));
  const auto graph = BuildBestResponseGraph(g);
  EXPECT_EQ(graph.adj[0], (std::vector<int>{2, 3}));
  EXPECT_EQ(graph.adj[1], (std::vector<int>{2, 3}));
  EXPECT_EQ(graph.adj[2], (std::vector<int>{1}));
  EXPECT_EQ(graph.adj[3], (std::vector<int>{0, 1}));  // Row 1 is a tie.
}

// Property: cycle solutions verify, the best-response LP matches the
// closed form, and cycle decompositions rebuild the profile.
TEST(PersonalizedTest, TwoPlayerCycleSolutionsVerify) {
  testing::Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = testing::Uniform(rng, 1, 4), n = testing::Uniform(rng, 1, 4);
    const MatrixGame g = testing::RandomMatrixGame(rng, {m, n}, -3, 5, 3);
    const CycleSolution sol = FindCycleEquilibrium(g);
    EXPECT_TRUE(IsPersonalizedEquilibrium(g, sol.profile).ok) << "trial " << trial;
    std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(n));
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < n; ++c) rows[r][c] = g.utility(0, g.Encode({r, c}));
    }
    MixProfile any;
    any.push_back(std::vector<Rational>(m, Rational(1, m)));
    std::vector<Rational> y(n, Rational(0));
    Rational left(1);
    for (int c = 0; c + 1 < n; ++c) {
      y[c] = Min(left, testing::RandomUnitRational(rng, 4));
      left -= y[c];
    }
    y[n - 1] += left;
    any.push_back(y);
    EXPECT_EQ(BestResponseValue(g, any, 0).value, testing::TwoPlayerBestValue(rows, y));

    const auto parts = DecomposeIntoCycles(g, sol.profile);
    MixProfile rebuilt = {std::vector<Rational>(m, Rational(0)),
                          std::vector<Rational>(n, Rational(0))};
    Rational total(0);
    for (const auto& part : parts) {
      total += part.lambda;
      for (int i = 0; i < 2; ++i) {
        for (size_t s = 0; s < rebuilt[i].size(); ++s) {
          rebuilt[i][s] += part.lambda * part.cycle.profile[i][s];
        }
      }
    }
    EXPECT_EQ(total, Rational(1));
    EXPECT_EQ(rebuilt, sol.profile);
  }
}

TEST(PersonalizedTest, DecompositionRejectsNonEquilibria) {
  MatrixGame g({"R", "C"}, {{"r0", "r1"}, {"c0", "c1"}});
  g.set_utility(0, {0, 0}, Rational(1));
  g.set_utility(1, {0, 0}, Rational(1));
  EXPECT_THROW(DecomposeIntoCycles(g, Pure(g, {1, 0})), PreconditionError);
}

TEST(PersonalizedTest, EnumerationFindsVerifiedEquilibria) {
  const MatrixGame g = ThreePlayer();
  const auto res = EnumerateRationalEquilibria(g);
  EXPECT_TRUE(res.complete);
  ASSERT_FALSE(res.equilibria.empty());
  for (const auto& p : res.equilibria) {
    EXPECT_TRUE(IsPersonalizedEquilibrium(g, p).ok);
  }
  long lps = 0;
  const int64_t pure = g.Encode({0, 0, 0});
  for (int l = 0; l < 3; ++l) {
    EXPECT_FALSE(HasImprovingDirection(g, l, {pure}, &lps));
  }
  EXPECT_GT(lps, 0);
}

}  // namespace
}  // namespace flowgames::personalized
