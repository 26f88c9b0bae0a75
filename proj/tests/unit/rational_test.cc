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

#include "flowgames/rational.h"

#include <unordered_set>

#include <gtest/gtest.h>

#include "flowgames/errors.h"

namespace flowgames {
namespace {

TEST(RationalTest, ParsesCanonicalForms) {
  EXPECT_EQ(Rational::Parse("2/4"), Rational(1, 2));
  EXPECT_EQ(Rational::Parse("-3"), Rational(-3));
  EXPECT_EQ(Rational::Parse(" 7/14 "), Rational(1, 2));
  EXPECT_EQ(Rational::Parse("6/3").ToString(), "2");
  EXPECT_EQ(Rational(-4, 6).ToString(), "-2/3");
}

TEST(RationalTest, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "x", "1/2/3", "0.5", "/2", "1/", "3/-6"}) {
    EXPECT_THROW(Rational::Parse(bad), InputError) << bad;
  }
  EXPECT_THROW(Rational(1, 0), InputError);
}

TEST(RationalTest, ArithmeticIsExact) {
  Rational third(1, 3);
  EXPECT_EQ(third + third + third, Rational(1));
  EXPECT_EQ(Rational(3, 4) - Rational(1, 4), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
  EXPECT_EQ(-Rational(1, 5), Rational(-1, 5));
  EXPECT_EQ(PowerOfHalf(10), Rational(1, 1024));
  EXPECT_EQ(PowerOfHalf(0), Rational(1));
}

TEST(RationalTest, OrderingAndHelpers) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Min(Rational(1, 3), Rational(1, 2)), Rational(1, 3));
  EXPECT_EQ(Max(Rational(1, 3), Rational(1, 2)), Rational(1, 2));
  EXPECT_EQ(Abs(Rational(-7, 3)), Rational(7, 3));
  EXPECT_EQ(Rational(0).sign(), 0);
  EXPECT_TRUE(Rational(0, 5).is_zero());
  EXPECT_DOUBLE_EQ(Rational(3, 8).ToDouble(), 0.375);
}

TEST(RationalTest, HashAgreesWithEquality) {
  std::unordered_set<Rational> set = {Rational(1, 2), Rational(2, 4),
                                      Rational(3, 6), Rational(1, 3)};
  EXPECT_EQ(set.size(), 2u);
}

}  // namespace
}  // namespace flowgames
