// Copyright 2026 The kplanar Authors
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

#include <gtest/gtest.h>

#include "kplanar/rational.hpp"

namespace kplanar {
namespace {

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("49/170"), rat(49, 170));
  EXPECT_EQ(parse_rational(" -6/4 "), rat(-3, 2));
  EXPECT_EQ(parse_rational("+7"), 7);
  EXPECT_EQ(to_string(rat(10, 4)), "5/2");
  EXPECT_EQ(to_string(rat(-8, 4)), "-2");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Rational, RejectsMalformed) {
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("1.5"), InputError);
  EXPECT_THROW(parse_rational("/3"), InputError);
  EXPECT_THROW(parse_rational(""), InputError);
  EXPECT_THROW(rat(1, 0), InputError);
}

TEST(Rational, ExactArithmetic) {
  Rational a = rat(49, 170);
  EXPECT_EQ(rat(9, 5) - 6 * a, rat(6, 85));
  EXPECT_EQ(30 - 8 / a, rat(110, 49));
  EXPECT_EQ(rat(1, 3) + rat(1, 6), rat(1, 2));
  // no rounding at large sizes
  Rational big = rat(1, 3);
  for (int i = 0; i < 60; ++i) big *= 3;
  EXPECT_EQ(den(big), 1);
}

TEST(Rational, FloorCeil) {
  EXPECT_EQ(floor_div(rat(7, 2)), 3);
  EXPECT_EQ(floor_div(rat(-7, 2)), -4);
  EXPECT_EQ(ceil_div(rat(7, 2)), 4);
  EXPECT_EQ(ceil_div(rat(-7, 2)), -3);
  EXPECT_EQ(floor_div(Rational(5)), 5);
}

TEST(Rational, MinMaxDouble) {
  EXPECT_EQ(rmin(rat(1, 3), rat(1, 4)), rat(1, 4));
  EXPECT_EQ(rmax(rat(1, 3), rat(1, 4)), rat(1, 3));
  EXPECT_DOUBLE_EQ(to_double(rat(1, 4)), 0.25);
}

}  // namespace
}  // namespace kplanar
