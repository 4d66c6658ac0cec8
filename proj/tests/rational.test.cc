// Copyright 2026 The stabdisj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "stabdisj/rational.h"

#include "gtest/gtest.h"

#include "stabdisj/errors.h"

using namespace stabdisj;

TEST(rational, canonical_form) {
    Rational q = make_rational(6, -4);
    ASSERT_EQ(to_string(q), "-3/2");
    ASSERT_EQ(to_string(make_rational(4, 2)), "2/1");
    ASSERT_EQ(pretty(make_rational(4, 2)), "2");
    ASSERT_EQ(pretty(make_rational(7, 3)), "7/3");
    ASSERT_THROW(make_rational(1, 0), DimensionError);
}

TEST(rational, parse) {
    ASSERT_EQ(parse_rational("7/3"), make_rational(7, 3));
    ASSERT_EQ(parse_rational("-14/6"), make_rational(-7, 3));
    ASSERT_EQ(parse_rational("+5"), make_rational(5));
    ASSERT_THROW(parse_rational("1/0"), ParseError);
    ASSERT_THROW(parse_rational("1/-2"), ParseError);
    ASSERT_THROW(parse_rational("x"), ParseError);
    ASSERT_THROW(parse_rational(""), ParseError);
    ASSERT_THROW(parse_rational("3/"), ParseError);
}

TEST(rational, round_trip) {
    for (long n = -20; n <= 20; n++) {
        for (long d = 1; d <= 9; d++) {
            Rational q = make_rational(n, d);
            ASSERT_EQ(parse_rational(to_string(q)), q);
            ASSERT_EQ(parse_rational(pretty(q)), q);
        }
    }
}

TEST(rational, floor_and_ceil) {
    ASSERT_EQ(floor(make_rational(7, 3)), 2);
    ASSERT_EQ(ceil(make_rational(7, 3)), 3);
    ASSERT_EQ(floor(make_rational(-7, 3)), -3);
    ASSERT_EQ(ceil(make_rational(-7, 3)), -2);
    ASSERT_EQ(floor(make_rational(4)), 4);
    ASSERT_EQ(ceil(make_rational(4)), 4);
    ASSERT_TRUE(is_integer(make_rational(8, 4)));
    ASSERT_FALSE(is_integer(make_rational(8, 3)));
}

TEST(rational, lcm_gcd_and_narrowing) {
    ASSERT_EQ(lcm(Integer(4), Integer(6)), 12);
    ASSERT_EQ(gcd(Integer(4), Integer(6)), 2);
    ASSERT_EQ(to_long(Integer(-17)), -17);
    ASSERT_THROW(to_long(Integer("100000000000000000000000")), TooLarge);
}
