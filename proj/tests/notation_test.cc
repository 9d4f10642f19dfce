// Copyright 2026 The qburst Authors
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

#include "qburst/notation.h"

#include <gtest/gtest.h>

#include "qburst/errors.h"

using namespace qburst;

TEST(notation, parse_examples) {
    const Field &f4 = FieldSpec::gf4();
    EXPECT_EQ(parse_generator("(1^6 2^3 1^0)", f4), Polynomial(f4, {1, 0, 0, 2, 0, 0, 1}));
    const Field &f2 = FieldSpec::gf2();
    EXPECT_EQ(parse_generator("(1^3 1^1 1^0)", f2), Polynomial(f2, {1, 1, 0, 1}));
    EXPECT_EQ(parse_generator("(1^0)", f2), Polynomial::one(f2));
    EXPECT_EQ(parse_generator(" ( 1 ^ 6  3^3\t1^0 ) ", f4), parse_generator("(1^6 3^3 1^0)", f4));
}

TEST(notation, parse_errors) {
    const Field &f2 = FieldSpec::gf2();
    const Field &f4 = FieldSpec::gf4();
    EXPECT_THROW(parse_generator("(2^3 1^0)", f2), ParseError);
    EXPECT_THROW(parse_generator("(1^3 1^3 1^0)", f2), ParseError);
    EXPECT_THROW(parse_generator("(1^1 1^3 1^0)", f2), ParseError);
    EXPECT_THROW(parse_generator("(1^3 1^1)", f2), ParseError);
    EXPECT_THROW(parse_generator("(1^3 1^0", f2), ParseError);
    EXPECT_THROW(parse_generator("1^3 1^0)", f2), ParseError);
    EXPECT_THROW(parse_generator("(0^3 1^0)", f4), ParseError);
    EXPECT_THROW(parse_generator("(4^3 1^0)", f4), ParseError);
    EXPECT_THROW(parse_generator("()", f4), ParseError);
    EXPECT_THROW(parse_generator("(1^2 1^0) x", f4), ParseError);
}

TEST(notation, emit) {
    const Field &f4 = FieldSpec::gf4();
    EXPECT_EQ(emit_generator(Polynomial(f4, {1, 0, 0, 2, 0, 0, 1})), "(1^6 2^3 1^0)");
    EXPECT_EQ(emit_generator(Polynomial::one(f4)), "(1^0)");
    EXPECT_THROW(emit_generator(Polynomial(f4, {0, 1})), std::invalid_argument);
}

TEST(notation, round_trip_divisors) {
    int checked = 0;
    for (const Field &f : {FieldSpec::gf2(), FieldSpec::gf4()}) {
        for (int n = 3; n <= 45 && checked < 2000; n += 2) {
            DivisorEnumerator it(n, f, 0, n);
            int per_n = 0;
            while (auto g = it.next()) {
                ASSERT_EQ(parse_generator(emit_generator(*g), f), *g);
                checked++;
                if (++per_n >= 60) {
                    break;
                }
            }
        }
    }
    EXPECT_GE(checked, 1000);
}
