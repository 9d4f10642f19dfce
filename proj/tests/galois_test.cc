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

#include "qburst/galois.h"

#include <gtest/gtest.h>

#include <random>

#include "qburst/errors.h"

using namespace qburst;

TEST(galois, default_moduli) {
    EXPECT_EQ(FieldSpec::default_modulus(1), 0b11u);
    EXPECT_EQ(FieldSpec::default_modulus(2), 0b111u);
    EXPECT_EQ(FieldSpec::default_modulus(3), 0b1011u);
    EXPECT_EQ(FieldSpec::default_modulus(4), 0b10011u);
    EXPECT_EQ(FieldSpec::default_modulus(5), 0b100101u);
    EXPECT_EQ(FieldSpec::default_modulus(6), 0b1011011u);
    EXPECT_EQ(FieldSpec::default_modulus(7), 0b10000011u);
    EXPECT_EQ(FieldSpec::default_modulus(8), 0b100011101u);
}

TEST(galois, gf4_encoding) {
    const Field &f = FieldSpec::gf4();
    // 2 is w and 3 is w^2 = w + 1.
    EXPECT_EQ(f->mul(2, 2), 3u);
    EXPECT_EQ(f->mul(2, 3), 1u);
    EXPECT_EQ(f->add(2, 1), 3u);
    EXPECT_EQ(f->conj(2), 3u);
    EXPECT_EQ(f->conj(3), 2u);
    EXPECT_EQ(f->conj(1), 1u);
    EXPECT_EQ(f->inv(2), 3u);
}

TEST(galois, reducible_modulus_rejected) {
    // x^4 + x^2 + 1 = (x^2 + x + 1)^2.
    try {
        FieldSpec::make(4, 0b10101);
        FAIL() << "expected ReducibleModulus";
    } catch (const ReducibleModulus &e) {
        EXPECT_EQ(e.modulus, 0b10101u);
        EXPECT_EQ(e.factor, 0b111u);
    }
    EXPECT_THROW(FieldSpec::make(3, 0b1001), ReducibleModulus);
    EXPECT_NO_THROW(FieldSpec::make(3, 0b1101));
}

TEST(galois, axioms_on_random_triples) {
    std::mt19937 rng(7);
    for (int m = 1; m <= 8; m++) {
        Field f = FieldSpec::make(m);
        std::uniform_int_distribution<Symbol> pick(0, f->q() - 1);
        for (int t = 0; t < 10000; t++) {
            Symbol a = pick(rng), b = pick(rng), c = pick(rng);
            ASSERT_EQ(f->mul(a, b), f->mul(b, a));
            ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
            ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
            ASSERT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
            ASSERT_EQ(f->mul(a, 1), a);
            ASSERT_EQ(f->add(a, 0), a);
            ASSERT_EQ(f->add(a, a), 0u);
            if (a != 0) {
                ASSERT_EQ(f->mul(a, f->inv(a)), 1u);
                ASSERT_EQ(f->div(f->mul(a, b), a), b);
            }
        }
    }
}

TEST(galois, frobenius) {
    for (int m = 1; m <= 8; m++) {
        Field f = FieldSpec::make(m);
        for (Symbol a = 0; a < f->q(); a++) {
            ASSERT_EQ(f->pow(a, f->q()), a);
            for (Symbol b = 0; b < f->q(); b += 1 + f->q() / 16) {
                ASSERT_EQ(f->square(f->add(a, b)), f->add(f->square(a), f->square(b)));
            }
            if (m % 2 == 0) {
                ASSERT_EQ(f->conj(f->conj(a)), a);
                ASSERT_EQ(f->conj(a), f->pow(a, 1u << (m / 2)));
            }
        }
    }
}

TEST(galois, generator_is_primitive) {
    for (int m = 1; m <= 8; m++) {
        Field f = FieldSpec::make(m);
        std::vector<bool> seen(f->q(), false);
        for (std::uint32_t i = 0; i + 1 < f->q(); i++) {
            Symbol a = f->alpha_pow(i);
            ASSERT_FALSE(seen[a]);
            seen[a] = true;
            ASSERT_EQ(f->log(a), i);
        }
    }
}

TEST(galois, trace_balanced_in_gf8) {
    Field f = FieldSpec::make(3);
    int ones = 0;
    for (Symbol a = 0; a < 8; a++) {
        Symbol t = f->trace(a);
        ASSERT_LE(t, 1u);
        ones += t;
    }
    EXPECT_EQ(ones, 4);
}

TEST(galois, trace_to_gf4) {
    Field f = FieldSpec::make(4);
    for (Symbol a = 0; a < 16; a++) {
        Symbol t = f->trace(a, 2);
        // Tr(a) = a + a^4 lies in the subfield fixed by a -> a^4.
        EXPECT_EQ(f->pow(t, 4), t);
        EXPECT_EQ(t, f->add(a, f->pow(a, 4)));
    }
}

TEST(galois, field_element_ops) {
    const Field &f4 = FieldSpec::gf4();
    FieldElement w(f4, 2);
    FieldElement one(f4, 1);
    EXPECT_EQ((w * w).value(), 3u);
    EXPECT_EQ((w + one).value(), 3u);
    EXPECT_EQ((one / w).value(), 3u);
    EXPECT_EQ(w.inverse().value(), 3u);
    EXPECT_EQ(w.pow(3).value(), 1u);
    EXPECT_EQ(w.conj().value(), 3u);
    EXPECT_EQ((w * w.conj()).trace().value(), 0u);
    FieldElement b(FieldSpec::gf2(), 1);
    EXPECT_THROW(w + b, std::invalid_argument);
    EXPECT_THROW(FieldElement(f4, 4), std::invalid_argument);
    EXPECT_THROW(FieldElement(f4, 0).inverse(), std::domain_error);
}

TEST(galois, gf4_self_dual_basis) {
    SelfDualBasis b = self_dual_basis(FieldSpec::gf4());
    EXPECT_EQ(b.elements(), (std::vector<Symbol>{2, 3}));
    const Field &f = FieldSpec::gf4();
    EXPECT_EQ(f->trace(f->mul(2, 2)), 1u);
    EXPECT_EQ(f->trace(f->mul(2, 3)), 0u);
    EXPECT_EQ(f->trace(f->mul(3, 3)), 1u);
}

TEST(galois, self_dual_gram_identity) {
    for (int m = 1; m <= 6; m++) {
        Field f = FieldSpec::make(m);
        auto bases = all_self_dual_bases(f);
        ASSERT_FALSE(bases.empty()) << m;
        EXPECT_EQ(bases.front().elements(), self_dual_basis(f).elements());
        for (const auto &b : bases) {
            ASSERT_EQ(b.m(), m);
            auto gram = b.gram();
            for (int i = 0; i < m; i++) {
                // Row i of the Gram matrix packed as bits.
                ASSERT_EQ(gram[i], 1u << i);
                for (int j = 0; j < m; j++) {
                    ASSERT_EQ(f->trace(f->mul(b.elements()[i], b.elements()[j])), i == j ? 1u : 0u);
                }
            }
            for (Symbol a = 0; a < f->q(); a++) {
                ASSERT_EQ(b.from_coordinates(b.coordinates(a)), a);
            }
        }
    }
}

TEST(galois, self_dual_basis_counts) {
    // Exhaustive enumeration: unordered self-dual bases of GF(2^m) over GF(2).
    EXPECT_EQ(all_self_dual_bases(FieldSpec::make(4)).size(), 2u);
    EXPECT_EQ(all_self_dual_bases(FieldSpec::make(5)).size(), 6u);
    EXPECT_EQ(all_self_dual_bases(FieldSpec::make(6)).size(), 32u);
    EXPECT_EQ(self_dual_basis(FieldSpec::make(4)).elements(), (std::vector<Symbol>{8, 11, 13, 15}));
}

TEST(galois, basis_rejects_non_self_dual) {
    Field f = FieldSpec::make(3);
    EXPECT_THROW(SelfDualBasis(f, {1, 2, 4}), std::invalid_argument);
    EXPECT_THROW(SelfDualBasis(f, {1, 2}), std::invalid_argument);
}
