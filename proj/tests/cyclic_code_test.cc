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

#include "qburst/cyclic_code.h"

#include <gtest/gtest.h>

#include <random>

#include "qburst/notation.h"
#include "qburst/qcc_burst.h"

using namespace qburst;

namespace {

CyclicCode hamming() { return CyclicCode::from_generator(7, Polynomial(FieldSpec::gf2(), {1, 1, 0, 1})); }

CyclicCode gf4_code(int n, const char *g) { return CyclicCode::from_generator(n, parse_generator(g, FieldSpec::gf4())); }

}  // namespace

TEST(cyclic_code, hamming_parameters) {
    CyclicCode c = hamming();
    EXPECT_EQ(c.n(), 7);
    EXPECT_EQ(c.k(), 4);
    EXPECT_EQ(c.r(), 3);
    EXPECT_EQ(c.h(), Polynomial(FieldSpec::gf2(), {1, 1, 1, 0, 1}));
    EXPECT_EQ(c.g() * c.h(), Polynomial::xn_minus_1(FieldSpec::gf2(), 7));
    EXPECT_TRUE((c.H() * c.G().transpose()).is_zero());
}

TEST(cyclic_code, matrix_shapes) {
    CyclicCode c = hamming();
    EXPECT_EQ(c.G().rows(), 4);
    EXPECT_EQ(c.G().cols(), 7);
    EXPECT_EQ(c.H().rows(), 3);
    EXPECT_EQ(c.G().row(0), (Vec{1, 1, 0, 1, 0, 0, 0}));
    // Trailing block of H is lower triangular with h_0 on its diagonal.
    for (int i = 0; i < 3; i++) {
        EXPECT_EQ(c.H().at(i, 4 + i), c.h().coeff(0));
        for (int j = i + 1; j < 3; j++) {
            EXPECT_EQ(c.H().at(i, 4 + j), 0u);
        }
    }
}

TEST(cyclic_code, remainder_of_x6) {
    CyclicCode c = hamming();
    Vec e(7, 0);
    e[6] = 1;
    EXPECT_EQ(c.remainder(e), (Vec{1, 0, 1}));
    EXPECT_EQ(c.to_poly(e), Polynomial::monomial(FieldSpec::gf2(), 6));
}

TEST(cyclic_code, weight_one_not_codeword) {
    CyclicCode c = hamming();
    for (int i = 0; i < 7; i++) {
        Vec e(7, 0);
        e[i] = 1;
        EXPECT_FALSE(c.contains(e));
    }
    EXPECT_TRUE(c.contains(c.G().row(2)));
}

TEST(cyclic_code, syndrome_and_remainder_share_kernel) {
    std::mt19937 rng(1);
    for (int n = 3; n <= 21; n += 2) {
        for (const Field &f : {FieldSpec::gf2(), FieldSpec::gf4()}) {
            for (auto &g : divisor_generators(n, f, 1, n - 1)) {
                CyclicCode c = CyclicCode::from_generator(n, g);
                ASSERT_TRUE((c.H() * c.G().transpose()).is_zero());
                ASSERT_EQ(c.g() * c.h(), Polynomial::xn_minus_1(f, n));
                for (int t = 0; t < 8; t++) {
                    Vec e(n);
                    for (auto &x : e) x = rng() % f->q();
                    if (t == 0) {
                        e = c.G().row(rng() % c.k());
                    }
                    Vec s = c.syndrome(e), r = c.remainder(e);
                    bool sz = std::all_of(s.begin(), s.end(), [](Symbol x) { return x == 0; });
                    bool rz = std::all_of(r.begin(), r.end(), [](Symbol x) { return x == 0; });
                    ASSERT_EQ(sz, rz);
                    ASSERT_EQ(rz, c.contains(e));
                }
            }
        }
    }
}

TEST(cyclic_code, rejects_non_divisor) {
    EXPECT_THROW(CyclicCode::from_generator(7, Polynomial(FieldSpec::gf2(), {1, 0, 1})), std::invalid_argument);
    EXPECT_THROW(hamming().remainder(Vec(6, 0)), std::invalid_argument);
}

TEST(cyclic_code, dual_containment) {
    EXPECT_TRUE(hermitian_dual_containing(gf4_code(5, "(1^2 2^1 1^0)")));
    EXPECT_TRUE(hermitian_dual_containing(gf4_code(5, "(1^2 3^1 1^0)")));
    EXPECT_FALSE(hermitian_dual_containing(gf4_code(5, "(1^1 1^0)")));
    EXPECT_TRUE(css_dual_containing(hamming(), hamming()));
    CyclicCode parity = CyclicCode::from_generator(3, Polynomial(FieldSpec::gf2(), {1, 1}));
    EXPECT_FALSE(css_dual_containing(parity, parity));
}

TEST(cyclic_code, classical_burst_limits) {
    EXPECT_EQ(classical_burst_limit(hamming()), 1);
    for (int n = 3; n <= 9; n += 2) {
        std::vector<Symbol> ones(n, 1);
        CyclicCode rep = CyclicCode::from_generator(n, Polynomial(FieldSpec::gf2(), ones));
        EXPECT_EQ(classical_burst_limit(rep), (n - 1) / 2) << n;
    }
    EXPECT_GE(classical_burst_limit(gf4_code(15, "(1^6 2^3 1^0)")), 3);
}

TEST(cyclic_code, burst_length) {
    EXPECT_EQ(burst_length(Vec{0, 0, 0}), 0);
    EXPECT_EQ(burst_length(Vec{0, 2, 0}), 1);
    EXPECT_EQ(burst_length(Vec{1, 0, 0, 3, 0}), 4);
    BurstPattern p = BurstPattern::from_vector(Vec{0, 1, 0, 3, 0});
    EXPECT_EQ(p.start, 1);
    EXPECT_EQ(p.coeffs, (Vec{1, 0, 3}));
    EXPECT_EQ(p.to_vector(5), (Vec{0, 1, 0, 3, 0}));
}

TEST(cyclic_code, burst_enumeration_count) {
    for (int q : {2, 4}) {
        for (int n = 1; n <= 9; n++) {
            for (int ell = 0; ell <= n; ell++) {
                std::uint64_t count = 0;
                for (int len = 0; len <= ell; len++) {
                    for (int st = 0; len == 0 ? st < 1 : st + len <= n; st++) {
                        for_each_burst(n, len, st, q, [&](const Vec &v) {
                            ASSERT_EQ(burst_length(v), len);
                            count++;
                        });
                    }
                }
                ASSERT_EQ(count, burst_count(n, ell, q)) << q << " " << n << " " << ell;
            }
        }
    }
}
