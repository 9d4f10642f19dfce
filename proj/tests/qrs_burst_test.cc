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

#include "qburst/qrs_burst.h"

#include <gtest/gtest.h>

#include <random>

using namespace qburst;

namespace {

Vec random_combination(const MatrixGF &rows, std::mt19937 &rng) {
    const Field &f = rows.field();
    Vec v(rows.cols(), 0);
    for (int i = 0; i < rows.rows(); i++) {
        Symbol a = rng() % f->q();
        for (int j = 0; j < rows.cols(); j++) {
            v[j] ^= f->mul(a, rows.at(i, j));
        }
    }
    return v;
}

int dot_bits(const std::vector<std::uint8_t> &a, const std::vector<std::uint8_t> &b) {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); i++) s ^= a[i] & b[i];
    return s;
}

}  // namespace

TEST(qrs_burst, make_parameters) {
    RsCode a = RsCode::make(4, 5);
    EXPECT_EQ(a.n(), 15);
    EXPECT_EQ(a.k_c(), 10);
    EXPECT_EQ(a.hbar(), 2);
    EXPECT_EQ(a.K(), 5);
    EXPECT_EQ(a.code().g().degree(), 5);
    RsCode b = RsCode::make(5, 23);
    EXPECT_EQ(b.k_c(), 27);
    EXPECT_EQ(b.hbar(), 2);
    EXPECT_THROW(RsCode::make(4, 16), std::invalid_argument);
    EXPECT_THROW(RsCode::make(4, -3), std::invalid_argument);
    EXPECT_THROW(RsCode::make(4, 15), std::invalid_argument);
}

TEST(qrs_burst, narrow_sense_zeros) {
    RsCode rs = RsCode::make(5, 21);
    const Field &f = rs.field();
    for (int i = 1; i <= rs.n() - rs.k_c(); i++) {
        EXPECT_EQ(rs.code().g().eval(f->alpha_pow(i)), 0u) << i;
    }
    EXPECT_NE(rs.code().g().eval(1), 0u);
}

TEST(qrs_burst, lower_bound_and_qrb) {
    EXPECT_EQ(rs_lower_bound(RsCode::make(4, 5)), 5);
    EXPECT_EQ(rs_lower_bound(RsCode::make(5, 23)), 6);
    EXPECT_EQ(rs_lower_bound(RsCode::make(4, 11)), 1);
    EXPECT_EQ(rs_qrb_image(RsCode::make(4, 5)), 10);
    EXPECT_EQ(rs_qrb_image(RsCode::make(4, 1)), 14);
    EXPECT_EQ(rs_qrb_image(RsCode::make(5, 23)), 10);
}

TEST(qrs_burst, image_expand_basics) {
    Field f = FieldSpec::make(4);
    SelfDualBasis b = self_dual_basis(f);
    EXPECT_EQ(image_expand(Vec(3, 0), b), std::vector<std::uint8_t>(12, 0));
    for (int j = 0; j < 4; j++) {
        Vec v(3, 0);
        v[0] = b.elements()[j];
        auto img = image_expand(v, b);
        for (int i = 0; i < 12; i++) {
            EXPECT_EQ(img[i], i == j ? 1 : 0);
        }
    }
    EXPECT_EQ(image_burst_length(Vec(3, 0), b), 0);
}

TEST(qrs_burst, image_linearity_and_injectivity) {
    std::mt19937 rng(9);
    for (int m = 3; m <= 6; m++) {
        Field f = FieldSpec::make(m);
        for (const auto &b : all_self_dual_bases(f)) {
            for (int t = 0; t < 200; t++) {
                Vec x(6), y(6), s(6);
                for (int i = 0; i < 6; i++) {
                    x[i] = rng() % f->q();
                    y[i] = rng() % f->q();
                    s[i] = x[i] ^ y[i];
                }
                auto ix = image_expand(x, b), iy = image_expand(y, b), is = image_expand(s, b);
                for (std::size_t i = 0; i < is.size(); i++) {
                    ASSERT_EQ(is[i], ix[i] ^ iy[i]);
                }
                ASSERT_EQ(x == y, ix == iy);
            }
        }
    }
}

TEST(qrs_burst, image_burst_length_ranges) {
    Field f = FieldSpec::make(5);
    SelfDualBasis b = self_dual_basis(f);
    for (Symbol a = 1; a < 32; a++) {
        Vec v(4, 0);
        v[1] = a;
        int one = image_burst_length(v, b);
        EXPECT_GE(one, 1);
        EXPECT_LE(one, 5);
        for (Symbol c = 1; c < 32; c++) {
            v[2] = c;
            int two = image_burst_length(v, b);
            EXPECT_GE(two, 2);
            EXPECT_LE(two, 10);
        }
    }
}

TEST(qrs_burst, image_preserves_duality) {
    std::mt19937 rng(2);
    for (int m = 3; m <= 5; m++) {
        int n = (1 << m) - 1;
        for (int K = n - 2; K >= 1; K -= 4) {
            RsCode rs = RsCode::make(m, K);
            for (int t = 0; t < 1000 / 8; t++) {
                Vec c = random_combination(rs.code().G(), rng);
                Vec d = random_combination(rs.code().H(), rng);
                ASSERT_TRUE(rs.code().contains(d));
                ASSERT_EQ(dot_bits(image_expand(c, rs.basis()), image_expand(d, rs.basis())), 0);
            }
        }
    }
}

TEST(qrs_burst, algorithm2_m4) {
    RsReport a = algorithm2(RsCode::make(4, 5));
    EXPECT_EQ(a.L, 8);
    EXPECT_EQ(a.lower, 5);
    EXPECT_EQ(a.qrb_image, 10);
    RsReport b = algorithm2(RsCode::make(4, 1));
    EXPECT_EQ(b.L, 12);
    EXPECT_EQ(b.lower, 9);
    EXPECT_EQ(b.qrb_image, 14);
}

TEST(qrs_burst, report_invariants) {
    for (int m = 3; m <= 5; m++) {
        int n = (1 << m) - 1;
        for (int K = n - 2; K >= 1; K -= 2) {
            RsReport r = algorithm2(RsCode::make(m, K));
            EXPECT_LE(r.lower, r.L) << m << " " << K;
            EXPECT_LE(r.L, r.qrb_image) << m << " " << K;
            EXPECT_EQ(r.n, n);
            EXPECT_GE(r.min_rank, RsCode::make(m, K).hbar() - 1);
        }
    }
}

TEST(qrs_burst, explicit_basis_is_used) {
    Field f = FieldSpec::make(5);
    auto bases = all_self_dual_bases(f);
    RsCode a = RsCode::make(5, 9, bases.back());
    EXPECT_EQ(a.basis().elements(), bases.back().elements());
    EXPECT_THROW(RsCode::make(5, 9, self_dual_basis(FieldSpec::make(4))), std::invalid_argument);
}
