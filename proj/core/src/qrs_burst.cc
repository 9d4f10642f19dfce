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

#include <bit>
#include <climits>
#include <stdexcept>

#include "qburst/errors.h"
#include "qburst/qcc_burst.h"

namespace qburst {

RsCode::RsCode(int m, CyclicCode code, SelfDualBasis basis)
    : m_(m), code_(std::move(code)), basis_(std::move(basis)) {}

RsCode RsCode::make(int m, int K, std::optional<SelfDualBasis> basis) {
    Field f = FieldSpec::make(m);
    int n = static_cast<int>(f->q()) - 1;
    if ((n + K) % 2 != 0) {
        throw std::invalid_argument("k_c = (n + K)/2 is not an integer");
    }
    int kc = (n + K) / 2;
    if (K < 0 || kc >= n || 2 * kc < n) {
        throw std::invalid_argument("need n <= 2 k_c < 2n");
    }
    Polynomial g = Polynomial::one(f);
    for (int i = 1; i <= n - kc; i++) {
        g = g * Polynomial(f, {f->alpha_pow(i), 1});
    }
    CyclicCode code = CyclicCode::from_generator(n, g);
    for (int i = 0; i < code.r(); i++) {
        if (!code.contains(code.H().row(i))) {
            throw NotDualContaining("RS code does not contain its dual");
        }
    }
    if (basis && !same_field(basis->field(), f)) {
        throw std::invalid_argument("basis over a different field");
    }
    return RsCode(m, std::move(code), basis ? std::move(*basis) : self_dual_basis(f));
}

std::vector<std::uint8_t> image_expand(const Vec &v, const SelfDualBasis &basis) {
    int m = basis.m();
    std::vector<std::uint8_t> bits(v.size() * m, 0);
    for (std::size_t i = 0; i < v.size(); i++) {
        if (!basis.field()->contains(v[i])) {
            throw std::invalid_argument("symbol outside the basis field");
        }
        std::uint32_t c = basis.coordinates(v[i]);
        for (int j = 0; j < m; j++) {
            bits[i * m + j] = (c >> j) & 1;
        }
    }
    return bits;
}

namespace {

// Image burst length of the symbols v[lo..hi) placed at their absolute positions.
int span_bits(const Symbol *v, int len, const SelfDualBasis &basis) {
    int m = basis.m();
    int first = -1;
    int last = -1;
    for (int i = 0; i < len; i++) {
        if (v[i]) {
            std::uint32_t c = basis.coordinates(v[i]);
            if (first < 0) {
                first = i * m + std::countr_zero(c);
            }
            last = i * m + 31 - std::countl_zero(c);
        }
    }
    return first < 0 ? 0 : last - first + 1;
}

}  // namespace

int image_burst_length(const Vec &v, const SelfDualBasis &basis) {
    return span_bits(v.data(), static_cast<int>(v.size()), basis);
}

int rs_lower_bound(const RsCode &rs) { return (rs.hbar() - 1) * rs.m() + 1; }

int rs_qrb_image(const RsCode &rs) { return (rs.n() * rs.m() - rs.K() * rs.m()) / 4; }

RsReport algorithm2(const RsCode &rs) {
    const CyclicCode &c = rs.code();
    const Field &f = rs.field();
    const SelfDualBasis &basis = rs.basis();
    int n = c.n();
    int t = rs.hbar() + 1;
    RsReport rep;
    rep.m = rs.m();
    rep.n = n;
    rep.K = rs.K();
    rep.lower = rs_lower_bound(rs);
    rep.qrb_image = rs_qrb_image(rs);
    rep.min_rank = INT_MAX;
    rep.max_rank = -1;
    int best = INT_MAX;
    std::uint32_t q = f->q();
    for (int st = 0; st + 2 * t <= n; st++) {
        WindowBlock w = shortened_window(c, t, st);
        DependencyPairSet set = boxplus(c, w);
        int rank = t - static_cast<int>(set.pairs.size());
        rep.windows++;
        rep.min_rank = std::min(rep.min_rank, rank);
        rep.max_rank = std::max(rep.max_rank, rank);
        std::size_t v = set.pairs.size();
        if (v == 0) {
            continue;
        }
        if (v > 3) {
            throw std::logic_error("window rank far below the expected bound");
        }
        // Restrict each pair to its window and tail, and precompute G (e_i + f_i).
        std::vector<Vec> ew(v, Vec(t));
        std::vector<Vec> fw(v, Vec(t));
        std::vector<Vec> gd(v);
        for (std::size_t i = 0; i < v; i++) {
            const auto &p = set.pairs[i];
            Vec d(n);
            for (int j = 0; j < n; j++) {
                d[j] = p.e[j] ^ p.f[j];
            }
            gd[i] = c.G().apply(d);
            for (int j = 0; j < t; j++) {
                ew[i][j] = p.e[st + j];
                fw[i][j] = p.f[n - t + j];
            }
        }
        std::vector<Symbol> lam(v, 0);
        Vec e(t);
        Vec fv(t);
        Vec g(c.k());
        std::uint64_t combos = 1;
        for (std::size_t i = 0; i < v; i++) {
            combos *= q;
        }
        for (std::uint64_t idx = 1; idx < combos; idx++) {
            std::uint64_t x = idx;
            for (std::size_t i = 0; i < v; i++) {
                lam[i] = static_cast<Symbol>(x % q);
                x /= q;
            }
            std::fill(g.begin(), g.end(), 0);
            std::fill(e.begin(), e.end(), 0);
            std::fill(fv.begin(), fv.end(), 0);
            for (std::size_t i = 0; i < v; i++) {
                if (!lam[i]) {
                    continue;
                }
                for (int j = 0; j < c.k(); j++) {
                    g[j] ^= f->mul(lam[i], gd[i][j]);
                }
                for (int j = 0; j < t; j++) {
                    e[j] ^= f->mul(lam[i], ew[i][j]);
                    fv[j] ^= f->mul(lam[i], fw[i][j]);
                }
            }
            bool stabilizer = true;
            for (Symbol s : g) {
                if (s) {
                    stabilizer = false;
                    break;
                }
            }
            if (stabilizer) {
                continue;
            }
            int bl = std::max(span_bits(e.data(), t, basis), span_bits(fv.data(), t, basis));
            best = std::min(best, bl);
        }
    }
    if (rep.windows == 0) {
        rep.min_rank = rep.max_rank = 0;
    }
    if (best == INT_MAX) {
        rep.L = rep.qrb_image;
        rep.flags.emplace_back("bound-limited");
    } else {
        rep.L = best - 1;
    }
    if (rep.max_rank > rs.hbar()) {
        rep.flags.emplace_back("full-rank-window");
    }
    if (rep.windows > 0 && rep.min_rank < rs.hbar() - 1) {
        rep.flags.emplace_back("rank-below-bound");
    }
    if (rep.L < rep.lower || rep.L > rep.qrb_image) {
        rep.flags.emplace_back("bound-violation");
    }
    return rep;
}

}  // namespace qburst
