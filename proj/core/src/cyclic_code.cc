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

#include <stdexcept>

namespace qburst {

CyclicCode::CyclicCode(int n, Polynomial g, Polynomial h, MatrixGF G, MatrixGF H)
    : n_(n), k_(n - g.degree()), g_(std::move(g)), h_(std::move(h)), G_(std::move(G)), H_(std::move(H)) {}

CyclicCode CyclicCode::from_generator(int n, const Polynomial &g) {
    if (n < 1) {
        throw std::invalid_argument("code length must be positive");
    }
    if (g.is_zero() || g.degree() > n) {
        throw std::invalid_argument("generator must be nonzero with degree at most n");
    }
    const Field &f = g.field();
    auto [h, rem] = Polynomial::xn_minus_1(f, n).divmod(g);
    if (!rem.is_zero()) {
        throw std::invalid_argument("generator does not divide x^n - 1");
    }
    int r = g.degree();
    int k = n - r;
    MatrixGF G(f, k, n);
    for (int i = 0; i < k; i++) {
        for (int j = 0; j <= r; j++) {
            G.at(i, i + j) = g.coeff(j);
        }
    }
    MatrixGF H(f, r, n);
    for (int i = 0; i < r; i++) {
        for (int j = 0; j <= k; j++) {
            H.at(i, i + j) = h.coeff(k - j);
        }
    }
    return CyclicCode(n, g, h, std::move(G), std::move(H));
}

void CyclicCode::check_length(const Vec &v) const {
    if (static_cast<int>(v.size()) != n_) {
        throw std::invalid_argument("vector length differs from code length");
    }
}

Vec CyclicCode::syndrome(const Vec &e) const {
    check_length(e);
    return H_.apply(e);
}

Vec CyclicCode::remainder(const Vec &e) const {
    check_length(e);
    return (to_poly(e) % g_).to_vector(r());
}

bool CyclicCode::contains(const Vec &v) const {
    check_length(v);
    return (to_poly(v) % g_).is_zero();
}

Polynomial CyclicCode::to_poly(const Vec &v) const { return Polynomial(field(), v); }

bool hermitian_dual_containing(const CyclicCode &c) {
    if (c.field()->m() > 2) {
        throw std::invalid_argument("Hermitian duality needs GF(2) or GF(4)");
    }
    return product_is_zero(c.H(), c.H().conj_transpose());
}

bool css_dual_containing(const CyclicCode &c1, const CyclicCode &c2) {
    if (c1.n() != c2.n()) {
        throw std::invalid_argument("CSS codes differ in length");
    }
    if (c1.field()->m() != 1 || c2.field()->m() != 1) {
        throw std::invalid_argument("CSS codes must be binary");
    }
    return product_is_zero(c1.H(), c2.H().transpose());
}

int classical_burst_limit(const CyclicCode &c) {
    int n = c.n();
    int r = c.r();
    for (int b = 1; b <= r; b++) {
        if (r - b < b) {
            return b - 1;
        }
        for (int st = 0; st + 2 * b <= n; st++) {
            if (c.H().block(0, r - b, st, b).rank() < b) {
                return b - 1;
            }
        }
    }
    return r;
}

int burst_length(const Vec &v) {
    int lo = -1;
    int hi = -1;
    for (int i = 0; i < static_cast<int>(v.size()); i++) {
        if (v[i]) {
            if (lo < 0) {
                lo = i;
            }
            hi = i;
        }
    }
    return lo < 0 ? 0 : hi - lo + 1;
}

Vec BurstPattern::to_vector(int n) const {
    if (start < 0 || start + length() > n) {
        throw std::out_of_range("burst does not fit");
    }
    Vec v(n, 0);
    for (int i = 0; i < length(); i++) {
        v[start + i] = coeffs[i];
    }
    return v;
}

BurstPattern BurstPattern::from_vector(const Vec &v) {
    int lo = -1;
    int hi = -1;
    for (int i = 0; i < static_cast<int>(v.size()); i++) {
        if (v[i]) {
            if (lo < 0) {
                lo = i;
            }
            hi = i;
        }
    }
    if (lo < 0) {
        return {};
    }
    return {lo, Vec(v.begin() + lo, v.begin() + hi + 1)};
}

}  // namespace qburst
