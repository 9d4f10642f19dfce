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

#ifndef QBURST_CYCLIC_CODE_H
#define QBURST_CYCLIC_CODE_H

#include "qburst/matrix.h"
#include "qburst/poly.h"

namespace qburst {

/// Cyclic [n, k] code generated by g(x) | x^n - 1.
///
/// G has rows x^i g(x), i < k. H has rows x^i h~(x), i < r, where h~ is the
/// reciprocal of h = (x^n - 1)/g, so H[i][i+j] = h_{k-j}. The trailing r x r
/// block of H is lower-triangular with diagonal h_0 and its last column is
/// (0, ..., 0, h_0).
class CyclicCode {
   public:
    /// Throws std::invalid_argument unless g is nonzero and divides x^n - 1.
    static CyclicCode from_generator(int n, const Polynomial &g);

    int n() const { return n_; }
    int k() const { return k_; }
    int r() const { return n_ - k_; }
    const Field &field() const { return g_.field(); }
    const Polynomial &g() const { return g_; }
    const Polynomial &h() const { return h_; }
    const MatrixGF &G() const { return G_; }
    const MatrixGF &H() const { return H_; }

    /// H e^T.
    Vec syndrome(const Vec &e) const;
    /// Coefficients of e(x) mod g(x), length r. Same kernel as syndrome().
    Vec remainder(const Vec &e) const;
    bool contains(const Vec &v) const;
    Polynomial to_poly(const Vec &v) const;

   private:
    CyclicCode(int n, Polynomial g, Polynomial h, MatrixGF G, MatrixGF H);
    void check_length(const Vec &v) const;

    int n_;
    int k_;
    Polynomial g_;
    Polynomial h_;
    MatrixGF G_;
    MatrixGF H_;
};

/// H H^dagger = 0; requires GF(4) (GF(2) is accepted, conjugation being trivial).
bool hermitian_dual_containing(const CyclicCode &c);
/// C2^perp inside C1, i.e. H1 H2^T = 0; both codes binary and of equal length.
bool css_dual_containing(const CyclicCode &c1, const CyclicCode &c2);
/// Largest b with every window of b consecutive columns of M^(b) independent.
int classical_burst_limit(const CyclicCode &c);

/// Length of the smallest non-wrapping window holding the support of v.
int burst_length(const Vec &v);

/// Non-wrapping burst: coefficients at start, start+1, ... with nonzero ends.
struct BurstPattern {
    int start = 0;
    Vec coeffs;

    int length() const { return static_cast<int>(coeffs.size()); }
    Vec to_vector(int n) const;
    /// Canonical pattern of v (the zero vector gives length 0).
    static BurstPattern from_vector(const Vec &v);
};

/// Calls fn(v) for every burst over GF(q) of exactly `len` positions starting
/// at `start` (nonzero end symbols), with v a length-n vector reused between calls.
template <typename Fn>
void for_each_burst(int n, int len, int start, Symbol q, Fn &&fn) {
    Vec v(n, 0);
    if (len == 0) {
        fn(static_cast<const Vec &>(v));
        return;
    }
    int last = start + len - 1;
    for (int i = start; i <= last; i++) {
        v[i] = 1;
    }
    for (int i = start + 1; i < last; i++) {
        v[i] = 0;
    }
    while (true) {
        fn(static_cast<const Vec &>(v));
        // Odometer: the end positions range over [1, q), the middle over [0, q).
        int i = start;
        while (i <= last) {
            Symbol lo = (i == start || i == last) ? 1 : 0;
            if (++v[i] < q) {
                break;
            }
            v[i] = lo;
            i++;
        }
        if (i > last) {
            return;
        }
    }
}

}  // namespace qburst

#endif
