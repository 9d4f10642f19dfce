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

#include "qburst/qcc_burst.h"

#include <stdexcept>
#include <string>
#include <unordered_map>

#include "qburst/errors.h"

namespace qburst {

const char *to_string(Construction c) { return c == Construction::kHermitian ? "hermitian" : "css"; }

const char *to_string(ErrorPart p) {
    switch (p) {
        case ErrorPart::kQuaternary:
            return "quaternary";
        case ErrorPart::kX:
            return "x";
        case ErrorPart::kZ:
            return "z";
    }
    return "?";
}

QuantumCyclicCode::QuantumCyclicCode(Construction c, std::shared_ptr<const CyclicCode> c1,
                                     std::shared_ptr<const CyclicCode> c2)
    : construction_(c), c1_(std::move(c1)), c2_(std::move(c2)) {}

QuantumCyclicCode QuantumCyclicCode::hermitian(const CyclicCode &c) {
    if (!hermitian_dual_containing(c)) {
        throw NotDualContaining("code does not contain its Hermitian dual");
    }
    auto p = std::make_shared<const CyclicCode>(c);
    return QuantumCyclicCode(Construction::kHermitian, p, p);
}

QuantumCyclicCode QuantumCyclicCode::css(const CyclicCode &c1, const CyclicCode &c2) {
    if (!css_dual_containing(c1, c2)) {
        throw NotDualContaining("the dual of C2 is not contained in C1");
    }
    auto p1 = std::make_shared<const CyclicCode>(c1);
    auto p2 = c1.g() == c2.g() ? p1 : std::make_shared<const CyclicCode>(c2);
    return QuantumCyclicCode(Construction::kCss, p1, p2);
}

int QuantumCyclicCode::K() const { return c1_->k() + c2_->k() - n(); }

std::vector<ErrorPart> QuantumCyclicCode::parts() const {
    if (construction_ == Construction::kHermitian) {
        return {ErrorPart::kQuaternary};
    }
    return {ErrorPart::kX, ErrorPart::kZ};
}

const CyclicCode &QuantumCyclicCode::detecting_code(ErrorPart part) const {
    return part == ErrorPart::kZ ? *c2_ : *c1_;
}

bool QuantumCyclicCode::is_stabilizer(ErrorPart part, const Vec &d) const {
    switch (part) {
        case ErrorPart::kQuaternary:
            return c1_->G().apply(conj(c1_->field(), d)) == Vec(c1_->k(), 0);
        case ErrorPart::kX:
            return c2_->G().apply(d) == Vec(c2_->k(), 0);
        case ErrorPart::kZ:
            return c1_->G().apply(d) == Vec(c1_->k(), 0);
    }
    return false;
}

std::vector<Polynomial> QuantumCyclicCode::generators() const {
    if (construction_ == Construction::kCss && !single_code()) {
        return {c1_->g(), c2_->g()};
    }
    return {c1_->g()};
}

WindowBlock build_window(const CyclicCode &c, int ell, int start) {
    if (ell < 1 || 2 * ell > c.r()) {
        throw std::out_of_range("window length outside [1, r/2]");
    }
    return shortened_window(c, ell, start);
}

WindowBlock shortened_window(const CyclicCode &c, int ell, int start) {
    if (ell < 1 || ell > c.r()) {
        throw std::out_of_range("window length outside [1, r]");
    }
    if (start < 0 || start > c.n() - 2 * ell) {
        throw std::out_of_range("window start outside [0, n - 2 ell]");
    }
    return {ell, start, c.H().block(0, c.r() - ell, start, ell)};
}

namespace {

DependencyPairSet boxplus_reduced(const CyclicCode &c, const WindowBlock &w, const ReducedForm &red) {
    const Field &f = c.field();
    const MatrixGF &H = c.H();
    int n = c.n();
    int r = c.r();
    int ell = w.ell;
    DependencyPairSet out{w, {}};
    for (std::size_t i = 0; i < red.free_cols.size(); i++) {
        Vec e(n, 0);
        e[w.start + red.free_cols[i]] = 1;
        for (std::size_t j = 0; j < red.pivot_cols.size(); j++) {
            e[w.start + red.pivot_cols[j]] = red.combination[i][j];
        }
        Vec s = H.apply(e);
        // Back-substitution on the lower-triangular tail of H.
        Vec fv(n, 0);
        for (int t = 0; t < ell; t++) {
            int row = r - ell + t;
            Symbol acc = s[row];
            for (int u = 0; u < t; u++) {
                acc ^= f->mul(H.at(row, n - ell + u), fv[n - ell + u]);
            }
            fv[n - ell + t] = f->div(acc, H.at(row, n - ell + t));
        }
        out.pairs.push_back({std::move(e), std::move(fv)});
    }
    return out;
}

}  // namespace

DependencyPairSet boxplus(const CyclicCode &c, const WindowBlock &w) {
    return boxplus_reduced(c, w, row_reduce(w.block));
}

bool degeneracy_check(const QuantumCyclicCode &q, ErrorPart part, const Vec &e, const Vec &f) {
    const CyclicCode &c = q.detecting_code(part);
    if (c.syndrome(e) != c.syndrome(f)) {
        throw std::invalid_argument("degeneracy check needs equal syndromes");
    }
    Vec d(e.size());
    for (std::size_t i = 0; i < e.size(); i++) {
        d[i] = e[i] ^ f[i];
    }
    return q.is_stabilizer(part, d);
}

PartLimit algorithm1_part(const QuantumCyclicCode &q, ErrorPart part) {
    const CyclicCode &c = q.detecting_code(part);
    const Field &fld = c.field();
    const MatrixGF &H = c.H();
    int n = c.n();
    int r = c.r();
    int cap = r / 2;
    PartLimit out{part, -1, -1, false};

    // Length-one prechecks: zero columns and proportional column pairs.
    for (int i = 0; i < n; i++) {
        if (H.col(i) == Vec(r, 0)) {
            out.L = out.ell0 = 0;
            return out;
        }
    }
    for (int i = 0; i < n && out.L < 0; i++) {
        int pi = 0;
        while (H.at(pi, i) == 0) {
            pi++;
        }
        for (int j = i + 1; j < n; j++) {
            if (H.at(pi, j) == 0) {
                continue;
            }
            Symbol lambda = fld->div(H.at(pi, j), H.at(pi, i));
            bool prop = true;
            for (int row = 0; row < r && prop; row++) {
                prop = fld->mul(lambda, H.at(row, i)) == H.at(row, j);
            }
            if (!prop) {
                continue;
            }
            out.ell0 = 0;
            Vec e(n, 0);
            Vec f(n, 0);
            e[i] = lambda;
            f[j] = 1;
            if (!degeneracy_check(q, part, e, f)) {
                out.L = 0;
                break;
            }
        }
    }
    if (out.L == 0) {
        return out;
    }

    for (int ell = 1; ell <= cap; ell++) {
        bool rank_deficient = false;
        bool nondegenerate = false;
        for (int st = 0; st + 2 * ell <= n && !nondegenerate; st++) {
            WindowBlock w = build_window(c, ell, st);
            ReducedForm red = row_reduce(w.block);
            if (red.rank == ell) {
                continue;
            }
            rank_deficient = true;
            for (const auto &p : boxplus_reduced(c, w, red).pairs) {
                if (!degeneracy_check(q, part, p.e, p.f)) {
                    nondegenerate = true;
                    break;
                }
            }
        }
        if (rank_deficient && out.ell0 < 0) {
            out.ell0 = ell - 1;
        }
        if (nondegenerate) {
            out.L = ell - 1;
            break;
        }
    }
    if (out.L < 0) {
        out.L = cap;
        out.cap_limited = true;
    }
    if (out.ell0 < 0) {
        out.ell0 = out.L;
    }
    return out;
}

int qrb_delta(int n, int K, int L) { return n - K - 4 * L; }

std::string qrb_class(int delta) {
    if (delta == 0) {
        return "optimal";
    }
    if (delta == 1 || delta == 2) {
        return "nearly optimal";
    }
    return "suboptimal";
}

QccReport algorithm1(const QuantumCyclicCode &q) {
    QccReport rep;
    rep.n = q.n();
    rep.K = q.K();
    rep.construction = q.construction();
    rep.generators = q.generators();
    rep.L = -1;
    rep.ell0 = -1;
    bool cap_limited = false;
    for (ErrorPart part : q.parts()) {
        PartLimit pl = algorithm1_part(q, part);
        rep.parts.push_back(pl);
        if (rep.L < 0 || pl.L < rep.L) {
            rep.L = pl.L;
            cap_limited = pl.cap_limited;
        } else if (pl.L == rep.L) {
            cap_limited = cap_limited || pl.cap_limited;
        }
        if (rep.ell0 < 0 || pl.ell0 < rep.ell0) {
            rep.ell0 = pl.ell0;
        }
    }
    if (cap_limited) {
        rep.flags.emplace_back("cap-limited");
    }
    rep.delta = qrb_delta(rep.n, rep.K, rep.L);
    if (rep.delta < 0) {
        throw std::logic_error("quantum Reiger bound violated: n - K - 4L = " + std::to_string(rep.delta));
    }
    return rep;
}

std::uint64_t burst_count(int n, int ell, int q) {
    std::uint64_t total = 1;
    for (int b = 1; b <= ell && b <= n; b++) {
        std::uint64_t per = b == 1 ? q - 1 : std::uint64_t(q - 1) * (q - 1);
        for (int i = 2; i < b; i++) {
            per *= q;
            if (per > (1ull << 50)) {
                return UINT64_MAX;
            }
        }
        total += per * (n - b + 1);
    }
    return total;
}

namespace {

std::string pack(const Vec &v) {
    std::string s(v.size(), '\0');
    for (std::size_t i = 0; i < v.size(); i++) {
        s[i] = static_cast<char>(v[i]);
    }
    return s;
}

// Key identifying the stabilizer coset of e: equal keys iff the difference is a stabilizer.
Vec coset_key(const QuantumCyclicCode &q, ErrorPart part, const Vec &e) {
    switch (part) {
        case ErrorPart::kQuaternary:
            return q.c1().G().apply(conj(q.c1().field(), e));
        case ErrorPart::kX:
            return q.c2().G().apply(e);
        case ErrorPart::kZ:
            return q.c1().G().apply(e);
    }
    return {};
}

}  // namespace

std::pair<int, int> brute_force_limit(const QuantumCyclicCode &q, std::uint64_t max_patterns) {
    int L = -1;
    int ell0 = -1;
    int n = q.n();
    for (int ell = 1; ell <= n && L < 0; ell++) {
        bool injective = true;
        bool consistent = true;
        for (ErrorPart part : q.parts()) {
            const CyclicCode &c = q.detecting_code(part);
            Symbol qs = c.field()->q();
            if (burst_count(n, ell, static_cast<int>(qs)) > max_patterns) {
                throw GuardExceeded("brute-force burst enumeration exceeds its budget");
            }
            std::unordered_map<std::string, std::string> seen;
            for (int b = 0; b <= ell && consistent; b++) {
                for (int st = 0; (b == 0 ? st == 0 : st + b <= n) && consistent; st++) {
                    for_each_burst(n, b, st, qs, [&](const Vec &e) {
                        if (!consistent) {
                            return;
                        }
                        std::string syn = pack(c.remainder(e));
                        std::string key = pack(coset_key(q, part, e));
                        auto [it, fresh] = seen.emplace(std::move(syn), key);
                        if (!fresh) {
                            injective = false;
                            if (it->second != key) {
                                consistent = false;
                            }
                        }
                    });
                }
            }
        }
        if (!injective && ell0 < 0) {
            ell0 = ell - 1;
        }
        if (!consistent) {
            L = ell - 1;
        }
    }
    if (L < 0) {
        L = n;
    }
    if (ell0 < 0) {
        ell0 = L;
    }
    return {L, ell0};
}

}  // namespace qburst
