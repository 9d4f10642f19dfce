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

#include "qburst/qetd.h"

#include <climits>
#include <mutex>
#include <stdexcept>

#include "qburst/errors.h"
#include "qburst/parallel.h"

namespace qburst {

namespace {

// Syndrome register for a monic g over some field. The field may be larger
// than the one g was defined over (binary g driven with GF(4) symbols).
class Register {
   public:
    Register(const FieldSpec &f, const Polynomial &g, int n) : f_(f), n_(n), r_(g.degree()) {
        Symbol inv = g.field()->inv(g.leading());
        for (int j = 0; j < r_; j++) {
            g_.push_back(g.field()->mul(g.coeff(j), inv));
        }
    }

    int r() const { return r_; }

    // s <- x s mod g.
    void shift(Vec &s) const {
        Symbol top = s[r_ - 1];
        for (int j = r_ - 1; j > 0; j--) {
            s[j] = s[j - 1];
        }
        s[0] = 0;
        if (top) {
            for (int j = 0; j < r_; j++) {
                s[j] ^= f_.mul(top, g_[j]);
            }
        }
    }

    Vec remainder(const Vec &e) const {
        Vec s(r_, 0);
        if (r_ == 0) {
            return s;
        }
        for (int i = n_ - 1; i >= 0; i--) {
            shift(s);
            s[0] ^= e[i];
        }
        return s;
    }

    QetdState trap(const Vec &S, Vec *best) const {
        QetdState st{S, 0, r_, 0};
        bool nonzero = false;
        for (Symbol c : S) {
            nonzero = nonzero || c;
        }
        if (!nonzero) {
            st.s = r_;
            return st;
        }
        Vec cur = S;
        int z = INT_MAX;
        for (int i = 0; i < n_; i++) {
            if (cur[r_ - 1]) {
                int low = 0;
                while (!cur[low]) {
                    low++;
                }
                if (r_ - low < z) {
                    z = r_ - low;
                    st.v = i;
                    if (best) {
                        *best = cur;
                    }
                }
            }
            shift(cur);
        }
        st.z = z;
        st.s = r_ - z;
        return st;
    }

    Vec decode(const Vec &S) const {
        Vec e(n_, 0);
        Vec best;
        QetdState st = trap(S, &best);
        if (st.z == 0) {
            return e;
        }
        for (int j = 0; j < r_; j++) {
            e[(j + n_ - st.v) % n_] ^= best[j];
        }
        return e;
    }

   private:
    const FieldSpec &f_;
    int n_;
    int r_;
    Vec g_;
};

void check_syndrome(const Vec &S, const CyclicCode &c) {
    if (static_cast<int>(S.size()) != c.r()) {
        throw std::invalid_argument("syndrome length differs from r");
    }
}

}  // namespace

QetdState qetd_trap(const Vec &S, const CyclicCode &c) {
    check_syndrome(S, c);
    return Register(*c.field(), c.g(), c.n()).trap(S, nullptr);
}

Vec qetd_decode(const Vec &S, const CyclicCode &c) {
    check_syndrome(S, c);
    return Register(*c.field(), c.g(), c.n()).decode(S);
}

Vec qetd_decode(const Polynomial &S, const CyclicCode &c) {
    require_same_field(S.field(), c.field());
    if (S.degree() >= c.r()) {
        throw std::invalid_argument("syndrome degree must be below r");
    }
    return qetd_decode(S.to_vector(c.r()), c);
}

const char *to_string(Outcome o) {
    switch (o) {
        case Outcome::kExact:
            return "exact";
        case Outcome::kDegenerate:
            return "degenerate";
        case Outcome::kFailure:
            return "failure";
    }
    return "?";
}

Outcome classify(const QuantumCyclicCode &q, ErrorPart part, const Vec &e, const Vec &ehat) {
    const CyclicCode &c = q.detecting_code(part);
    if (c.remainder(e) != c.remainder(ehat)) {
        throw std::invalid_argument("estimate has a different syndrome");
    }
    if (e == ehat) {
        return Outcome::kExact;
    }
    return degeneracy_check(q, part, e, ehat) ? Outcome::kDegenerate : Outcome::kFailure;
}

namespace {

Vec bit_part(const Vec &v, int bit) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); i++) {
        out[i] = (v[i] >> bit) & 1;
    }
    return out;
}

}  // namespace

Outcome classify_pauli(const QuantumCyclicCode &q, const Vec &e, const Vec &ehat) {
    if (q.construction() == Construction::kHermitian) {
        return classify(q, ErrorPart::kQuaternary, e, ehat);
    }
    Outcome x = classify(q, ErrorPart::kX, bit_part(e, 0), bit_part(ehat, 0));
    Outcome z = classify(q, ErrorPart::kZ, bit_part(e, 1), bit_part(ehat, 1));
    if (x == Outcome::kFailure || z == Outcome::kFailure) {
        return Outcome::kFailure;
    }
    return x == Outcome::kExact && z == Outcome::kExact ? Outcome::kExact : Outcome::kDegenerate;
}

Vec css_decode(const Polynomial &sx, const Polynomial &sz, const CyclicCode &c1, const CyclicCode &c2) {
    if (c1.n() != c2.n()) {
        throw std::invalid_argument("CSS codes differ in length");
    }
    Vec x = qetd_decode(sx, c1);
    Vec z = qetd_decode(sz, c2);
    Vec out(c1.n());
    for (int i = 0; i < c1.n(); i++) {
        out[i] = x[i] | (z[i] << 1);
    }
    return out;
}

std::uint64_t qetd_burst_count(int n, int lmax) { return burst_count(n, lmax, 4) - 1; }

QetdStats qetd_stats(const QuantumCyclicCode &q, std::optional<int> lmax, QetdMode mode, int jobs,
                     std::uint64_t guard) {
    int n = q.n();
    int lm = lmax.value_or((n - q.K()) / 2);
    if (lm < 0 || lm > n) {
        throw std::invalid_argument("burst length bound outside [0, n]");
    }
    if (qetd_burst_count(n, lm) > guard) {
        throw GuardExceeded("QETD enumeration exceeds its budget");
    }
    bool css = q.construction() == Construction::kCss;
    if (mode == QetdMode::kJoint && css && !q.single_code()) {
        throw std::invalid_argument("joint decoding needs a single CSS generator");
    }
    bool joint = !css || (mode != QetdMode::kSplit && q.single_code());
    const Field &gf4 = FieldSpec::gf4();
    Register joint_reg(*gf4, q.c1().g(), n);
    Register reg_x(*q.c1().field(), q.c1().g(), n);
    Register reg_z(*q.c2().field(), q.c2().g(), n);

    std::vector<std::pair<int, int>> tasks;
    for (int len = 1; len <= lm; len++) {
        for (int st = 0; st + len <= n; st++) {
            tasks.emplace_back(len, st);
        }
    }
    QetdStats total;
    std::mutex merge;
    parallel_for(tasks.size(), jobs, [&](std::size_t idx, int) {
        auto [len, st] = tasks[idx];
        QetdStats local;
        for_each_burst(n, len, st, 4, [&](const Vec &e) {
            Vec ehat;
            if (joint) {
                ehat = joint_reg.decode(joint_reg.remainder(e));
            } else {
                Vec x = reg_x.decode(reg_x.remainder(bit_part(e, 0)));
                Vec z = reg_z.decode(reg_z.remainder(bit_part(e, 1)));
                ehat.resize(n);
                for (int i = 0; i < n; i++) {
                    ehat[i] = x[i] | (z[i] << 1);
                }
            }
            local.N++;
            Outcome o = e == ehat ? Outcome::kExact : classify_pauli(q, e, ehat);
            if (o == Outcome::kExact) {
                local.N0++;
                local.ND++;
            } else if (o == Outcome::kDegenerate) {
                local.ND++;
            }
        });
        std::lock_guard<std::mutex> lock(merge);
        total.N += local.N;
        total.N0 += local.N0;
        total.ND += local.ND;
    });
    return total;
}

}  // namespace qburst
