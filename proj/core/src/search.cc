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

#include "qburst/search.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qburst/notation.h"
#include "qburst/parallel.h"

namespace qburst {

namespace {

const Field &field_for(Construction c) { return c == Construction::kHermitian ? FieldSpec::gf4() : FieldSpec::gf2(); }

bool admissible(const CyclicCode &c, Construction construction) {
    return construction == Construction::kHermitian ? hermitian_dual_containing(c) : css_dual_containing(c, c);
}

}  // namespace

std::vector<Polynomial> dual_containing_generators(int n, Construction construction) {
    const Field &f = field_for(construction);
    auto cosets = cyclotomic_cosets(n, f->q());
    auto factors = factor_xn_minus_1(n, f);
    // Zeros of factor i are beta^j, j in coset i. Containment needs the zero set
    // Z to avoid -2Z (Hermitian) or -Z (Euclidean).
    std::vector<int> coset_of(n);
    for (std::size_t i = 0; i < cosets.size(); i++) {
        for (int j : cosets[i]) {
            coset_of[j] = static_cast<int>(i);
        }
    }
    int mult = construction == Construction::kHermitian ? 2 : 1;
    std::vector<int> partner(cosets.size());
    for (std::size_t i = 0; i < cosets.size(); i++) {
        partner[i] = coset_of[((n - mult * cosets[i][0]) % n + n) % n];
    }
    std::vector<Polynomial> out;
    std::vector<int> state(cosets.size(), 0);
    auto rec = [&](auto &&self, std::size_t i, const Polynomial &acc) -> void {
        if (i == cosets.size()) {
            if (acc.degree() == 0) {
                return;
            }
            CyclicCode c = CyclicCode::from_generator(n, acc);
            if (admissible(c, construction)) {
                out.push_back(acc);
            }
            return;
        }
        self(self, i + 1, acc);
        int p = partner[i];
        if (p == static_cast<int>(i) || (p < static_cast<int>(i) && state[p])) {
            return;
        }
        state[i] = 1;
        self(self, i + 1, acc * factors[i]);
        state[i] = 0;
    };
    rec(rec, 0, Polynomial::one(f));
    return out;
}

std::vector<QccReport> search(const SearchJob &job) {
    if (job.n_min < 1 || job.n_max < job.n_min) {
        throw std::invalid_argument("empty length range");
    }
    struct Candidate {
        int n;
        Polynomial g;
    };
    std::vector<Candidate> cands;
    std::mt19937_64 rng(job.seed);
    for (int n = job.n_min; n <= job.n_max; n++) {
        if (n % 2 == 0) {
            continue;
        }
        auto gens = dual_containing_generators(n, job.construction);
        if (job.sample && gens.size() > *job.sample) {
            std::vector<std::size_t> idx(gens.size());
            std::iota(idx.begin(), idx.end(), 0);
            std::shuffle(idx.begin(), idx.end(), rng);
            idx.resize(*job.sample);
            std::sort(idx.begin(), idx.end());
            std::vector<Polynomial> picked;
            for (auto i : idx) {
                picked.push_back(gens[i]);
            }
            gens = std::move(picked);
        }
        for (auto &g : gens) {
            cands.push_back({n, std::move(g)});
        }
    }
    std::vector<std::optional<QccReport>> results(cands.size());
    parallel_for(cands.size(), job.jobs, [&](std::size_t i, int) {
        CyclicCode c = CyclicCode::from_generator(cands[i].n, cands[i].g);
        QuantumCyclicCode q = job.construction == Construction::kHermitian ? QuantumCyclicCode::hermitian(c)
                                                                           : QuantumCyclicCode::css(c, c);
        QccReport rep = algorithm1(q);
        if (rep.delta <= job.delta_max && rep.L >= job.min_L) {
            results[i] = std::move(rep);
        }
    });
    std::vector<std::pair<std::string, QccReport>> keyed;
    for (auto &r : results) {
        if (r) {
            std::string text;
            for (const auto &g : r->generators) {
                text += emit_generator(g);
            }
            keyed.emplace_back(std::move(text), std::move(*r));
        }
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto &a, const auto &b) {
        if (a.second.n != b.second.n) {
            return a.second.n < b.second.n;
        }
        if (a.second.K != b.second.K) {
            return a.second.K < b.second.K;
        }
        return a.first < b.first;
    });
    std::vector<QccReport> out;
    for (auto &kv : keyed) {
        out.push_back(std::move(kv.second));
    }
    return out;
}

}  // namespace qburst
