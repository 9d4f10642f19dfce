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

#include "qburst/poly.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "wide_field.h"

namespace qburst {

using detail::u128;

Polynomial::Polynomial(Field field) : field_(std::move(field)) {}

Polynomial::Polynomial(Field field, std::vector<Symbol> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (Symbol c : coeffs_) {
        if (!field_->contains(c)) {
            throw std::invalid_argument("coefficient outside the field");
        }
    }
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Polynomial Polynomial::monomial(const Field &field, int degree, Symbol c) {
    std::vector<Symbol> v(degree + 1, 0);
    v[degree] = c;
    return {field, std::move(v)};
}

Polynomial Polynomial::xn_minus_1(const Field &field, int n) {
    std::vector<Symbol> v(n + 1, 0);
    v[0] ^= 1;
    v[n] ^= 1;
    return {field, std::move(v)};
}

Polynomial Polynomial::operator+(const Polynomial &o) const {
    require_same_field(field_, o.field_);
    std::vector<Symbol> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); i++) {
        v[i] = coeffs_[i];
    }
    for (std::size_t i = 0; i < o.coeffs_.size(); i++) {
        v[i] ^= o.coeffs_[i];
    }
    return {field_, std::move(v)};
}

Polynomial Polynomial::operator*(const Polynomial &o) const {
    require_same_field(field_, o.field_);
    if (is_zero() || o.is_zero()) {
        return Polynomial(field_);
    }
    std::vector<Symbol> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); i++) {
        if (!coeffs_[i]) {
            continue;
        }
        for (std::size_t j = 0; j < o.coeffs_.size(); j++) {
            v[i + j] ^= field_->mul(coeffs_[i], o.coeffs_[j]);
        }
    }
    return {field_, std::move(v)};
}

Polynomial Polynomial::scaled(Symbol c) const {
    std::vector<Symbol> v(coeffs_);
    for (auto &x : v) {
        x = field_->mul(x, c);
    }
    return {field_, std::move(v)};
}

bool Polynomial::operator==(const Polynomial &o) const {
    return same_field(field_, o.field_) && coeffs_ == o.coeffs_;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial &d) const {
    require_same_field(field_, d.field_);
    if (d.is_zero()) {
        throw std::domain_error("division by the zero polynomial");
    }
    int dd = d.degree();
    if (degree() < dd) {
        return {Polynomial(field_), *this};
    }
    std::vector<Symbol> rem(coeffs_);
    std::vector<Symbol> quo(degree() - dd + 1, 0);
    Symbol lead_inv = field_->inv(d.leading());
    for (int i = degree() - dd; i >= 0; i--) {
        Symbol c = field_->mul(rem[i + dd], lead_inv);
        if (!c) {
            continue;
        }
        quo[i] = c;
        for (int j = 0; j <= dd; j++) {
            rem[i + j] ^= field_->mul(c, d.coeffs_[j]);
        }
    }
    rem.resize(dd);
    return {Polynomial(field_, std::move(quo)), Polynomial(field_, std::move(rem))};
}

Symbol Polynomial::eval(Symbol x) const {
    Symbol acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = field_->mul(acc, x) ^ *it;
    }
    return acc;
}

std::vector<Symbol> Polynomial::to_vector(int len) const {
    std::vector<Symbol> v(len, 0);
    for (int i = 0; i < len && i <= degree(); i++) {
        v[i] = coeffs_[i];
    }
    return v;
}

std::vector<std::vector<int>> cyclotomic_cosets(int n, std::uint64_t q) {
    if (n < 1) {
        throw std::invalid_argument("n must be positive");
    }
    if (std::gcd(static_cast<std::uint64_t>(n), q) != 1) {
        throw std::invalid_argument("gcd(n, q) must be 1");
    }
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; s++) {
        if (seen[s]) {
            continue;
        }
        std::vector<int> coset;
        std::uint64_t x = s;
        while (!seen[x]) {
            seen[x] = true;
            coset.push_back(static_cast<int>(x));
            x = (x * q) % n;
        }
        std::sort(coset.begin(), coset.end());
        out.push_back(std::move(coset));
    }
    return out;
}

std::vector<Polynomial> factor_xn_minus_1(int n, const Field &field) {
    auto cosets = cyclotomic_cosets(n, field->q());
    if (n == 1) {
        return {Polynomial(field, {1, 1})};
    }
    int ord = 1;
    for (std::uint64_t t = field->q() % n; t != 1; t = (t * field->q()) % n) {
        ord++;
    }
    int big_m = field->m() * ord;
    detail::WideField wide(big_m);
    u128 beta = wide.element_of_order(static_cast<std::uint64_t>(n));

    // Embed the base field: find a root rho of its modulus in the wide field.
    std::map<u128, Symbol> project;
    if (field->m() == 1) {
        project[0] = 0;
        project[1] = 1;
    } else {
        u128 c = wide.element_of_order(field->q() - 1);
        std::uint32_t mod = field->modulus();
        u128 rho = 0;
        u128 cj = c;
        for (std::uint32_t j = 1; j < field->q(); j++, cj = wide.mul(cj, c)) {
            u128 acc = 0;
            for (int i = field->m(); i >= 0; i--) {
                acc = wide.mul(acc, cj) ^ ((mod >> i) & 1);
            }
            if (acc == 0) {
                rho = cj;
                break;
            }
        }
        if (!rho) {
            throw std::logic_error("base field modulus has no root in the splitting field");
        }
        for (Symbol s = 0; s < field->q(); s++) {
            u128 v = 0;
            u128 p = 1;
            for (int i = 0; i < field->m(); i++, p = wide.mul(p, rho)) {
                if ((s >> i) & 1) {
                    v ^= p;
                }
            }
            project[v] = s;
        }
    }

    std::vector<Polynomial> out;
    for (const auto &coset : cosets) {
        std::vector<u128> acc{1};
        for (int j : coset) {
            u128 root = wide.pow(beta, static_cast<u128>(j));
            std::vector<u128> next(acc.size() + 1, 0);
            for (std::size_t i = 0; i < acc.size(); i++) {
                next[i + 1] ^= acc[i];
                next[i] ^= wide.mul(acc[i], root);
            }
            acc = std::move(next);
        }
        std::vector<Symbol> coeffs;
        for (u128 c : acc) {
            auto it = project.find(c);
            if (it == project.end()) {
                throw std::logic_error("minimal polynomial not defined over the base field");
            }
            coeffs.push_back(it->second);
        }
        out.emplace_back(field, std::move(coeffs));
    }
    return out;
}

DivisorEnumerator::DivisorEnumerator(int n, const Field &field, int min_degree, int max_degree)
    : field_(field), factors_(factor_xn_minus_1(n, field)), min_degree_(min_degree), max_degree_(max_degree) {
    if (factors_.size() > 62) {
        throw std::invalid_argument("too many irreducible factors to enumerate");
    }
    end_ = std::uint64_t(1) << factors_.size();
}

std::optional<Polynomial> DivisorEnumerator::next() {
    while (mask_ < end_) {
        std::uint64_t mask = mask_++;
        int deg = 0;
        for (std::size_t j = 0; j < factors_.size(); j++) {
            if ((mask >> j) & 1) {
                deg += factors_[j].degree();
            }
        }
        if (deg < min_degree_ || deg > max_degree_) {
            continue;
        }
        Polynomial p = Polynomial::one(field_);
        for (std::size_t j = 0; j < factors_.size(); j++) {
            if ((mask >> j) & 1) {
                p = p * factors_[j];
            }
        }
        last_mask_ = mask;
        return p;
    }
    return std::nullopt;
}

std::vector<Polynomial> divisor_generators(int n, const Field &field, int min_degree, int max_degree) {
    DivisorEnumerator it(n, field, min_degree, max_degree);
    std::vector<Polynomial> out;
    while (auto p = it.next()) {
        out.push_back(std::move(*p));
    }
    return out;
}

}  // namespace qburst
