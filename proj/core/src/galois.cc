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

#include <bit>
#include <sstream>
#include <stdexcept>

#include "qburst/errors.h"

namespace qburst {

namespace {

// Conway polynomials for m = 1..8, bit i = coefficient of x^i.
constexpr std::uint32_t kDefaultModuli[] = {
    0,
    0b11,
    0b111,
    0b1011,
    0b10011,
    0b100101,
    0b1011011,
    0b10000011,
    0b100011101,
};

int degree_of(std::uint32_t p) { return p == 0 ? -1 : 31 - std::countl_zero(p); }

std::uint32_t gf2_mod(std::uint32_t a, std::uint32_t b) {
    int db = degree_of(b);
    for (int da = degree_of(a); da >= db; da = degree_of(a)) {
        a ^= b << (da - db);
    }
    return a;
}

std::uint32_t mulmod_slow(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, int m) {
    std::uint32_t r = 0;
    for (int i = m - 1; i >= 0; i--) {
        r <<= 1;
        if (r >> m & 1) {
            r ^= modulus;
        }
        if (b >> i & 1) {
            r ^= a;
        }
    }
    return r;
}

}  // namespace

ReducibleModulus::ReducibleModulus(std::uint32_t modulus, std::uint32_t factor)
    : Error("modulus 0x" + [&] {
          std::ostringstream s;
          s << std::hex << modulus << " is reducible, factor 0x" << factor;
          return s.str();
      }()),
      modulus(modulus),
      factor(factor) {}

std::uint32_t gf2_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus) {
    return mulmod_slow(a, b, modulus, degree_of(modulus));
}

std::uint32_t gf2_find_factor(std::uint32_t poly) {
    int d = degree_of(poly);
    if (d <= 1) {
        return 0;
    }
    for (std::uint32_t f = 2; degree_of(f) <= d / 2; f++) {
        if (gf2_mod(poly, f) == 0) {
            return f;
        }
    }
    return 0;
}

std::uint32_t FieldSpec::default_modulus(int m) {
    if (m < 1 || m > 8) {
        throw std::invalid_argument("no default modulus for m=" + std::to_string(m));
    }
    return kDefaultModuli[m];
}

Field FieldSpec::make(int m) { return make(m, default_modulus(m)); }

Field FieldSpec::make(int m, std::uint32_t modulus) {
    if (m < 1 || m > 16) {
        throw std::invalid_argument("extension degree must be in [1, 16]");
    }
    if (degree_of(modulus) != m) {
        throw std::invalid_argument("modulus degree differs from m");
    }
    if (std::uint32_t f = gf2_find_factor(modulus); f != 0) {
        throw ReducibleModulus(modulus, f);
    }
    return Field(new FieldSpec(m, modulus));
}

const Field &FieldSpec::gf2() {
    static const Field f = make(1);
    return f;
}

const Field &FieldSpec::gf4() {
    static const Field f = make(2);
    return f;
}

FieldSpec::FieldSpec(int m, std::uint32_t modulus) : m_(m), q_(1u << m), modulus_(modulus) {
    std::uint32_t order = q_ - 1;
    // The modulus need not be primitive, so look for the smallest generator.
    std::vector<std::uint32_t> primes;
    for (std::uint32_t p = 2, t = order; t > 1; p++) {
        if (t % p == 0) {
            primes.push_back(p);
            while (t % p == 0) {
                t /= p;
            }
        }
    }
    auto slow_pow = [&](std::uint32_t a, std::uint32_t e) {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) {
                r = mulmod_slow(r, a, modulus_, m_);
            }
            a = mulmod_slow(a, a, modulus_, m_);
            e >>= 1;
        }
        return r;
    };
    std::uint32_t gen = 1;
    if (order > 1) {
        for (gen = 2; gen < q_; gen++) {
            bool ok = true;
            for (auto p : primes) {
                if (slow_pow(gen, order / p) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                break;
            }
        }
    }
    exp_.assign(2 * static_cast<std::size_t>(order) + 1, 0);
    log_.assign(q_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < order; i++) {
        exp_[i] = x;
        log_[x] = i;
        x = mulmod_slow(x, gen, modulus_, m_);
    }
    for (std::size_t i = order; i < exp_.size(); i++) {
        exp_[i] = exp_[i - order];
    }
}

Symbol FieldSpec::inv(Symbol a) const {
    if (a == 0) {
        throw std::domain_error("inverse of zero");
    }
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Symbol FieldSpec::div(Symbol a, Symbol b) const {
    if (b == 0) {
        throw std::domain_error("division by zero");
    }
    return mul(a, inv(b));
}

Symbol FieldSpec::pow(Symbol a, std::uint64_t e) const {
    if (a == 0) {
        return e == 0 ? 1 : 0;
    }
    return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

Symbol FieldSpec::alpha_pow(std::int64_t i) const {
    std::int64_t order = q_ - 1;
    return exp_[((i % order) + order) % order];
}

std::uint32_t FieldSpec::log(Symbol a) const {
    if (a == 0) {
        throw std::domain_error("log of zero");
    }
    return log_[a];
}

Symbol FieldSpec::conj(Symbol a) const {
    if (m_ == 1) {
        return a;
    }
    if (m_ % 2) {
        throw std::domain_error("conjugation needs an even extension degree");
    }
    for (int i = 0; i < m_ / 2; i++) {
        a = square(a);
    }
    return a;
}

Symbol FieldSpec::trace(Symbol a, int base_m) const {
    if (base_m < 1 || m_ % base_m) {
        throw std::invalid_argument("trace base degree must divide m");
    }
    Symbol acc = 0;
    Symbol x = a;
    for (int i = 0; i < m_ / base_m; i++) {
        acc ^= x;
        for (int j = 0; j < base_m; j++) {
            x = square(x);
        }
    }
    return acc;
}

std::string FieldSpec::name() const { return "GF(" + std::to_string(q_) + ")"; }

bool same_field(const Field &a, const Field &b) { return a == b || (a && b && a->same_as(*b)); }

void require_same_field(const Field &a, const Field &b) {
    if (!same_field(a, b)) {
        throw std::invalid_argument("operands live in different fields");
    }
}

FieldElement::FieldElement(Field field, Symbol value) : field_(std::move(field)), value_(value) {
    if (!field_ || !field_->contains(value_)) {
        throw std::invalid_argument("value outside the field");
    }
}

FieldElement FieldElement::operator+(const FieldElement &o) const {
    require_same_field(field_, o.field_);
    return {field_, value_ ^ o.value_};
}

FieldElement FieldElement::operator*(const FieldElement &o) const {
    require_same_field(field_, o.field_);
    return {field_, field_->mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement &o) const {
    require_same_field(field_, o.field_);
    return {field_, field_->div(value_, o.value_)};
}

bool FieldElement::operator==(const FieldElement &o) const {
    return same_field(field_, o.field_) && value_ == o.value_;
}

FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }
FieldElement FieldElement::conj() const { return {field_, field_->conj(value_)}; }
FieldElement FieldElement::trace(int base_m) const { return {field_, field_->trace(value_, base_m)}; }

SelfDualBasis::SelfDualBasis(Field field, std::vector<Symbol> elements)
    : field_(std::move(field)), elements_(std::move(elements)) {
    int m = field_->m();
    if (static_cast<int>(elements_.size()) != m) {
        throw std::invalid_argument("basis needs m elements");
    }
    for (int i = 0; i < m; i++) {
        for (int j = 0; j < m; j++) {
            if (field_->trace(field_->mul(elements_[i], elements_[j])) != (i == j ? 1u : 0u)) {
                throw std::invalid_argument("basis is not self-dual");
            }
        }
    }
    coords_.resize(field_->q());
    for (Symbol a = 0; a < field_->q(); a++) {
        std::uint32_t bits = 0;
        for (int j = 0; j < m; j++) {
            bits |= field_->trace(field_->mul(a, elements_[j])) << j;
        }
        coords_[a] = bits;
    }
}

Symbol SelfDualBasis::from_coordinates(std::uint32_t bits) const {
    Symbol a = 0;
    for (int j = 0; j < m(); j++) {
        if (bits >> j & 1) {
            a ^= elements_[j];
        }
    }
    return a;
}

std::vector<std::uint32_t> SelfDualBasis::gram() const {
    std::vector<std::uint32_t> rows(elements_.size(), 0);
    for (std::size_t i = 0; i < elements_.size(); i++) {
        for (std::size_t j = 0; j < elements_.size(); j++) {
            rows[i] |= field_->trace(field_->mul(elements_[i], elements_[j])) << j;
        }
    }
    return rows;
}

namespace {

// Depth-first over increasing element values; stops after `limit` bases.
void search_bases(const Field &f, std::vector<Symbol> &cur, const std::vector<Symbol> &unit,
                  std::size_t from, std::size_t limit, std::vector<std::vector<Symbol>> &out) {
    if (static_cast<int>(cur.size()) == f->m()) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < unit.size() && out.size() < limit; i++) {
        Symbol a = unit[i];
        bool orth = true;
        for (Symbol b : cur) {
            if (f->trace(f->mul(a, b))) {
                orth = false;
                break;
            }
        }
        if (orth) {
            cur.push_back(a);
            search_bases(f, cur, unit, i + 1, limit, out);
            cur.pop_back();
        }
    }
}

std::vector<std::vector<Symbol>> find_bases(const Field &f, std::size_t limit) {
    std::vector<Symbol> unit;
    for (Symbol a = 1; a < f->q(); a++) {
        if (f->trace(f->square(a)) == 1) {
            unit.push_back(a);
        }
    }
    std::vector<Symbol> cur;
    std::vector<std::vector<Symbol>> out;
    search_bases(f, cur, unit, 0, limit, out);
    return out;
}

}  // namespace

SelfDualBasis self_dual_basis(const Field &field) {
    auto found = find_bases(field, 1);
    if (found.empty()) {
        throw std::logic_error("no self-dual basis found");
    }
    return {field, found.front()};
}

std::vector<SelfDualBasis> all_self_dual_bases(const Field &field) {
    std::vector<SelfDualBasis> out;
    for (auto &b : find_bases(field, SIZE_MAX)) {
        out.emplace_back(field, std::move(b));
    }
    return out;
}

}  // namespace qburst
