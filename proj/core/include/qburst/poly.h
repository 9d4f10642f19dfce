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

#ifndef QBURST_POLY_H
#define QBURST_POLY_H

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qburst/galois.h"

namespace qburst {

/// Polynomial over a FieldSpec; coefficient i multiplies x^i. Always trimmed.
class Polynomial {
   public:
    explicit Polynomial(Field field);
    Polynomial(Field field, std::vector<Symbol> coeffs);

    static Polynomial one(const Field &field) { return Polynomial(field, {1}); }
    static Polynomial monomial(const Field &field, int degree, Symbol c = 1);
    /// x^n - 1 (equal to x^n + 1 in characteristic 2).
    static Polynomial xn_minus_1(const Field &field, int n);

    const Field &field() const { return field_; }
    const std::vector<Symbol> &coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Symbol coeff(int i) const { return i >= 0 && i <= degree() ? coeffs_[i] : 0; }
    Symbol leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const { return leading() == 1; }

    Polynomial operator+(const Polynomial &o) const;
    Polynomial operator-(const Polynomial &o) const { return *this + o; }
    Polynomial operator*(const Polynomial &o) const;
    Polynomial operator%(const Polynomial &o) const { return divmod(o).second; }
    Polynomial scaled(Symbol c) const;
    bool operator==(const Polynomial &o) const;

    /// (u, s) with *this = u * d + s and deg(s) < deg(d).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial &d) const;
    Symbol eval(Symbol x) const;
    /// Coefficients padded or truncated to `len` entries.
    std::vector<Symbol> to_vector(int len) const;

   private:
    void trim();

    Field field_;
    std::vector<Symbol> coeffs_;
};

/// The q-cyclotomic cosets of Z_n, each sorted, ordered by smallest member.
std::vector<std::vector<int>> cyclotomic_cosets(int n, std::uint64_t q);

/// Irreducible monic factors of x^n - 1, one per coset of cyclotomic_cosets(n, q),
/// in the same order.
std::vector<Polynomial> factor_xn_minus_1(int n, const Field &field);

/// Streams every monic divisor of x^n - 1 with degree in [min_degree, max_degree].
///
/// Subset i of the factor list (bit j selects factor j) is visited in increasing
/// order of i.
class DivisorEnumerator {
   public:
    DivisorEnumerator(int n, const Field &field, int min_degree, int max_degree);

    std::optional<Polynomial> next();
    const std::vector<Polynomial> &factors() const { return factors_; }
    /// Factor subset of the most recent divisor returned by next().
    std::uint64_t last_mask() const { return last_mask_; }

   private:
    Field field_;
    std::vector<Polynomial> factors_;
    int min_degree_;
    int max_degree_;
    std::uint64_t mask_ = 0;
    std::uint64_t end_;
    std::uint64_t last_mask_ = 0;
};

/// Convenience wrapper collecting DivisorEnumerator into a vector.
std::vector<Polynomial> divisor_generators(int n, const Field &field, int min_degree, int max_degree);

}  // namespace qburst

#endif
