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

#ifndef QBURST_GALOIS_H
#define QBURST_GALOIS_H

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace qburst {

/// Raw field element: polynomial basis coordinates packed into an integer.
using Symbol = std::uint32_t;

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

/// GF(2^m) for 1 <= m <= 16 with log/exp tables.
///
/// GF(4) under x^2+x+1 uses 0, 1, w = 2, w^2 = 3, which is the encoding of
/// the coefficient digits in the generator notation.
class FieldSpec {
   public:
    /// Verifies irreducibility by trial division; throws ReducibleModulus.
    static Field make(int m, std::uint32_t modulus);
    /// Uses the shipped default modulus; m must be in [1, 8].
    static Field make(int m);
    static std::uint32_t default_modulus(int m);

    /// Shared instances of the two fields used by the quantum constructions.
    static const Field &gf2();
    static const Field &gf4();

    int m() const { return m_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t modulus() const { return modulus_; }

    Symbol add(Symbol a, Symbol b) const { return a ^ b; }
    Symbol mul(Symbol a, Symbol b) const {
        if (a == 0 || b == 0) {
            return 0;
        }
        return exp_[log_[a] + log_[b]];
    }
    Symbol inv(Symbol a) const;
    Symbol div(Symbol a, Symbol b) const;
    Symbol pow(Symbol a, std::uint64_t e) const;
    Symbol square(Symbol a) const { return mul(a, a); }

    /// a -> a^(2^(m/2)); identity on GF(2). Throws for odd m > 1.
    Symbol conj(Symbol a) const;
    /// Trace down to GF(2^base_m); base_m must divide m.
    Symbol trace(Symbol a, int base_m = 1) const;

    /// Multiplicative generator used by the tables (x itself when the modulus is primitive).
    Symbol generator() const { return exp_[1]; }
    /// generator()^i for any integer i.
    Symbol alpha_pow(std::int64_t i) const;
    /// Discrete log base generator(); a must be nonzero.
    std::uint32_t log(Symbol a) const;

    bool contains(Symbol a) const { return a < q_; }
    bool same_as(const FieldSpec &other) const { return m_ == other.m_ && modulus_ == other.modulus_; }
    std::string name() const;

   private:
    FieldSpec(int m, std::uint32_t modulus);

    int m_;
    std::uint32_t q_;
    std::uint32_t modulus_;
    std::vector<Symbol> exp_;
    std::vector<std::uint32_t> log_;
};

bool same_field(const Field &a, const Field &b);
/// Throws std::invalid_argument unless the fields agree.
void require_same_field(const Field &a, const Field &b);

/// Carry-less product of two GF(2) polynomials reduced by modulus.
std::uint32_t gf2_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus);
/// A nontrivial factor of the GF(2) polynomial, or 0 when it is irreducible.
std::uint32_t gf2_find_factor(std::uint32_t poly);

/// Value-semantics element bound to its field.
class FieldElement {
   public:
    FieldElement(Field field, Symbol value);

    Symbol value() const { return value_; }
    const Field &field() const { return field_; }

    FieldElement operator+(const FieldElement &o) const;
    FieldElement operator-(const FieldElement &o) const { return *this + o; }
    FieldElement operator*(const FieldElement &o) const;
    FieldElement operator/(const FieldElement &o) const;
    bool operator==(const FieldElement &o) const;

    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;
    FieldElement conj() const;
    FieldElement trace(int base_m = 1) const;
    bool is_zero() const { return value_ == 0; }

   private:
    Field field_;
    Symbol value_;
};

/// Basis alpha_1..alpha_m of GF(2^m) over GF(2) with Tr(alpha_i alpha_j) = delta_ij.
class SelfDualBasis {
   public:
    SelfDualBasis(Field field, std::vector<Symbol> elements);

    const Field &field() const { return field_; }
    int m() const { return static_cast<int>(elements_.size()); }
    const std::vector<Symbol> &elements() const { return elements_; }

    /// Coordinate j of a is Tr(a alpha_j); bit j of the result.
    std::uint32_t coordinates(Symbol a) const { return coords_[a]; }
    /// Inverse of coordinates().
    Symbol from_coordinates(std::uint32_t bits) const;
    /// m x m matrix [Tr(alpha_i alpha_j)] as rows of bits.
    std::vector<std::uint32_t> gram() const;

   private:
    Field field_;
    std::vector<Symbol> elements_;
    std::vector<std::uint32_t> coords_;
};

/// Deterministic: the lexicographically first self-dual basis listed in
/// increasing order of the packed element values.
SelfDualBasis self_dual_basis(const Field &field);
/// Every self-dual basis as an increasing element list, in lexicographic order.
/// Exponential; intended for m <= 6.
std::vector<SelfDualBasis> all_self_dual_bases(const Field &field);

}  // namespace qburst

#endif
