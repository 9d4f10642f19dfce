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

#ifndef QBURST_WIDE_FIELD_H
#define QBURST_WIDE_FIELD_H

#include <cstdint>
#include <vector>

namespace qburst::detail {

using u128 = unsigned __int128;

int degree128(u128 p);
u128 gf2_mulmod128(u128 a, u128 b, u128 modulus, int degree);
u128 gf2_gcd128(u128 a, u128 b);
bool gf2_irreducible128(u128 f, int degree);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// GF(2^M) for M <= 127 by plain shift-and-add arithmetic. Used only as the
/// splitting field when factoring x^n - 1, where M can exceed 64.
class WideField {
   public:
    explicit WideField(int degree);

    int degree() const { return degree_; }
    u128 order() const { return (degree_ == 128 ? ~u128(0) : (u128(1) << degree_) - 1); }
    u128 mul(u128 a, u128 b) const { return gf2_mulmod128(a, b, modulus_, degree_); }
    u128 pow(u128 a, u128 e) const;
    /// Smallest candidate a^(order/d) having multiplicative order exactly d.
    u128 element_of_order(std::uint64_t d) const;

   private:
    int degree_;
    u128 modulus_;
};

}  // namespace qburst::detail

#endif
