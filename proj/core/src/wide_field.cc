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

#include "wide_field.h"

#include <bit>
#include <stdexcept>

namespace qburst::detail {

int degree128(u128 p) {
    auto hi = static_cast<std::uint64_t>(p >> 64);
    auto lo = static_cast<std::uint64_t>(p);
    if (hi) {
        return 127 - std::countl_zero(hi);
    }
    return lo ? 63 - std::countl_zero(lo) : -1;
}

u128 gf2_mulmod128(u128 a, u128 b, u128 modulus, int degree) {
    u128 r = 0;
    for (int i = degree - 1; i >= 0; i--) {
        r <<= 1;
        if ((r >> degree) & 1) {
            r ^= modulus;
        }
        if ((b >> i) & 1) {
            r ^= a;
        }
    }
    return r;
}

u128 gf2_gcd128(u128 a, u128 b) {
    while (b) {
        int db = degree128(b);
        for (int da = degree128(a); da >= db; da = degree128(a)) {
            a ^= b << (da - db);
        }
        std::swap(a, b);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; p++) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

bool gf2_irreducible128(u128 f, int degree) {
    // Rabin: x^(2^M) = x mod f and gcd(x^(2^(M/p)) - x, f) = 1 for primes p | M.
    auto frob = [&](int k) {
        u128 x = 2;
        for (int i = 0; i < k; i++) {
            x = gf2_mulmod128(x, x, f, degree);
        }
        return x;
    };
    if (frob(degree) != 2) {
        return false;
    }
    for (auto p : prime_factors(static_cast<std::uint64_t>(degree))) {
        u128 t = frob(degree / static_cast<int>(p)) ^ 2;
        if (degree128(gf2_gcd128(f, t)) != 0) {
            return false;
        }
    }
    return true;
}

WideField::WideField(int degree) : degree_(degree), modulus_(0) {
    if (degree < 1 || degree > 127) {
        throw std::invalid_argument("splitting field degree must be in [1, 127]");
    }
    u128 top = u128(1) << degree;
    if (degree == 1) {
        modulus_ = top | 1;
        return;
    }
    for (int a = 1; a < degree && !modulus_; a++) {
        u128 f = top | (u128(1) << a) | 1;
        if (gf2_irreducible128(f, degree)) {
            modulus_ = f;
        }
    }
    for (int a = 3; a < degree && !modulus_; a++) {
        for (int b = 2; b < a && !modulus_; b++) {
            for (int c = 1; c < b && !modulus_; c++) {
                u128 f = top | (u128(1) << a) | (u128(1) << b) | (u128(1) << c) | 1;
                if (gf2_irreducible128(f, degree)) {
                    modulus_ = f;
                }
            }
        }
    }
    if (!modulus_) {
        throw std::logic_error("no sparse irreducible polynomial found");
    }
}

u128 WideField::pow(u128 a, u128 e) const {
    u128 r = 1;
    while (e) {
        if (e & 1) {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

u128 WideField::element_of_order(std::uint64_t d) const {
    if (d == 1) {
        return 1;
    }
    if (order() % d != 0) {
        throw std::invalid_argument("order does not divide the group order");
    }
    auto primes = prime_factors(d);
    u128 cofactor = order() / d;
    for (u128 a = 2;; a++) {
        u128 b = pow(a, cofactor);
        bool ok = true;
        for (auto p : primes) {
            if (pow(b, d / p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return b;
        }
    }
}

}  // namespace qburst::detail
