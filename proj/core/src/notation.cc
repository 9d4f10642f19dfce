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

#include "qburst/notation.h"

#include <cctype>
#include <stdexcept>
#include <vector>

#include "qburst/errors.h"

namespace qburst {

namespace {

class Scanner {
   public:
    explicit Scanner(std::string_view s) : s_(s) {}

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            pos_++;
        }
    }
    bool eat(char c) {
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == c) {
            pos_++;
            return true;
        }
        return false;
    }
    bool peek_digit() {
        skip_space();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }
    long number() {
        if (!peek_digit()) {
            fail("expected a number");
        }
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1'000'000) {
                fail("number too large");
            }
            pos_++;
        }
        return v;
    }
    bool at_end() {
        skip_space();
        return pos_ == s_.size();
    }
    [[noreturn]] void fail(const std::string &what) const {
        throw ParseError("generator \"" + std::string(s_) + "\": " + what + " at offset " + std::to_string(pos_));
    }

   private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_generator(std::string_view text, const Field &field) {
    Scanner sc(text);
    if (!sc.eat('(')) {
        sc.fail("expected '('");
    }
    std::vector<Symbol> coeffs;
    long prev = -1;
    bool any = false;
    while (sc.peek_digit()) {
        long c = sc.number();
        if (!sc.eat('^')) {
            sc.fail("expected '^'");
        }
        long e = sc.number();
        if (c < 1 || c >= static_cast<long>(field->q())) {
            sc.fail("coefficient " + std::to_string(c) + " outside " + field->name());
        }
        if (any && e >= prev) {
            sc.fail("exponents must strictly decrease");
        }
        if (!any) {
            coeffs.assign(e + 1, 0);
        }
        coeffs[e] = static_cast<Symbol>(c);
        prev = e;
        any = true;
    }
    if (!any) {
        sc.fail("expected at least one term");
    }
    if (!sc.eat(')')) {
        sc.fail("expected ')'");
    }
    if (!sc.at_end()) {
        sc.fail("trailing text");
    }
    if (prev != 0) {
        sc.fail("last exponent must be 0");
    }
    return Polynomial(field, std::move(coeffs));
}

std::string emit_generator(const Polynomial &p) {
    if (p.is_zero() || p.coeff(0) == 0) {
        throw std::invalid_argument("notation needs a nonzero constant term");
    }
    std::string out = "(";
    bool first = true;
    for (int i = p.degree(); i >= 0; i--) {
        if (!p.coeff(i)) {
            continue;
        }
        if (!first) {
            out += ' ';
        }
        out += std::to_string(p.coeff(i)) + "^" + std::to_string(i);
        first = false;
    }
    return out + ")";
}

}  // namespace qburst
