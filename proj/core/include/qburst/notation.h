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

#ifndef QBURST_NOTATION_H
#define QBURST_NOTATION_H

#include <string>
#include <string_view>

#include "qburst/poly.h"

namespace qburst {

/// Parses "(c^e c^e ... c^0)": digits c name packed field elements (1, 2 = w,
/// 3 = w^2 over GF(4)), exponents strictly decrease and end at 0. Whitespace is
/// ignored. Throws ParseError.
Polynomial parse_generator(std::string_view text, const Field &field);
/// Inverse of parse_generator for polynomials with a nonzero constant term.
std::string emit_generator(const Polynomial &p);

}  // namespace qburst

#endif
