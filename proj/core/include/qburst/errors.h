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

#ifndef QBURST_ERRORS_H
#define QBURST_ERRORS_H

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qburst {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Raised by FieldSpec::make when the modulus has a nontrivial factor.
class ReducibleModulus : public Error {
   public:
    ReducibleModulus(std::uint32_t modulus, std::uint32_t factor);
    std::uint32_t modulus;
    std::uint32_t factor;
};

/// The code pair does not satisfy the containment needed for a quantum code.
class NotDualContaining : public Error {
   public:
    using Error::Error;
};

/// An exhaustive enumeration would exceed its configured budget.
class GuardExceeded : public Error {
   public:
    using Error::Error;
};

/// Malformed generator notation or fixture text.
class ParseError : public Error {
   public:
    using Error::Error;
};

}  // namespace qburst

#endif
