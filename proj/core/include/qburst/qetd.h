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

#ifndef QBURST_QETD_H
#define QBURST_QETD_H

#include <cstdint>
#include <optional>

#include "qburst/qcc_burst.h"

namespace qburst {

/// Trap found by the decoder: shift v puts the shortest burst, of length z,
/// against the top register stage; s = r - z is the count of low zero stages.
struct QetdState {
    Vec S;
    int z = 0;
    int s = 0;
    int v = 0;
};

/// Runs the trapping search on the remainder syndrome S (length r) of code c.
/// S = 0 yields z = 0 and v = 0.
QetdState qetd_trap(const Vec &S, const CyclicCode &c);
/// Error estimate x^(n-v) (x^v S mod g) mod (x^n - 1); zero for S = 0.
Vec qetd_decode(const Vec &S, const CyclicCode &c);
Vec qetd_decode(const Polynomial &S, const CyclicCode &c);

enum class Outcome { kExact, kDegenerate, kFailure };
const char *to_string(Outcome o);

/// Compares an error part with its estimate; e and ehat must share a syndrome.
Outcome classify(const QuantumCyclicCode &q, ErrorPart part, const Vec &e, const Vec &ehat);
/// Quaternary version: for CSS codes symbol bit 0 is the X part and bit 1 the
/// Z part (1 = X, 2 = Z, 3 = Y); each part must be exact or degenerate.
Outcome classify_pauli(const QuantumCyclicCode &q, const Vec &e, const Vec &ehat);

/// X part decoded against C1 and Z part against C2, recombined as above.
Vec css_decode(const Polynomial &sx, const Polynomial &sz, const CyclicCode &c1, const CyclicCode &c2);

/// kJoint runs one GF(4) decoder for both parts, which needs a single binary
/// generator; kSplit decodes the parts independently; kAuto picks kJoint
/// whenever it applies.
enum class QetdMode { kAuto, kJoint, kSplit };

struct QetdStats {
    std::uint64_t N = 0;
    std::uint64_t N0 = 0;
    std::uint64_t ND = 0;

    double nd_over_n() const { return N ? double(ND) / double(N) : 0.0; }
    double n0_over_n() const { return N ? double(N0) / double(N) : 0.0; }
    double nd_over_n0() const { return N0 ? double(ND) / double(N0) : 0.0; }
};

/// Bursts over GF(4) of length 1..lmax, zero excluded, non-wrapping.
std::uint64_t qetd_burst_count(int n, int lmax);

/// Decodes every quaternary burst of length 1..lmax (default (n - K)/2).
/// Throws GuardExceeded if the count exceeds `guard`.
QetdStats qetd_stats(const QuantumCyclicCode &q, std::optional<int> lmax = std::nullopt,
                     QetdMode mode = QetdMode::kAuto, int jobs = 1, std::uint64_t guard = 1'000'000'000);

}  // namespace qburst

#endif
