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

#ifndef QBURST_QCC_BURST_H
#define QBURST_QCC_BURST_H

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qburst/cyclic_code.h"

namespace qburst {

enum class Construction { kHermitian, kCss };

/// Which classical error component is being corrected. Hermitian codes see
/// the whole quaternary error; CSS codes split it into X and Z parts.
enum class ErrorPart { kQuaternary, kX, kZ };

const char *to_string(Construction c);
const char *to_string(ErrorPart p);

/// A Hermitian code over GF(4) or a CSS pair of binary codes.
class QuantumCyclicCode {
   public:
    /// Throws NotDualContaining unless H H^dagger = 0.
    static QuantumCyclicCode hermitian(const CyclicCode &c);
    /// Throws NotDualContaining unless C2^perp is inside C1.
    static QuantumCyclicCode css(const CyclicCode &c1, const CyclicCode &c2);

    Construction construction() const { return construction_; }
    int n() const { return c1_->n(); }
    /// 2k - n or k1 + k2 - n.
    int K() const;
    const CyclicCode &c1() const { return *c1_; }
    const CyclicCode &c2() const { return *c2_; }
    bool single_code() const { return c1_ == c2_ || c1_->g() == c2_->g(); }

    std::vector<ErrorPart> parts() const;
    /// The classical code whose syndrome detects this error part.
    const CyclicCode &detecting_code(ErrorPart part) const;
    /// d is in the stabilizer for this part: C^{perp_H}, C2^perp (X) or C1^perp (Z).
    bool is_stabilizer(ErrorPart part, const Vec &d) const;
    std::vector<Polynomial> generators() const;

   private:
    QuantumCyclicCode(Construction c, std::shared_ptr<const CyclicCode> c1, std::shared_ptr<const CyclicCode> c2);

    Construction construction_;
    std::shared_ptr<const CyclicCode> c1_;
    std::shared_ptr<const CyclicCode> c2_;
};

/// Columns [start, start+ell) of M^(ell), the first r - ell rows of H.
struct WindowBlock {
    int ell;
    int start;
    MatrixGF block;
};

struct DependencyPair {
    Vec e;
    Vec f;
};

struct DependencyPairSet {
    WindowBlock window;
    std::vector<DependencyPair> pairs;
};

WindowBlock build_window(const CyclicCode &c, int ell, int start);
/// As build_window but only requires 1 <= ell <= r (used by the RS analysis).
WindowBlock shortened_window(const CyclicCode &c, int ell, int start);
/// One pair per free column of the window; f lives on the last ell positions.
DependencyPairSet boxplus(const CyclicCode &c, const WindowBlock &w);
/// True when e + f is a stabilizer, so confusing e with f is harmless.
bool degeneracy_check(const QuantumCyclicCode &q, ErrorPart part, const Vec &e, const Vec &f);

struct PartLimit {
    ErrorPart part;
    int L;
    int ell0;
    bool cap_limited;
};

struct QccReport {
    int n = 0;
    int K = 0;
    int L = 0;
    int ell0 = 0;
    int delta = 0;
    Construction construction = Construction::kHermitian;
    std::vector<Polynomial> generators;
    std::vector<std::string> flags;
    std::vector<PartLimit> parts;
};

/// Burst limit of one error part (no QRB check).
PartLimit algorithm1_part(const QuantumCyclicCode &q, ErrorPart part);
/// Degenerate limit L and nondegenerate limit ell0; CSS takes the minimum over
/// both parts. Throws std::logic_error if n - K - 4L < 0.
QccReport algorithm1(const QuantumCyclicCode &q);

/// n - K - 4L.
int qrb_delta(int n, int K, int L);
/// "optimal", "nearly optimal" (1 or 2) or "suboptimal".
std::string qrb_class(int delta);

/// Exhaustive oracle over all non-wrapping bursts; returns (L, ell0).
/// Throws GuardExceeded when a sweep would visit more than max_patterns bursts.
std::pair<int, int> brute_force_limit(const QuantumCyclicCode &q, std::uint64_t max_patterns = 20'000'000);
/// Number of non-wrapping bursts of length <= ell over GF(q), zero included.
std::uint64_t burst_count(int n, int ell, int q);

}  // namespace qburst

#endif
