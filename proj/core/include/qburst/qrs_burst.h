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

#ifndef QBURST_QRS_BURST_H
#define QBURST_QRS_BURST_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qburst/cyclic_code.h"

namespace qburst {

/// Narrow-sense RS code over GF(2^m) with roots alpha^1..alpha^(n-k_c),
/// alpha the table generator of the field.
class RsCode {
   public:
    /// k_c = (n + K)/2; throws std::invalid_argument if not integral or out of
    /// range and NotDualContaining if the dual is not inside the code.
    static RsCode make(int m, int K, std::optional<SelfDualBasis> basis = std::nullopt);

    int m() const { return m_; }
    int n() const { return code_.n(); }
    int k_c() const { return code_.k(); }
    int K() const { return 2 * code_.k() - code_.n(); }
    int hbar() const { return code_.r() / 2; }
    const Field &field() const { return code_.field(); }
    const CyclicCode &code() const { return code_; }
    const SelfDualBasis &basis() const { return basis_; }

   private:
    RsCode(int m, CyclicCode code, SelfDualBasis basis);

    int m_;
    CyclicCode code_;
    SelfDualBasis basis_;
};

/// Bit i*m + j is coordinate j of symbol i.
std::vector<std::uint8_t> image_expand(const Vec &v, const SelfDualBasis &basis);
int image_burst_length(const Vec &v, const SelfDualBasis &basis);

struct RsReport {
    int m = 0;
    int n = 0;
    int K = 0;
    int L = 0;
    int lower = 0;
    int qrb_image = 0;
    int windows = 0;
    int min_rank = 0;
    int max_rank = 0;
    std::vector<std::string> flags;
};

/// (hbar - 1) m + 1.
int rs_lower_bound(const RsCode &rs);
/// floor((n m - K m) / 4).
int rs_qrb_image(const RsCode &rs);
RsReport algorithm2(const RsCode &rs);

}  // namespace qburst

#endif
