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

#ifndef QBURST_SEARCH_H
#define QBURST_SEARCH_H

#include <cstdint>
#include <optional>
#include <vector>

#include "qburst/qcc_burst.h"

namespace qburst {

struct SearchJob {
    int n_min = 3;
    int n_max = 15;
    /// kHermitian searches GF(4) codes; kCss searches binary codes with C1 = C2.
    Construction construction = Construction::kHermitian;
    int delta_max = 2;
    /// Reports with L below this are dropped (L = 0 codes are trivially near the bound).
    int min_L = 1;
    int jobs = 1;
    /// If set, at most this many dual-containing generators per n, drawn with `seed`.
    std::optional<std::size_t> sample;
    std::uint64_t seed = 1;
};

/// Generators g | x^n - 1 of codes usable by the construction, excluding g = 1.
/// Candidates are pruned on cyclotomic cosets and then confirmed with the
/// matrix containment test.
std::vector<Polynomial> dual_containing_generators(int n, Construction construction);

/// Reports sorted by (n, K, generator text); identical for any job count.
std::vector<QccReport> search(const SearchJob &job);

}  // namespace qburst

#endif
