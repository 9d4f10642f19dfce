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

#ifndef QBURST_PARALLEL_H
#define QBURST_PARALLEL_H

#include <cstddef>
#include <functional>

namespace qburst {

/// QBURST_JOBS if set to a positive integer, else the hardware thread count.
int default_jobs();

/// Runs fn(index, worker) for index in [0, count) on up to `jobs` threads.
/// Indices are handed out in increasing order; the first exception is rethrown.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t, int)> &fn);

}  // namespace qburst

#endif
