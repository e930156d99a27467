// Copyright 2026 The permlo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PERMLO_PARALLEL_HPP
#define PERMLO_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace permlo {

/// Worker count used when a caller passes 0: PERMLO_WORKERS if set, else hardware concurrency.
unsigned default_workers();

/// Resolves 0 to default_workers() and clamps to [1, max(1, items)].
unsigned resolve_workers(unsigned requested, std::size_t items);

/// Splits [0, count) into `workers` contiguous blocks and runs body(begin, end, block)
/// on its own thread per block. Block boundaries depend only on (count, workers), and the
/// first exception thrown by any block is rethrown after all threads join.
void parallel_blocks(std::size_t count, unsigned workers,
                     const std::function<void(std::size_t, std::size_t, unsigned)>& body);

}  // namespace permlo

#endif  // PERMLO_PARALLEL_HPP
