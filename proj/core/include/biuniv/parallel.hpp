// Copyright 2026 The biuniv Authors
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

#pragma once

#include <cstddef>
#include <functional>

namespace biuniv {

/// Worker count from BIUNIV_THREADS (unset or 0 = hardware concurrency).
/// Throws DomainError if the variable is set but not a nonnegative integer.
std::size_t worker_count();

/// Split [0, n) into contiguous blocks and run body(begin, end) on up to
/// `workers` threads. The first exception thrown by any block is rethrown
/// after all threads join. Callers keep results index-addressed so the
/// outcome never depends on the partition.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body,
                  std::size_t workers);

inline void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
  parallel_for(n, body, worker_count());
}

}  // namespace biuniv
