/*
 * Copyright 2026 The ffnt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FFNT_PARALLEL_HPP
#define FFNT_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace ffnt {

/// Worker count: FFNT_JOBS if set, else hardware concurrency (min 1).
unsigned job_count();

/// Splits [0, n) into contiguous chunks and evaluates work(begin, end) on a
/// small thread pool. Per-chunk results come back in chunk order, so any
/// sequential fold over them is deterministic regardless of the worker count.
template <typename T, typename Work>
std::vector<T> parallel_map_ranges(std::uint64_t n, unsigned jobs, Work work) {
  if (jobs < 1) jobs = 1;
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(n, std::uint64_t(jobs) * 4));
  std::vector<T> results(static_cast<std::size_t>(chunks));
  if (n == 0) return {};
  if (jobs == 1 || chunks == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c)
      results[c] = work(n * c / chunks, n * (c + 1) / chunks);
    return results;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&, t] {
      for (std::uint64_t c = t; c < chunks; c += jobs)
        results[c] = work(n * c / chunks, n * (c + 1) / chunks);
    });
  }
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace ffnt

#endif  // FFNT_PARALLEL_HPP
