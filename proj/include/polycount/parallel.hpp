// Copyright 2026 The polycount Authors
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

#ifndef POLYCOUNT_PARALLEL_HPP_
#define POLYCOUNT_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace polycount {

// Splits [0, n) into a fixed number of contiguous chunks, evaluates them on
// up to `threads` workers and folds the partial results in chunk order. The
// chunking does not depend on the worker count, so an associative `merge`
// gives the same answer for every thread count.
template <class T, class ChunkFn, class MergeFn>
T parallel_reduce(std::uint64_t n, unsigned threads, T init, ChunkFn chunk, MergeFn merge) {
  constexpr std::uint64_t kChunks = 64;
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min(n, kChunks));
  std::vector<T> partial(chunks);
  auto bounds = [&](std::uint64_t c) { return std::pair{n * c / chunks, n * (c + 1) / chunks}; };

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
      try {
        auto [lo, hi] = bounds(c);
        partial[c] = chunk(lo, hi);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  for (auto& p : partial) merge(init, std::move(p));
  return init;
}

}  // namespace polycount

#endif  // POLYCOUNT_PARALLEL_HPP_
