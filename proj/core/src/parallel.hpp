// Copyright 2026 The gapcount Authors
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

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace gapcount::detail {

inline unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [0, count) into contiguous chunks, evaluates chunk(first, last) on
// each, and folds the partial results left to right in chunk order. The fold
// order is fixed, so the result does not depend on scheduling.
template <typename T, typename Chunk, typename Combine>
T parallel_reduce(std::uint64_t count, std::uint64_t min_grain, T init,
                  Chunk chunk, Combine combine) {
  if (count == 0) return init;
  const std::uint64_t max_chunks = std::max<std::uint64_t>(1, count / std::max<std::uint64_t>(1, min_grain));
  const std::uint64_t chunks = std::min<std::uint64_t>(worker_count(), max_chunks);
  if (chunks <= 1) return combine(std::move(init), chunk(std::uint64_t{0}, count));

  std::vector<T> partial(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> workers;
    workers.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) {
      const std::uint64_t first = count * c / chunks;
      const std::uint64_t last = count * (c + 1) / chunks;
      workers.emplace_back([&, c, first, last] {
        try {
          partial[c] = chunk(first, last);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (auto& p : partial) init = combine(std::move(init), std::move(p));
  return init;
}

// Runs body(i) for every i in [0, count); each index is visited exactly once.
template <typename Body>
void parallel_for(std::uint64_t count, Body body) {
  parallel_reduce<int>(
      count, 1, 0,
      [&](std::uint64_t first, std::uint64_t last) {
        for (auto i = first; i < last; ++i) body(i);
        return 0;
      },
      [](int a, int) { return a; });
}

}  // namespace gapcount::detail
