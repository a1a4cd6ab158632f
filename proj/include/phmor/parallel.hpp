// Copyright (c) the phmor developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace phmor {

/// Runs fn(i) for i in [0, n). Callers write results into disjoint
/// preallocated slots, so outputs are deterministic regardless of schedule.
/// Worker exceptions propagate to the caller.
template <typename Fn>
void parallel_for(std::size_t n, Fn &&fn) {
  std::size_t hw = std::thread::hardware_concurrency();
  std::size_t workers = std::min<std::size_t>(hw == 0 ? 1 : hw, 8);
  workers = std::min(workers, n);
  if (n <= 1 || workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      fn(i);
    }
    return;
  }
  std::vector<std::future<void>> futures;
  futures.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&fn, w, n, workers] {
      for (std::size_t i = w; i < n; i += workers) {
        fn(i);
      }
    }));
  }
  for (auto &f : futures) {
    f.get();
  }
}

}  // namespace phmor
