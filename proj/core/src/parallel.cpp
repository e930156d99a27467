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

#include "permlo/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace permlo {

unsigned default_workers() {
  if (const char* env = std::getenv("PERMLO_WORKERS"); env != nullptr && *env != '\0') {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 1024));
    } catch (const std::exception&) {
      // fall through to hardware concurrency
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

unsigned resolve_workers(unsigned requested, std::size_t items) {
  unsigned w = requested == 0 ? default_workers() : requested;
  std::size_t cap = std::max<std::size_t>(1, items);
  return static_cast<unsigned>(std::min<std::size_t>(w, cap));
}

void parallel_blocks(std::size_t count, unsigned workers,
                     const std::function<void(std::size_t, std::size_t, unsigned)>& body) {
  workers = resolve_workers(workers, count);
  if (workers <= 1) {
    body(0, count, 0);
    return;
  }
  std::exception_ptr first;
  std::mutex mu;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned b = 0; b < workers; ++b) {
    std::size_t begin = count * b / workers;
    std::size_t end = count * (b + 1) / workers;
    threads.emplace_back([&, begin, end, b] {
      try {
        body(begin, end, b);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first) first = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (first) std::rethrow_exception(first);
}

}  // namespace permlo
