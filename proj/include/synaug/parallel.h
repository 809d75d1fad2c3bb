//
// Copyright 2026 The Synaug Authors
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
//

#ifndef SYNAUG_PARALLEL_H_
#define SYNAUG_PARALLEL_H_

#include <cstddef>
#include <exception>
#include <utility>
#include <vector>

// Order-stable map kernels. Corpus rows, template subcases and experiment
// seeds are processed independently; results land at the input index, so
// serial and OpenMP execution produce identical output vectors. The serial
// kernel is the reference implementation the tests compare against.

namespace synaug {

template <typename Fn>
auto SerialMapIndexed(std::size_t n, Fn&& fn)
    -> std::vector<decltype(fn(std::size_t{0}))> {
  std::vector<decltype(fn(std::size_t{0}))> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(fn(i));
  return out;
}

template <typename Fn>
auto ParallelMapIndexed(std::size_t n, Fn&& fn)
    -> std::vector<decltype(fn(std::size_t{0}))> {
  using Result = decltype(fn(std::size_t{0}));
  std::vector<Result> out(n);
  std::exception_ptr error = nullptr;
#pragma omp parallel for schedule(dynamic, 32)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(synaug_map_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

// Dispatches to the OpenMP kernel unless the caller pins serial execution.
template <typename Fn>
auto MapIndexed(std::size_t n, Fn&& fn, bool parallel)
    -> std::vector<decltype(fn(std::size_t{0}))> {
  if (parallel) return ParallelMapIndexed(n, std::forward<Fn>(fn));
  return SerialMapIndexed(n, std::forward<Fn>(fn));
}

}  // namespace synaug

#endif  // SYNAUG_PARALLEL_H_
