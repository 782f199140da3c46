// Copyright 2026 The Stabsim Authors
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

#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stabsim {

inline void set_num_threads(int n) {
#ifdef _OPENMP
  if (n > 0) {
    omp_set_num_threads(n);
  }
#else
  (void)n;
#endif
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

struct RowRange {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

// Contiguous chunk of [0, total) owned by the calling thread.  Must be called
// from inside a parallel region (or outside one, where it returns the whole
// range).  Chunks are in thread order, so "combine chunk results in thread
// order" is the same as processing [0, total) front to back.
inline RowRange current_thread_chunk(std::size_t total) {
#ifdef _OPENMP
  const std::size_t nt = static_cast<std::size_t>(omp_get_num_threads());
  const std::size_t tid = static_cast<std::size_t>(omp_get_thread_num());
  const std::size_t base = total / nt;
  const std::size_t rem = total % nt;
  const std::size_t lo = tid * base + (tid < rem ? tid : rem);
  const std::size_t len = base + (tid < rem ? 1 : 0);
  return {lo, lo + len};
#else
  return {0, total};
#endif
}

}  // namespace stabsim
