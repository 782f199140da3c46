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

// Times the word-packed OpenMP kernels against the byte-per-bit serial
// reference on identical workloads: one random Clifford circuit per size,
// plus the same circuit with a measure-all suffix.
//
//   kernel_compare [n ...]        default sizes: 16 64 256

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "stabsim/circuit.hpp"
#include "stabsim/random_clifford.hpp"
#include "stabsim/reference_tableau.hpp"
#include "stabsim/rng.hpp"
#include "stabsim/tableau.hpp"
#include "stabsim/threads.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_packed(const stabsim::Circuit& c, std::uint64_t seed) {
  stabsim::Rng rng(seed);
  const auto t0 = Clock::now();
  stabsim::run_circuit(c, rng);
  const auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

double time_reference(const stabsim::Circuit& c, std::uint64_t seed) {
  stabsim::Rng rng(seed);
  const auto t0 = Clock::now();
  stabsim::reference_run_circuit(c, rng);
  const auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::size_t> sizes;
  for (int i = 1; i < argc; ++i) {
    sizes.push_back(static_cast<std::size_t>(std::strtoull(argv[i], nullptr, 10)));
  }
  if (sizes.empty()) {
    sizes = {16, 64, 256};
  }

  std::printf("threads: %d\n", stabsim::max_threads());
  std::printf("%8s %12s %14s %14s %9s\n", "n", "workload", "packed_ms",
              "reference_ms", "speedup");
  for (const std::size_t n : sizes) {
    stabsim::Rng gen(42);
    stabsim::Circuit c = stabsim::random_circuit(n, gen);

    stabsim::Circuit with_measures = c;
    for (std::size_t q = 0; q < n; ++q) {
      with_measures.gates.push_back(
          stabsim::Gate::single(stabsim::GateKind::M,
                                static_cast<std::uint32_t>(q)));
    }

    const struct {
      const char* name;
      const stabsim::Circuit* circuit;
    } workloads[] = {{"gates", &c}, {"gates+meas", &with_measures}};

    for (const auto& w : workloads) {
      // Warm both paths once, then take the best of three.
      time_packed(*w.circuit, 1);
      time_reference(*w.circuit, 1);
      double packed = 1e300;
      double ref = 1e300;
      for (int r = 0; r < 3; ++r) {
        packed = std::min(packed, time_packed(*w.circuit, 1));
        ref = std::min(ref, time_reference(*w.circuit, 1));
      }
      std::printf("%8zu %12s %14.3f %14.3f %8.2fx\n", n, w.name, packed, ref,
                  ref / packed);
    }
  }
  return 0;
}
