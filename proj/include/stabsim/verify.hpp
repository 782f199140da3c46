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
#include <cstdint>
#include <string>
#include <vector>

#include "stabsim/tableau.hpp"

namespace stabsim {

inline constexpr double kFidelityFloor = 1.0 - 1e-10;
inline constexpr double kUniformitySignificance = 1e-3;

// |C_n| = 2^(n^2 + 2n) * prod_{j=1..n} (4^j - 1); overflows past n = 2,
// which is all the counting tests need.
std::uint64_t clifford_group_order(std::size_t n);

struct OracleEquivalenceResult {
  bool ok = true;
  std::size_t circuits_checked = 0;
  double min_fidelity = 1.0;
  // First circuit below the fidelity floor, serialized for reproduction.
  std::string failing_circuit;
};

// Runs `trials_per_n` uniformly random measurement-free Clifford circuits at
// every n in [1, max_n], comparing the tableau-reconstructed state against
// dense simulation.  max_n beyond the dense cap raises CapacityError.
OracleEquivalenceResult check_oracle_equivalence(std::size_t max_n,
                                                 std::size_t trials_per_n,
                                                 std::uint64_t seed);

struct UniformityResult {
  bool ok = false;
  std::size_t classes_seen = 0;
  std::size_t classes_expected = 0;
  double statistic = 0.0;
  double critical = 0.0;
};

// Chi-square test of sampler uniformity over the full n-qubit Clifford
// group, keyed by canonical tableau bits.  Only meaningful for n <= 2 where
// the group is enumerable.
UniformityResult check_sampler_uniformity(std::size_t n, std::size_t samples,
                                          std::uint64_t seed);

}  // namespace stabsim
