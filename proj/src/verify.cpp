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

#include "stabsim/verify.hpp"

#include <unordered_map>

#include "stabsim/dense.hpp"
#include "stabsim/errors.hpp"
#include "stabsim/random_clifford.hpp"
#include "stabsim/rng.hpp"
#include "stabsim/stats.hpp"

namespace stabsim {

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<Word>& key) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const Word w : key) {
      h ^= w;
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

std::uint64_t clifford_group_order(std::size_t n) {
  std::uint64_t order = std::uint64_t{1} << (n * n + 2 * n);
  std::uint64_t pow4 = 1;
  for (std::size_t j = 1; j <= n; ++j) {
    pow4 *= 4;
    order *= pow4 - 1;
  }
  return order;
}

OracleEquivalenceResult check_oracle_equivalence(std::size_t max_n,
                                                 std::size_t trials_per_n,
                                                 std::uint64_t seed) {
  if (max_n > kDenseMaxQubits) {
    throw CapacityError("oracle comparison capped at " +
                        std::to_string(kDenseMaxQubits) + " qubits, got " +
                        std::to_string(max_n));
  }
  if (max_n == 0) {
    throw std::invalid_argument("max_n must be positive");
  }
  OracleEquivalenceResult result;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t trial = 0; trial < trials_per_n; ++trial) {
      Rng gen(derive_seed(seed, n, trial));
      const Circuit c = random_circuit(n, gen);

      Rng run_rng(derive_seed(seed ^ 0x5eedULL, n, trial));
      const RunResult tr = run_circuit(c, run_rng);
      const StateVector reconstructed = to_statevector(tr.tableau);

      Rng dense_rng(derive_seed(seed ^ 0x5eedULL, n, trial));
      const DenseRunResult dr = dense_run(c, dense_rng);

      const double f = fidelity(reconstructed, dr.state);
      ++result.circuits_checked;
      if (f < result.min_fidelity) {
        result.min_fidelity = f;
      }
      if (f < kFidelityFloor && result.ok) {
        result.ok = false;
        result.failing_circuit = serialize_circuit(c);
        return result;
      }
    }
  }
  return result;
}

UniformityResult check_sampler_uniformity(std::size_t n, std::size_t samples,
                                          std::uint64_t seed) {
  if (n == 0 || n > 2) {
    throw std::invalid_argument(
        "uniformity counting is only tractable for n in {1, 2}");
  }
  UniformityResult result;
  result.classes_expected = static_cast<std::size_t>(clifford_group_order(n));

  std::unordered_map<std::vector<Word>, std::uint64_t, KeyHash> counts;
  counts.reserve(result.classes_expected * 2);
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const SymplecticSample s = sample_clifford(n, rng);
    ++counts[s.tableau.canonical_key()];
  }
  result.classes_seen = counts.size();
  if (result.classes_seen != result.classes_expected) {
    result.ok = false;
    return result;
  }
  std::vector<std::uint64_t> observed;
  observed.reserve(counts.size());
  for (const auto& [key, count] : counts) {
    observed.push_back(count);
  }
  const ChiSquareTest t =
      chi_squared_uniform_test(observed, kUniformitySignificance);
  result.statistic = t.statistic;
  result.critical = t.critical;
  result.ok = !t.rejected;
  return result;
}

}  // namespace stabsim
