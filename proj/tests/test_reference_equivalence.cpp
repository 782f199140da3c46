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

#include <doctest.h>

#include "stabsim/reference_tableau.hpp"
#include "stabsim/rng.hpp"
#include "stabsim/tableau.hpp"

using namespace stabsim;

namespace {

bool states_match(const Tableau& packed, const ReferenceTableau& ref) {
  const std::size_t n = packed.num_qubits();
  if (ref.num_qubits() != n) {
    return false;
  }
  for (std::size_t i = 0; i < 2 * n; ++i) {
    if (packed.sign(i) != ref.sign(i)) {
      return false;
    }
    for (std::size_t q = 0; q < n; ++q) {
      if (packed.x_bit(i, q) != ref.x_bit(i, q) ||
          packed.z_bit(i, q) != ref.z_bit(i, q)) {
        return false;
      }
    }
  }
  return true;
}

Circuit random_circuit_with_measures(std::size_t n, std::size_t count,
                                     Rng& rng) {
  static constexpr GateKind kinds[] = {
      GateKind::H,  GateKind::S,  GateKind::Sdg, GateKind::X,    GateKind::Y,
      GateKind::Z,  GateKind::Cx, GateKind::Cz,  GateKind::Swap, GateKind::M};
  Circuit c;
  c.n = n;
  while (c.gates.size() < count) {
    const GateKind k = kinds[rng.next_word() % 10];
    const auto q0 = static_cast<std::uint32_t>(rng.next_word() % n);
    if (arity(k) == 1) {
      c.gates.push_back(Gate::single(k, q0));
      continue;
    }
    if (n < 2) {
      continue;
    }
    auto q1 = static_cast<std::uint32_t>(rng.next_word() % n);
    while (q1 == q0) {
      q1 = static_cast<std::uint32_t>(rng.next_word() % n);
    }
    c.gates.push_back(Gate::two(k, q0, q1));
  }
  return c;
}

}  // namespace

// The packed word-parallel implementation and the naive byte-per-bit one
// must produce identical tableaus and outcome streams on identical inputs.
TEST_CASE("packed and reference implementations agree on random circuits") {
  Rng gen(31337);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + gen.next_word() % 64;
    const std::size_t gates = 20 + gen.next_word() % 120;
    const Circuit c = random_circuit_with_measures(n, gates, gen);
    const std::uint64_t seed = gen.next_word();

    Rng rng_a(seed);
    const RunResult packed = run_circuit(c, rng_a);

    Rng rng_b(seed);
    const ReferenceRunResult ref = reference_run_circuit(c, rng_b);

    REQUIRE(packed.outcomes == ref.outcomes);
    REQUIRE(states_match(packed.tableau, ref.tableau));
  }
}

TEST_CASE("kernel-by-kernel agreement at word boundaries") {
  // n spanning one/two words exercises the column masks at 63/64/65.
  for (const std::size_t n : {63, 64, 65}) {
    Tableau packed(n);
    ReferenceTableau ref(n);
    Rng gen(n);
    for (int step = 0; step < 400; ++step) {
      const std::size_t q = gen.next_word() % n;
      switch (gen.next_word() % 3) {
        case 0:
          packed.apply_h(q);
          ref.apply_h(q);
          break;
        case 1:
          packed.apply_s(q);
          ref.apply_s(q);
          break;
        default: {
          std::size_t t = gen.next_word() % n;
          while (t == q) {
            t = gen.next_word() % n;
          }
          packed.apply_cnot(q, t);
          ref.apply_cnot(q, t);
          break;
        }
      }
    }
    CHECK(states_match(packed, ref));
  }
}
