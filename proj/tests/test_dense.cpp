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

#include "stabsim/dense.hpp"

#include <doctest.h>

#include <bit>
#include <cmath>
#include <complex>

#include "stabsim/errors.hpp"
#include "stabsim/random_clifford.hpp"
#include "stabsim/rng.hpp"
#include "stabsim/tableau.hpp"

using namespace stabsim;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

Circuit bell_circuit() {
  Circuit c;
  c.n = 2;
  c.gates = {Gate::single(GateKind::H, 0), Gate::two(GateKind::Cx, 0, 1)};
  return c;
}

bool amp_close(const std::complex<double>& a, double re, double im = 0.0) {
  return std::abs(a - std::complex<double>(re, im)) < 1e-12;
}

}  // namespace

TEST_CASE("dense_run basics") {
  Rng rng(0);
  SUBCASE("Bell amplitudes") {
    const DenseRunResult r = dense_run(bell_circuit(), rng);
    REQUIRE(r.state.amp.size() == 4);
    CHECK(amp_close(r.state.amp[0], kInvSqrt2));
    CHECK(amp_close(r.state.amp[1], 0.0));
    CHECK(amp_close(r.state.amp[2], 0.0));
    CHECK(amp_close(r.state.amp[3], kInvSqrt2));
  }
  SUBCASE("X flips to |1>") {
    Circuit c;
    c.n = 1;
    c.gates = {Gate::single(GateKind::X, 0)};
    const DenseRunResult r = dense_run(c, rng);
    CHECK(amp_close(r.state.amp[0], 0.0));
    CHECK(amp_close(r.state.amp[1], 1.0));
  }
  SUBCASE("qubit 0 is the most significant index bit") {
    Circuit c;
    c.n = 2;
    c.gates = {Gate::single(GateKind::X, 0)};
    const DenseRunResult r = dense_run(c, rng);
    CHECK(amp_close(r.state.amp[2], 1.0));  // |10>
  }
  SUBCASE("cap is enforced") {
    Circuit c;
    c.n = kDenseMaxQubits + 1;
    CHECK_THROWS_AS(dense_run(c, rng), CapacityError);
  }
}

TEST_CASE("to_statevector") {
  SUBCASE("fresh two-qubit state is |00>") {
    const StateVector v = to_statevector(Tableau(2));
    CHECK(amp_close(v.amp[0], 1.0));
    CHECK(amp_close(v.amp[1], 0.0));
    CHECK(amp_close(v.amp[2], 0.0));
    CHECK(amp_close(v.amp[3], 0.0));
  }
  SUBCASE("Bell stabilizers {+XX, +ZZ}") {
    Tableau t(2);
    t.apply_h(0);
    t.apply_cnot(0, 1);
    const StateVector v = to_statevector(t);
    CHECK(amp_close(v.amp[0], kInvSqrt2));
    CHECK(amp_close(v.amp[3], kInvSqrt2));
  }
  SUBCASE("stabilizer {-Z} is |1>") {
    Tableau t(1);
    t.set_sign(1, true);
    const StateVector v = to_statevector(t);
    CHECK(amp_close(v.amp[0], 0.0));
    CHECK(amp_close(v.amp[1], 1.0));
  }
  SUBCASE("output is normalized and stabilized") {
    Rng gen(5);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 1 + gen.next_word() % 6;
      Rng sampler(gen.next_word());
      const SymplecticSample s = sample_clifford(n, sampler);
      const StateVector v = to_statevector(s.tableau);

      double norm2 = 0.0;
      for (const auto& a : v.amp) {
        norm2 += std::norm(a);
      }
      CHECK(std::abs(norm2 - 1.0) < 1e-12);

      // P_i |psi> = |psi> for every stabilizer row.
      for (std::size_t i = 0; i < n; ++i) {
        const PauliRow p = s.tableau.row(n + i);
        std::size_t mx = 0;
        std::size_t mz = 0;
        int ys = 0;
        for (std::size_t q = 0; q < n; ++q) {
          if (p.x_bit(q)) mx |= std::size_t{1} << (n - 1 - q);
          if (p.z_bit(q)) mz |= std::size_t{1} << (n - 1 - q);
          ys += p.x_bit(q) && p.z_bit(q);
        }
        static const std::complex<double> kI[4] = {
            {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        const std::complex<double> base =
            (p.sign ? -1.0 : 1.0) * kI[ys % 4];
        double err = 0.0;
        for (std::size_t k = 0; k < v.amp.size(); ++k) {
          const std::size_t src = k ^ mx;
          const std::complex<double> phase =
              (std::popcount(src & mz) & 1) ? -base : base;
          err = std::max(err, std::abs(phase * v.amp[src] - v.amp[k]));
        }
        CHECK(err < 1e-10);
      }
    }
  }
}

TEST_CASE("fidelity") {
  const StateVector zero{1, {1.0, 0.0}};
  const StateVector one{1, {0.0, 1.0}};
  const StateVector plus{1, {kInvSqrt2, kInvSqrt2}};
  CHECK(fidelity(zero, zero) == doctest::Approx(1.0));
  CHECK(fidelity(zero, one) == doctest::Approx(0.0));
  CHECK(fidelity(zero, plus) == doctest::Approx(0.5));
  CHECK(fidelity(plus, zero) == doctest::Approx(0.5));
  CHECK_THROWS_AS(fidelity(zero, StateVector{2, {1, 0, 0, 0}}),
                  std::invalid_argument);
}

TEST_CASE("tableau reconstruction matches dense simulation") {
  Rng gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + gen.next_word() % 6;
    Rng sampler(gen.next_word());
    const Circuit c = random_circuit(n, sampler);

    Rng rng_a(1);
    const RunResult tr = run_circuit(c, rng_a);
    Rng rng_b(1);
    const DenseRunResult dr = dense_run(c, rng_b);

    CHECK(fidelity(to_statevector(tr.tableau), dr.state) >= 1.0 - 1e-10);
  }
}

TEST_CASE("seeded outcome streams agree between dense and tableau paths") {
  Rng gen(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + gen.next_word() % 5;
    Rng sampler(gen.next_word());
    Circuit c = random_circuit(n, sampler);
    // interleave measurements through a copy of the gate list
    Circuit mixed;
    mixed.n = n;
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
      mixed.gates.push_back(c.gates[i]);
      if (i % 9 == 3) {
        mixed.gates.push_back(Gate::single(
            GateKind::M, static_cast<std::uint32_t>(i % n)));
      }
    }

    const std::uint64_t seed = gen.next_word();
    Rng rng_a(seed);
    const RunResult tr = run_circuit(mixed, rng_a);
    Rng rng_b(seed);
    const DenseRunResult dr = dense_run(mixed, rng_b);

    CHECK(tr.outcomes == dr.outcomes);
    CHECK(fidelity(to_statevector(tr.tableau), dr.state) >= 1.0 - 1e-10);
  }
}
