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

#include <complex>
#include <cstddef>
#include <vector>

#include "stabsim/circuit.hpp"
#include "stabsim/rng.hpp"
#include "stabsim/tableau.hpp"

namespace stabsim {

// Brute-force simulation blows up as 2^n; this module is the slow baseline
// used to cross-check the tableau path, so the cap stays at desk scale.
inline constexpr std::size_t kDenseMaxQubits = 12;

// 2^n complex amplitudes.  Basis convention, shared by every consumer:
// qubit 0 is the MOST significant bit of the basis index.
struct StateVector {
  std::size_t n = 0;
  std::vector<std::complex<double>> amp;
};

struct DenseRunResult {
  StateVector state;
  std::vector<std::uint8_t> outcomes;
};

// Applies each gate's unitary to the full statevector.  Measurements project
// and renormalize per the Born rule and consume exactly one rng bit iff the
// outcome probability is strictly between 0 and 1 — the same rng contract as
// Tableau::measure, so seeded outcome streams are comparable.
DenseRunResult dense_run(const Circuit& c, RandomBitSource& rng);

// Reconstructs the unique (up to global phase) unit vector stabilized by
// every stabilizer row of t, by applying the projectors (I+P_i)/2 to basis
// seed vectors until one survives.  The first nonzero amplitude is made real
// positive.
StateVector to_statevector(const Tableau& t);

// |<a|b>|^2; symmetric and global-phase invariant.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace stabsim
