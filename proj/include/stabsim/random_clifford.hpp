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

#include "stabsim/circuit.hpp"
#include "stabsim/rng.hpp"
#include "stabsim/tableau.hpp"

namespace stabsim {

// A sampled Clifford operator, recorded as its action on the 2n Pauli basis
// rows: row d is the image of X_d, row n+d the image of Z_d.
struct SymplecticSample {
  Tableau tableau;
  std::uint64_t seed = 0;
};

// Draws a uniformly distributed n-qubit Clifford operator: the symplectic
// part is built level by level from hyperbolic pairs mapped by symplectic
// transvections (uniform over Sp(2n, GF(2))), and the 2n sign bits are
// independent fair coin flips.
SymplecticSample sample_clifford(std::size_t n, Rng& rng);

// Emits a circuit over {H, S, CNOT} plus a final X/Z correction layer whose
// action on |0...0>'s tableau reproduces s.tableau exactly, sign bits
// included.  Gaussian elimination over the tableau, O(n^2) gates; the count
// is recorded in metadata["gate_count"].
Circuit synthesize_circuit(const SymplecticSample& s);

// sample_clifford followed by synthesize_circuit.  No measurements are
// appended: the benchmark workload is measurement-free.
Circuit random_circuit(std::size_t n, Rng& rng);

}  // namespace stabsim
