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
#include <vector>

#include "stabsim/circuit.hpp"
#include "stabsim/rng.hpp"
#include "stabsim/tableau.hpp"

namespace stabsim {

// Plain one-byte-per-bit, single-threaded tableau.  This is the reference
// the word-packed kernels are checked against and the serial baseline in the
// comparison benchmark.  Deliberately naive: no packing, no parallelism, no
// shared code with Tableau.
class ReferenceTableau {
 public:
  explicit ReferenceTableau(std::size_t n);

  std::size_t num_qubits() const { return n_; }

  bool x_bit(std::size_t row, std::size_t q) const { return x_[row][q] != 0; }
  bool z_bit(std::size_t row, std::size_t q) const { return z_[row][q] != 0; }
  bool sign(std::size_t row) const { return r_[row] != 0; }

  void apply_h(std::size_t q);
  void apply_s(std::size_t q);
  void apply_cnot(std::size_t c, std::size_t t);
  void apply_gate(const Gate& g);

  void rowsum(std::size_t h, std::size_t i);
  MeasureResult measure(std::size_t q, RandomBitSource& rng);

 private:
  void check_qubit(std::size_t q) const;

  std::size_t n_;
  std::vector<std::vector<std::uint8_t>> x_;  // (2n+1) rows of n entries
  std::vector<std::vector<std::uint8_t>> z_;
  std::vector<std::uint8_t> r_;
};

struct ReferenceRunResult {
  ReferenceTableau tableau;
  std::vector<std::uint8_t> outcomes;
};

ReferenceRunResult reference_run_circuit(const Circuit& c,
                                         RandomBitSource& rng);

}  // namespace stabsim
