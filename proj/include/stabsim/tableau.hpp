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

#include "stabsim/circuit.hpp"
#include "stabsim/rng.hpp"

namespace stabsim {

using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;
inline constexpr std::size_t kMaxQubits = std::size_t{1} << 20;

// A signed Pauli operator: (-1)^sign * prod_j sigma(x_j, z_j), with
// sigma(0,0)=I, sigma(1,0)=X, sigma(0,1)=Z, sigma(1,1)=Y.
struct PauliRow {
  std::size_t n = 0;
  std::vector<Word> x;
  std::vector<Word> z;
  bool sign = false;

  static PauliRow identity(std::size_t n);

  bool x_bit(std::size_t q) const {
    return (x[q / kWordBits] >> (q % kWordBits)) & 1;
  }
  bool z_bit(std::size_t q) const {
    return (z[q / kWordBits] >> (q % kWordBits)) & 1;
  }
  void set_x_bit(std::size_t q, bool v);
  void set_z_bit(std::size_t q, bool v);

  // "+XZY..." rendering; '-' prefix when sign is set.
  std::string str() const;

  bool operator==(const PauliRow&) const = default;
};

// In-place conjugation of a single row by a Clifford generator: r -> g r g†.
void conjugate_h(PauliRow& r, std::size_t q);
void conjugate_s(PauliRow& r, std::size_t q);
void conjugate_cnot(PauliRow& r, std::size_t c, std::size_t t);
// Full supported gate set except M (rejected with std::invalid_argument).
void conjugate_gate(PauliRow& r, const Gate& g);

struct MeasureResult {
  bool outcome;
  bool deterministic;
};

// The full destabilizer/stabilizer state of an n-qubit system: 2n signed
// Pauli rows plus one scratch row.  Rows 0..n-1 are destabilizers, rows
// n..2n-1 stabilizers, row 2n scratch (contents unspecified between
// operations).
//
// Storage is row-major: each row packs its x and z bits into interleaved
// 64-bit words (x word w at offset 2w, z word at 2w+1) followed by one word
// holding the sign bit.  The odd stride doubles as cache-set padding.
//
// A Tableau is exclusively owned while mutated.  Gate kernels and the
// measurement update parallelize internally over rows; results are
// bit-identical for any thread count.
class Tableau {
 public:
  // State |0...0>: destabilizer d = X_d, stabilizer n+d = Z_d, all signs +.
  explicit Tableau(std::size_t n);

  std::size_t num_qubits() const { return n_; }
  std::size_t num_rows() const { return 2 * n_ + 1; }
  std::size_t scratch_row() const { return 2 * n_; }
  std::size_t words_per_half_row() const { return words_; }

  bool x_bit(std::size_t row, std::size_t q) const {
    return (word(row, 2 * (q / kWordBits)) >> (q % kWordBits)) & 1;
  }
  bool z_bit(std::size_t row, std::size_t q) const {
    return (word(row, 2 * (q / kWordBits) + 1) >> (q % kWordBits)) & 1;
  }
  bool sign(std::size_t row) const { return word(row, 2 * words_) & 1; }

  void set_x_bit(std::size_t row, std::size_t q, bool v);
  void set_z_bit(std::size_t row, std::size_t q, bool v);
  void set_sign(std::size_t row, bool v);

  Word x_word(std::size_t row, std::size_t w) const { return word(row, 2 * w); }
  Word z_word(std::size_t row, std::size_t w) const {
    return word(row, 2 * w + 1);
  }
  void xor_x_word(std::size_t row, std::size_t w, Word v) {
    bits_[row * stride_ + 2 * w] ^= v;
  }
  void xor_z_word(std::size_t row, std::size_t w, Word v) {
    bits_[row * stride_ + 2 * w + 1] ^= v;
  }

  // Generator kernels.  Each updates all 2n rows; every row's represented
  // Pauli is conjugated by the gate.
  void apply_h(std::size_t q);
  void apply_s(std::size_t q);
  void apply_cnot(std::size_t c, std::size_t t);

  // Derived gates act via fixed decompositions into {H, S, CNOT}.
  // Measurement gates are rejected; they go through measure().
  void apply_gate(const Gate& g);

  // Applies a measurement-free gate sequence.  Equivalent to apply_gate in a
  // loop but batches the row sweep, which is what the circuit runner and the
  // synthesizer use on hot paths.
  void apply_gates(const Gate* gates, std::size_t count);

  // Row h <- row_i * row_h with sign tracked mod 4.  The two rows must
  // represent commuting Paulis; a resulting imaginary phase means the caller
  // composed anticommuting rows and raises InternalError.
  void rowsum(std::size_t h, std::size_t i);

  // Standard-basis measurement of qubit q.  Consumes exactly one bit from
  // rng iff the outcome is random.
  MeasureResult measure(std::size_t q, RandomBitSource& rng);

  PauliRow row(std::size_t i) const;
  void set_row(std::size_t i, const PauliRow& r);
  std::string row_str(std::size_t i) const { return row(i).str(); }

  // O(n^2) check of the defining invariant: <row_i, row_j> = 1 exactly for
  // destabilizer/stabilizer partners, else 0 (scratch excluded).
  bool satisfies_symplectic_condition() const;

  // Row-major concatenation of all x/z/r bits of the 2n non-scratch rows,
  // packed little-endian into words.  Injective on tableau states.
  std::vector<Word> canonical_key() const;

  // Compares the 2n non-scratch rows and their signs.
  bool operator==(const Tableau& other) const;

 private:
  Word word(std::size_t row, std::size_t idx) const {
    return bits_[row * stride_ + idx];
  }
  Word* row_ptr(std::size_t row) { return bits_.data() + row * stride_; }
  const Word* row_ptr(std::size_t row) const {
    return bits_.data() + row * stride_;
  }

  void check_qubit(std::size_t q) const;
  void check_row(std::size_t r) const;

  void copy_row(std::size_t dst, std::size_t src);
  void zero_row(std::size_t row);

  // (2*sign_h + 2*sign_i + sum_j g_j) mod 4 for interleaved row buffers.
  int product_phase(const Word* hrow, const Word* irow) const;
  void accumulate_product(Word* acc, const Word* row) const;

  std::size_t n_;
  std::size_t words_;   // 64-bit words per x (or z) half-row
  std::size_t stride_;  // 2*words_ + 1; last word holds the sign bit
  std::vector<Word> bits_;
};

struct RunResult {
  Tableau tableau;
  std::vector<std::uint8_t> outcomes;
};

// Applies c's gates in order to t.  Measurement outcomes are appended to
// *outcomes in program order when provided.  Gate errors carry the gate's
// position in the sequence.
void apply_circuit(Tableau& t, const Circuit& c, RandomBitSource& rng,
                   std::vector<std::uint8_t>* outcomes = nullptr);

// Fresh |0...0> state, then apply_circuit.
RunResult run_circuit(const Circuit& c, RandomBitSource& rng);

}  // namespace stabsim
