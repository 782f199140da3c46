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

#include "stabsim/tableau.hpp"

#include <bit>
#include <cstring>
#include <stdexcept>

#include "stabsim/errors.hpp"
#include "stabsim/threads.hpp"

namespace stabsim {

namespace {

constexpr std::size_t kParallelRowThreshold = 2048;
// Micro-ops per cache-resident block when sweeping a gate sequence.
constexpr std::size_t kMicroOpBlock = 1024;

enum : std::uint8_t { kOpH = 0, kOpS = 1, kOpCx = 2 };

// One primitive column update with precomputed word offsets.  w0/w1 index
// the interleaved row buffer (x word at w, z word at w+1); the final row
// word holds the sign bit.
struct MicroOp {
  std::uint32_t w0;
  std::uint32_t w1;
  std::uint8_t s0;
  std::uint8_t s1;
  std::uint8_t kind;
};

inline MicroOp micro_h(std::size_t q) {
  return {static_cast<std::uint32_t>(2 * (q / kWordBits)), 0,
          static_cast<std::uint8_t>(q % kWordBits), 0, kOpH};
}
inline MicroOp micro_s(std::size_t q) {
  return {static_cast<std::uint32_t>(2 * (q / kWordBits)), 0,
          static_cast<std::uint8_t>(q % kWordBits), 0, kOpS};
}
inline MicroOp micro_cx(std::size_t c, std::size_t t) {
  return {static_cast<std::uint32_t>(2 * (c / kWordBits)),
          static_cast<std::uint32_t>(2 * (t / kWordBits)),
          static_cast<std::uint8_t>(c % kWordBits),
          static_cast<std::uint8_t>(t % kWordBits), kOpCx};
}

inline void apply_micro_op(Word* row, Word& sign_word, const MicroOp& op) {
  switch (op.kind) {
    case kOpH: {
      const Word x = row[op.w0];
      const Word z = row[op.w0 + 1];
      sign_word ^= ((x & z) >> op.s0) & 1;
      const Word d = (x ^ z) & (Word{1} << op.s0);
      row[op.w0] ^= d;
      row[op.w0 + 1] ^= d;
      break;
    }
    case kOpS: {
      const Word x = row[op.w0];
      const Word z = row[op.w0 + 1];
      sign_word ^= ((x & z) >> op.s0) & 1;
      row[op.w0 + 1] ^= x & (Word{1} << op.s0);
      break;
    }
    default: {  // kOpCx
      const Word xc = (row[op.w0] >> op.s0) & 1;
      const Word zc = (row[op.w0 + 1] >> op.s0) & 1;
      const Word xt = (row[op.w1] >> op.s1) & 1;
      const Word zt = (row[op.w1 + 1] >> op.s1) & 1;
      sign_word ^= xc & zt & (xt ^ zc ^ 1);
      row[op.w1] ^= xc << op.s1;
      row[op.w0 + 1] ^= zt << op.s0;
      break;
    }
  }
}

// Expands one gate into primitive column updates.  Derived gates decompose
// into {H, S, CNOT}: Sdg = S^3, Z = S^2, X = H Z H, Y = S X Sdg (Sdg applied
// first so row signs match conjugation by Y), CZ(a,b) = H(b) CX(a,b) H(b),
// SWAP = CX(a,b) CX(b,a) CX(a,b).
void expand_gate(const Gate& g, std::vector<MicroOp>& out) {
  const std::size_t a = g.q0;
  const std::size_t b = g.q1;
  switch (g.kind) {
    case GateKind::H:
      out.push_back(micro_h(a));
      break;
    case GateKind::S:
      out.push_back(micro_s(a));
      break;
    case GateKind::Sdg:
      out.insert(out.end(), 3, micro_s(a));
      break;
    case GateKind::Z:
      out.insert(out.end(), 2, micro_s(a));
      break;
    case GateKind::X:
      out.push_back(micro_h(a));
      out.insert(out.end(), 2, micro_s(a));
      out.push_back(micro_h(a));
      break;
    case GateKind::Y:
      out.insert(out.end(), 3, micro_s(a));  // Sdg
      out.push_back(micro_h(a));             // X = H S S H
      out.insert(out.end(), 2, micro_s(a));
      out.push_back(micro_h(a));
      out.push_back(micro_s(a));
      break;
    case GateKind::Cx:
      out.push_back(micro_cx(a, b));
      break;
    case GateKind::Cz:
      out.push_back(micro_h(b));
      out.push_back(micro_cx(a, b));
      out.push_back(micro_h(b));
      break;
    case GateKind::Swap:
      out.push_back(micro_cx(a, b));
      out.push_back(micro_cx(b, a));
      out.push_back(micro_cx(a, b));
      break;
    case GateKind::M:
      throw std::invalid_argument(
          "measurement gates are not unitary; use measure()");
  }
}

}  // namespace

PauliRow PauliRow::identity(std::size_t n) {
  PauliRow r;
  r.n = n;
  const std::size_t words = (n + kWordBits - 1) / kWordBits;
  r.x.assign(words, 0);
  r.z.assign(words, 0);
  return r;
}

void PauliRow::set_x_bit(std::size_t q, bool v) {
  const Word m = Word{1} << (q % kWordBits);
  if (v) {
    x[q / kWordBits] |= m;
  } else {
    x[q / kWordBits] &= ~m;
  }
}

void PauliRow::set_z_bit(std::size_t q, bool v) {
  const Word m = Word{1} << (q % kWordBits);
  if (v) {
    z[q / kWordBits] |= m;
  } else {
    z[q / kWordBits] &= ~m;
  }
}

std::string PauliRow::str() const {
  std::string s;
  s.reserve(n + 1);
  s.push_back(sign ? '-' : '+');
  for (std::size_t q = 0; q < n; ++q) {
    const bool xb = x_bit(q);
    const bool zb = z_bit(q);
    s.push_back(xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I'));
  }
  return s;
}

void conjugate_h(PauliRow& r, std::size_t q) {
  const std::size_t w = q / kWordBits;
  const Word m = Word{1} << (q % kWordBits);
  r.sign ^= (r.x[w] & r.z[w] & m) != 0;
  const Word d = (r.x[w] ^ r.z[w]) & m;
  r.x[w] ^= d;
  r.z[w] ^= d;
}

void conjugate_s(PauliRow& r, std::size_t q) {
  const std::size_t w = q / kWordBits;
  const Word m = Word{1} << (q % kWordBits);
  r.sign ^= (r.x[w] & r.z[w] & m) != 0;
  r.z[w] ^= r.x[w] & m;
}

void conjugate_cnot(PauliRow& r, std::size_t c, std::size_t t) {
  const std::size_t wc = c / kWordBits;
  const std::size_t wt = t / kWordBits;
  const Word mc = Word{1} << (c % kWordBits);
  const Word mt = Word{1} << (t % kWordBits);
  const bool xc = (r.x[wc] & mc) != 0;
  const bool zc = (r.z[wc] & mc) != 0;
  const bool xt = (r.x[wt] & mt) != 0;
  const bool zt = (r.z[wt] & mt) != 0;
  r.sign ^= xc && zt && (xt == zc);
  if (xc) {
    r.x[wt] ^= mt;
  }
  if (zt) {
    r.z[wc] ^= mc;
  }
}

void conjugate_gate(PauliRow& r, const Gate& g) {
  const std::size_t a = g.q0;
  const std::size_t b = g.q1;
  switch (g.kind) {
    case GateKind::H:
      conjugate_h(r, a);
      break;
    case GateKind::S:
      conjugate_s(r, a);
      break;
    case GateKind::Sdg:
      conjugate_s(r, a);
      conjugate_s(r, a);
      conjugate_s(r, a);
      break;
    case GateKind::Z:
      conjugate_s(r, a);
      conjugate_s(r, a);
      break;
    case GateKind::X:
      conjugate_h(r, a);
      conjugate_s(r, a);
      conjugate_s(r, a);
      conjugate_h(r, a);
      break;
    case GateKind::Y:
      conjugate_s(r, a);  // Sdg
      conjugate_s(r, a);
      conjugate_s(r, a);
      conjugate_h(r, a);  // X
      conjugate_s(r, a);
      conjugate_s(r, a);
      conjugate_h(r, a);
      conjugate_s(r, a);
      break;
    case GateKind::Cx:
      conjugate_cnot(r, a, b);
      break;
    case GateKind::Cz:
      conjugate_h(r, b);
      conjugate_cnot(r, a, b);
      conjugate_h(r, b);
      break;
    case GateKind::Swap:
      conjugate_cnot(r, a, b);
      conjugate_cnot(r, b, a);
      conjugate_cnot(r, a, b);
      break;
    case GateKind::M:
      throw std::invalid_argument(
          "measurement gates are not unitary; use measure()");
  }
}

Tableau::Tableau(std::size_t n) : n_(n) {
  if (n == 0 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in [1, " +
                                std::to_string(kMaxQubits) + "]");
  }
  words_ = (n + kWordBits - 1) / kWordBits;
  stride_ = 2 * words_ + 1;
  bits_.assign((2 * n + 1) * stride_, 0);
  for (std::size_t d = 0; d < n; ++d) {
    set_x_bit(d, d, true);          // destabilizer d = +X_d
    set_z_bit(n + d, d, true);      // stabilizer n+d = +Z_d
  }
}

void Tableau::check_qubit(std::size_t q) const {
  if (q >= n_) {
    throw std::invalid_argument("qubit index " + std::to_string(q) +
                                " out of range for " + std::to_string(n_) +
                                " qubit(s)");
  }
}

void Tableau::check_row(std::size_t r) const {
  if (r > 2 * n_) {
    throw std::invalid_argument("row index " + std::to_string(r) +
                                " out of range");
  }
}

void Tableau::set_x_bit(std::size_t row, std::size_t q, bool v) {
  check_row(row);
  check_qubit(q);
  Word& w = bits_[row * stride_ + 2 * (q / kWordBits)];
  const Word m = Word{1} << (q % kWordBits);
  w = v ? (w | m) : (w & ~m);
}

void Tableau::set_z_bit(std::size_t row, std::size_t q, bool v) {
  check_row(row);
  check_qubit(q);
  Word& w = bits_[row * stride_ + 2 * (q / kWordBits) + 1];
  const Word m = Word{1} << (q % kWordBits);
  w = v ? (w | m) : (w & ~m);
}

void Tableau::set_sign(std::size_t row, bool v) {
  check_row(row);
  bits_[row * stride_ + 2 * words_] = v ? 1 : 0;
}

void Tableau::apply_h(std::size_t q) {
  check_qubit(q);
  const Gate g = Gate::single(GateKind::H, static_cast<std::uint32_t>(q));
  apply_gates(&g, 1);
}

void Tableau::apply_s(std::size_t q) {
  check_qubit(q);
  const Gate g = Gate::single(GateKind::S, static_cast<std::uint32_t>(q));
  apply_gates(&g, 1);
}

void Tableau::apply_cnot(std::size_t c, std::size_t t) {
  check_qubit(c);
  check_qubit(t);
  if (c == t) {
    throw std::invalid_argument("cnot control and target must differ");
  }
  const Gate g = Gate::two(GateKind::Cx, static_cast<std::uint32_t>(c),
                           static_cast<std::uint32_t>(t));
  apply_gates(&g, 1);
}

void Tableau::apply_gate(const Gate& g) {
  apply_gates(&g, 1);
}

void Tableau::apply_gates(const Gate* gates, std::size_t count) {
  std::vector<MicroOp> ops;
  ops.reserve(count + count / 2);
  for (std::size_t i = 0; i < count; ++i) {
    const Gate& g = gates[i];
    check_qubit(g.q0);
    if (arity(g.kind) == 2) {
      check_qubit(g.q1);
      if (g.q0 == g.q1) {
        throw std::invalid_argument(
            std::string(mnemonic(g.kind)) + " needs two distinct qubits");
      }
    }
    expand_gate(g, ops);
  }
  if (ops.empty()) {
    return;
  }

  const std::size_t rows = 2 * n_;
  const std::size_t sign_off = 2 * words_;
  const MicroOp* op_data = ops.data();
  const std::size_t op_count = ops.size();

#pragma omp parallel if (rows >= kParallelRowThreshold)
  {
    const RowRange r = current_thread_chunk(rows);
    // Blocks keep the op stream cache-resident while each row's words stay
    // in L1 across the inner loop.  The sign bit lives in a local so row
    // stores cannot alias it out of a register.
    for (std::size_t b = 0; b < op_count; b += kMicroOpBlock) {
      const std::size_t bend =
          b + kMicroOpBlock < op_count ? b + kMicroOpBlock : op_count;
      for (std::size_t i = r.lo; i < r.hi; ++i) {
        Word* row = row_ptr(i);
        Word sw = row[sign_off];
        for (std::size_t k = b; k < bend; ++k) {
          apply_micro_op(row, sw, op_data[k]);
        }
        row[sign_off] = sw;
      }
    }
  }
}

int Tableau::product_phase(const Word* hrow, const Word* irow) const {
  // Per column, row_i * row_h picks up i^g with
  //   g = x_i z_i + x_h z_h + 2 z_i x_h - (x_i^x_h)(z_i^z_h)  (mod 4),
  // which sums bit-parallel via popcounts.
  std::int64_t acc = 0;
  for (std::size_t w = 0; w < words_; ++w) {
    const Word xi = irow[2 * w];
    const Word zi = irow[2 * w + 1];
    const Word xh = hrow[2 * w];
    const Word zh = hrow[2 * w + 1];
    acc += std::popcount(xi & zi) + std::popcount(xh & zh) -
           std::popcount((xi ^ xh) & (zi ^ zh));
    acc += 2 * std::popcount(zi & xh);
  }
  acc += 2 * static_cast<std::int64_t>(hrow[2 * words_] & 1);
  acc += 2 * static_cast<std::int64_t>(irow[2 * words_] & 1);
  return static_cast<int>(((acc % 4) + 4) % 4);
}

void Tableau::accumulate_product(Word* acc, const Word* row) const {
  const int m = product_phase(acc, row);
  if (m & 1) {
    throw InternalError("rowsum phase is imaginary: composed rows anticommute");
  }
  for (std::size_t w = 0; w < 2 * words_; ++w) {
    acc[w] ^= row[w];
  }
  acc[2 * words_] = m == 2 ? 1 : 0;
}

void Tableau::rowsum(std::size_t h, std::size_t i) {
  check_row(h);
  check_row(i);
  accumulate_product(row_ptr(h), row_ptr(i));
}

MeasureResult Tableau::measure(std::size_t q, RandomBitSource& rng) {
  check_qubit(q);
  const std::size_t rows = 2 * n_;

  std::size_t p = rows;
  for (std::size_t s = n_; s < rows; ++s) {
    if (x_bit(s, q)) {
      p = s;
      break;
    }
  }

  if (p < rows) {
    // Random outcome: Z_q anticommutes with stabilizer p.  Every other row
    // that anticommutes with Z_q is multiplied by row p; the partner
    // destabilizer p-n is skipped (it anticommutes with row p and is about
    // to be overwritten by it anyway).
    const bool b = rng.next_bit();
    const Word* pivot = row_ptr(p);
#pragma omp parallel if (rows >= kParallelRowThreshold)
    {
      const RowRange r = current_thread_chunk(rows);
      for (std::size_t i = r.lo; i < r.hi; ++i) {
        if (i != p && i != p - n_ && x_bit(i, q)) {
          accumulate_product(row_ptr(i), pivot);
        }
      }
    }
    copy_row(p - n_, p);
    zero_row(p);
    set_z_bit(p, q, true);
    set_sign(p, b);
    return {b, false};
  }

  // Deterministic outcome: Z_q is in the stabilizer group.  Its sign is
  // recovered by multiplying, into scratch, the stabilizers paired with
  // destabilizers that anticommute with Z_q.  The factors all commute, so
  // chunked partial products combined in chunk order give the same row for
  // any thread count.
  const std::size_t scratch = scratch_row();
  zero_row(scratch);
  if (n_ >= kParallelRowThreshold) {
    const int nt = max_threads();
    std::vector<std::vector<Word>> partial(static_cast<std::size_t>(nt));
    std::vector<std::uint8_t> used(static_cast<std::size_t>(nt), 0);
#pragma omp parallel
    {
      const RowRange r = current_thread_chunk(n_);
#ifdef _OPENMP
      const int tid = omp_get_thread_num();
#else
      const int tid = 0;
#endif
      std::vector<Word>& acc = partial[static_cast<std::size_t>(tid)];
      acc.assign(stride_, 0);
      bool any = false;
      for (std::size_t d = r.lo; d < r.hi; ++d) {
        if (x_bit(d, q)) {
          accumulate_product(acc.data(), row_ptr(d + n_));
          any = true;
        }
      }
      used[static_cast<std::size_t>(tid)] = any ? 1 : 0;
    }
    for (std::size_t t = 0; t < partial.size(); ++t) {
      if (used[t]) {
        accumulate_product(row_ptr(scratch), partial[t].data());
      }
    }
  } else {
    for (std::size_t d = 0; d < n_; ++d) {
      if (x_bit(d, q)) {
        accumulate_product(row_ptr(scratch), row_ptr(d + n_));
      }
    }
  }
  return {sign(scratch), true};
}

void Tableau::copy_row(std::size_t dst, std::size_t src) {
  std::memcpy(row_ptr(dst), row_ptr(src), stride_ * sizeof(Word));
}

void Tableau::zero_row(std::size_t row) {
  std::memset(row_ptr(row), 0, stride_ * sizeof(Word));
}

PauliRow Tableau::row(std::size_t i) const {
  check_row(i);
  PauliRow r = PauliRow::identity(n_);
  const Word* p = row_ptr(i);
  for (std::size_t w = 0; w < words_; ++w) {
    r.x[w] = p[2 * w];
    r.z[w] = p[2 * w + 1];
  }
  r.sign = (p[2 * words_] & 1) != 0;
  return r;
}

void Tableau::set_row(std::size_t i, const PauliRow& r) {
  check_row(i);
  if (r.n != n_) {
    throw std::invalid_argument("row size mismatch");
  }
  Word* p = row_ptr(i);
  for (std::size_t w = 0; w < words_; ++w) {
    p[2 * w] = r.x[w];
    p[2 * w + 1] = r.z[w];
  }
  p[2 * words_] = r.sign ? 1 : 0;
}

bool Tableau::satisfies_symplectic_condition() const {
  const std::size_t rows = 2 * n_;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = i; j < rows; ++j) {
      const Word* a = row_ptr(i);
      const Word* b = row_ptr(j);
      int parity = 0;
      for (std::size_t w = 0; w < words_; ++w) {
        parity ^= std::popcount((a[2 * w] & b[2 * w + 1]) ^
                                (a[2 * w + 1] & b[2 * w])) &
                  1;
      }
      const bool partners = (i < n_) && (j == i + n_);
      if (parity != (partners ? 1 : 0)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Word> Tableau::canonical_key() const {
  const std::size_t bits_per_row = 2 * n_ + 1;
  const std::size_t total = 2 * n_ * bits_per_row;
  std::vector<Word> key((total + kWordBits - 1) / kWordBits, 0);
  std::size_t pos = 0;
  auto push = [&](bool b) {
    if (b) {
      key[pos / kWordBits] |= Word{1} << (pos % kWordBits);
    }
    ++pos;
  };
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    for (std::size_t q = 0; q < n_; ++q) {
      push(x_bit(i, q));
    }
    for (std::size_t q = 0; q < n_; ++q) {
      push(z_bit(i, q));
    }
    push(sign(i));
  }
  return key;
}

bool Tableau::operator==(const Tableau& other) const {
  if (n_ != other.n_) {
    return false;
  }
  const std::size_t rows = 2 * n_;
  for (std::size_t i = 0; i < rows; ++i) {
    if (std::memcmp(row_ptr(i), other.row_ptr(i), stride_ * sizeof(Word)) !=
        0) {
      return false;
    }
  }
  return true;
}

void apply_circuit(Tableau& t, const Circuit& c, RandomBitSource& rng,
                   std::vector<std::uint8_t>* outcomes) {
  const std::size_t n = t.num_qubits();
  if (c.n != n) {
    throw std::invalid_argument("circuit is for " + std::to_string(c.n) +
                                " qubit(s), tableau has " + std::to_string(n));
  }
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    const bool bad_index =
        g.q0 >= n || (arity(g.kind) == 2 && (g.q1 >= n || g.q0 == g.q1));
    if (bad_index) {
      throw std::invalid_argument("gate " + std::to_string(i) + " (" +
                                  std::string(mnemonic(g.kind)) +
                                  "): invalid qubit indices");
    }
  }

  std::size_t i = 0;
  const std::size_t count = c.gates.size();
  while (i < count) {
    if (c.gates[i].kind == GateKind::M) {
      const MeasureResult r = t.measure(c.gates[i].q0, rng);
      if (outcomes != nullptr) {
        outcomes->push_back(r.outcome ? 1 : 0);
      }
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < count && c.gates[j].kind != GateKind::M) {
      ++j;
    }
    t.apply_gates(c.gates.data() + i, j - i);
    i = j;
  }
}

RunResult run_circuit(const Circuit& c, RandomBitSource& rng) {
  RunResult result{Tableau(c.n), {}};
  apply_circuit(result.tableau, c, rng, &result.outcomes);
  return result;
}

}  // namespace stabsim
