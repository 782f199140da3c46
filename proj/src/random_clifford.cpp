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

#include "stabsim/random_clifford.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

#include "stabsim/errors.hpp"

namespace stabsim {

namespace {

// A vector of the binary symplectic space GF(2)^{2n}, split into x/z halves
// like tableau rows.  <u,v> = sum_d (u.x_d v.z_d + u.z_d v.x_d) mod 2.
struct SpVec {
  std::vector<Word> x;
  std::vector<Word> z;

  bool operator==(const SpVec&) const = default;
};

SpVec zero_vec(std::size_t words) {
  return {std::vector<Word>(words, 0), std::vector<Word>(words, 0)};
}

bool is_zero(const SpVec& v) {
  for (std::size_t w = 0; w < v.x.size(); ++w) {
    if (v.x[w] != 0 || v.z[w] != 0) {
      return false;
    }
  }
  return true;
}

bool sp_product(const SpVec& u, const SpVec& v) {
  int parity = 0;
  for (std::size_t w = 0; w < u.x.size(); ++w) {
    parity ^= std::popcount((u.x[w] & v.z[w]) ^ (u.z[w] & v.x[w])) & 1;
  }
  return parity != 0;
}

SpVec vec_xor(const SpVec& a, const SpVec& b) {
  SpVec r = a;
  for (std::size_t w = 0; w < r.x.size(); ++w) {
    r.x[w] ^= b.x[w];
    r.z[w] ^= b.z[w];
  }
  return r;
}

void set_x(SpVec& v, std::size_t q) { v.x[q / kWordBits] |= Word{1} << (q % kWordBits); }
void set_z(SpVec& v, std::size_t q) { v.z[q / kWordBits] |= Word{1} << (q % kWordBits); }

// Uniform vector supported on columns [lo, n).
SpVec draw_vec(std::size_t n, std::size_t lo, std::size_t words, Rng& rng) {
  SpVec v = zero_vec(words);
  const std::size_t wlo = lo / kWordBits;
  for (std::size_t w = wlo; w < words; ++w) {
    Word mask = ~Word{0};
    if (w == wlo) {
      mask &= ~Word{0} << (lo % kWordBits);
    }
    if (w == words - 1 && (n % kWordBits) != 0) {
      mask &= (Word{1} << (n % kWordBits)) - 1;
    }
    v.x[w] = rng.next_word() & mask;
    v.z[w] = rng.next_word() & mask;
  }
  return v;
}

// A unit vector u with <target, u> = 1, taken from target's first nonzero
// coordinate (the symplectic partner of an x column is the z column and vice
// versa).
SpVec dual_unit(const SpVec& target, std::size_t words) {
  SpVec u = zero_vec(words);
  for (std::size_t w = 0; w < words; ++w) {
    if (target.x[w] != 0) {
      set_z(u, w * kWordBits +
                   static_cast<std::size_t>(std::countr_zero(target.x[w])));
      return u;
    }
    if (target.z[w] != 0) {
      set_x(u, w * kWordBits +
                   static_cast<std::size_t>(std::countr_zero(target.z[w])));
      return u;
    }
  }
  throw InternalError("dual_unit of zero vector");
}

// Transvection vectors h with T_h(x) = x + <x,h> h composing to map a onto
// b.  Zero, one, or two vectors.
std::vector<SpVec> transvections_mapping(const SpVec& a, const SpVec& b,
                                         std::size_t words) {
  if (a == b) {
    return {};
  }
  if (sp_product(a, b)) {
    return {vec_xor(a, b)};
  }
  // <a,b> = 0 and a != b: go through an intermediate w that pairs with both.
  SpVec w0 = dual_unit(a, words);
  SpVec w1 = dual_unit(b, words);
  SpVec w;
  if (sp_product(b, w0)) {
    w = std::move(w0);
  } else if (sp_product(a, w1)) {
    w = std::move(w1);
  } else {
    w = vec_xor(w0, w1);
  }
  return {vec_xor(a, w), vec_xor(w, b)};
}

void apply_transvection_to_row(Tableau& t, std::size_t row, const SpVec& h) {
  const std::size_t words = t.words_per_half_row();
  int parity = 0;
  for (std::size_t w = 0; w < words; ++w) {
    parity ^= std::popcount((t.x_word(row, w) & h.z[w]) ^
                            (t.z_word(row, w) & h.x[w])) &
              1;
  }
  if (parity) {
    for (std::size_t w = 0; w < words; ++w) {
      t.xor_x_word(row, w, h.x[w]);
      t.xor_z_word(row, w, h.z[w]);
    }
  }
}

void apply_transvection(Tableau& t, const SpVec& h) {
  const std::size_t rows = 2 * t.num_qubits();
  for (std::size_t i = 0; i < rows; ++i) {
    apply_transvection_to_row(t, i, h);
  }
}

SpVec tableau_row_vec(const Tableau& t, std::size_t row) {
  const std::size_t words = t.words_per_half_row();
  SpVec v = zero_vec(words);
  for (std::size_t w = 0; w < words; ++w) {
    v.x[w] = t.x_word(row, w);
    v.z[w] = t.z_word(row, w);
  }
  return v;
}

bool row_has_x(const PauliRow& r, std::size_t from) {
  for (std::size_t q = from; q < r.n; ++q) {
    if (r.x_bit(q)) {
      return true;
    }
  }
  return false;
}

bool row_has_z(const PauliRow& r, std::size_t from) {
  for (std::size_t q = from; q < r.n; ++q) {
    if (r.z_bit(q)) {
      return true;
    }
  }
  return false;
}

}  // namespace

SymplecticSample sample_clifford(std::size_t n, Rng& rng) {
  if (n == 0 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in [1, " +
                                std::to_string(kMaxQubits) + "]");
  }
  Tableau t(n);  // rows start as the symplectic basis
  const std::size_t words = t.words_per_half_row();

  // Innermost levels first: the element fixing the pairs handled so far is
  // drawn on the remaining columns, then left-composed with the map taking
  // the level's basis pair (X_level, Z_level) to a uniformly random
  // hyperbolic pair (v1, v2).  Orbit times stabilizer makes the composite
  // uniform over Sp(2n, GF(2)).
  for (std::size_t level = n; level-- > 0;) {
    SpVec v1;
    do {
      v1 = draw_vec(n, level, words, rng);
    } while (is_zero(v1));
    SpVec v2;
    do {
      v2 = draw_vec(n, level, words, rng);
    } while (!sp_product(v1, v2));

    SpVec e1 = zero_vec(words);
    set_x(e1, level);
    SpVec e2 = zero_vec(words);
    set_z(e2, level);

    std::vector<SpVec> hs = transvections_mapping(e1, v1, words);
    SpVec e2p = e2;
    for (const SpVec& h : hs) {
      if (sp_product(e2p, h)) {
        e2p = vec_xor(e2p, h);
      }
    }
    // Map e2p onto v2 while fixing v1.  <v1, e2p> = <e1, e2> = 1 is
    // preserved by the transvections above, which makes both correction
    // shapes below fix v1.
    if (e2p != v2) {
      if (sp_product(e2p, v2)) {
        hs.push_back(vec_xor(e2p, v2));
      } else {
        hs.push_back(v1);
        hs.push_back(vec_xor(v1, vec_xor(e2p, v2)));
      }
    }
    for (const SpVec& h : hs) {
      apply_transvection(t, h);
    }
  }

  for (std::size_t i = 0; i < 2 * n; ++i) {
    t.set_sign(i, rng.next_bit());
  }
  return {std::move(t), rng.seed()};
}

Circuit synthesize_circuit(const SymplecticSample& s) {
  const std::size_t n = s.tableau.num_qubits();
  Tableau w = s.tableau;

  // Gaussian elimination: gates over {H, S, CNOT} reduce w's symplectic part
  // to the identity, one destabilizer/stabilizer pair per column.  Decisions
  // only ever read rows j and n+j, so those two rows are tracked in local
  // copies and each column's gate batch is applied to the full tableau once.
  std::vector<Gate> elim;
  for (std::size_t j = 0; j < n; ++j) {
    PauliRow rd = w.row(j);
    PauliRow rs = w.row(n + j);
    std::vector<Gate> batch;
    auto emit = [&](Gate g) {
      conjugate_gate(rd, g);
      conjugate_gate(rs, g);
      batch.push_back(g);
    };
    auto h = [](std::size_t q) {
      return Gate::single(GateKind::H, static_cast<std::uint32_t>(q));
    };
    auto sg = [](std::size_t q) {
      return Gate::single(GateKind::S, static_cast<std::uint32_t>(q));
    };
    auto cx = [](std::size_t c, std::size_t t) {
      return Gate::two(GateKind::Cx, static_cast<std::uint32_t>(c),
                       static_cast<std::uint32_t>(t));
    };

    // Destabilizer row j -> +-X_j.
    if (!row_has_x(rd, j)) {
      for (std::size_t c = j; c < n; ++c) {
        if (rd.z_bit(c)) {
          emit(h(c));
          break;
        }
      }
    }
    if (!rd.x_bit(j)) {
      for (std::size_t c = j + 1; c < n; ++c) {
        if (rd.x_bit(c)) {
          emit(cx(c, j));
          break;
        }
      }
    }
    for (std::size_t c = j + 1; c < n; ++c) {
      if (rd.x_bit(c)) {
        emit(cx(j, c));
      }
    }
    if (row_has_z(rd, j)) {
      if (!rd.z_bit(j)) {
        emit(sg(j));
      }
      for (std::size_t c = j + 1; c < n; ++c) {
        if (rd.z_bit(c)) {
          emit(cx(c, j));
        }
      }
      emit(sg(j));
    }

    // Stabilizer row n+j -> +-Z_j; its z bit at column j is already 1
    // because it anticommutes with row j = X_j.
    for (std::size_t c = j + 1; c < n; ++c) {
      if (rs.z_bit(c)) {
        emit(cx(c, j));
      }
    }
    if (row_has_x(rs, j)) {
      emit(h(j));
      for (std::size_t c = j + 1; c < n; ++c) {
        if (rs.x_bit(c)) {
          emit(cx(j, c));
        }
      }
      if (rs.z_bit(j)) {
        emit(sg(j));
      }
      emit(h(j));
    }

    if (!batch.empty()) {
      w.apply_gates(batch.data(), batch.size());
      elim.insert(elim.end(), batch.begin(), batch.end());
    }
  }

  // Leftover signs on the identity-shaped tableau define the residual Pauli:
  // Z_d for flipped destabilizer d, X_d for flipped stabilizer n+d.
  PauliRow residual = PauliRow::identity(n);
  for (std::size_t d = 0; d < n; ++d) {
    residual.set_z_bit(d, w.sign(d));
    residual.set_x_bit(d, w.sign(n + d));
  }

  // Inverting the elimination gives the circuit; conjugating the residual
  // through it moves the Pauli correction to the end.  S^-1 = S S S keeps
  // the body inside {H, S, CNOT}.
  Circuit out;
  out.n = n;
  for (auto it = elim.rbegin(); it != elim.rend(); ++it) {
    switch (it->kind) {
      case GateKind::S:
        out.gates.push_back(*it);
        out.gates.push_back(*it);
        out.gates.push_back(*it);
        break;
      default:
        out.gates.push_back(*it);
        break;
    }
  }
  for (const Gate& g : out.gates) {
    conjugate_gate(residual, g);
  }
  for (std::size_t d = 0; d < n; ++d) {
    if (residual.x_bit(d)) {
      out.gates.push_back(Gate::single(GateKind::X, static_cast<std::uint32_t>(d)));
    }
    if (residual.z_bit(d)) {
      out.gates.push_back(Gate::single(GateKind::Z, static_cast<std::uint32_t>(d)));
    }
  }
  out.metadata["gate_count"] = std::to_string(out.gates.size());
  out.metadata["seed"] = std::to_string(s.seed);
  return out;
}

Circuit random_circuit(std::size_t n, Rng& rng) {
  return synthesize_circuit(sample_clifford(n, rng));
}

}  // namespace stabsim
