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

#include "stabsim/reference_tableau.hpp"

#include <stdexcept>

#include "stabsim/errors.hpp"

namespace stabsim {

namespace {

// Phase exponent contributed by one column when multiplying row i into
// row h: g(x_i, z_i, x_h, z_h) in {-1, 0, 1}.
int rowsum_g(int xi, int zi, int xh, int zh) {
  if (xi == 0 && zi == 0) {
    return 0;
  }
  if (xi == 1 && zi == 1) {
    return zh - xh;
  }
  if (xi == 1 && zi == 0) {
    return zh * (2 * xh - 1);
  }
  return xh * (1 - 2 * zh);  // xi == 0, zi == 1
}

}  // namespace

ReferenceTableau::ReferenceTableau(std::size_t n) : n_(n) {
  if (n == 0 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in [1, " +
                                std::to_string(kMaxQubits) + "]");
  }
  x_.assign(2 * n + 1, std::vector<std::uint8_t>(n, 0));
  z_.assign(2 * n + 1, std::vector<std::uint8_t>(n, 0));
  r_.assign(2 * n + 1, 0);
  for (std::size_t d = 0; d < n; ++d) {
    x_[d][d] = 1;
    z_[n + d][d] = 1;
  }
}

void ReferenceTableau::check_qubit(std::size_t q) const {
  if (q >= n_) {
    throw std::invalid_argument("qubit index out of range");
  }
}

void ReferenceTableau::apply_h(std::size_t q) {
  check_qubit(q);
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    r_[i] ^= x_[i][q] & z_[i][q];
    std::swap(x_[i][q], z_[i][q]);
  }
}

void ReferenceTableau::apply_s(std::size_t q) {
  check_qubit(q);
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    r_[i] ^= x_[i][q] & z_[i][q];
    z_[i][q] ^= x_[i][q];
  }
}

void ReferenceTableau::apply_cnot(std::size_t c, std::size_t t) {
  check_qubit(c);
  check_qubit(t);
  if (c == t) {
    throw std::invalid_argument("cnot control and target must differ");
  }
  for (std::size_t i = 0; i < 2 * n_; ++i) {
    r_[i] ^= x_[i][c] & z_[i][t] & (x_[i][t] ^ z_[i][c] ^ 1);
    x_[i][t] ^= x_[i][c];
    z_[i][c] ^= z_[i][t];
  }
}

void ReferenceTableau::apply_gate(const Gate& g) {
  const std::size_t a = g.q0;
  const std::size_t b = g.q1;
  switch (g.kind) {
    case GateKind::H:
      apply_h(a);
      break;
    case GateKind::S:
      apply_s(a);
      break;
    case GateKind::Sdg:
      apply_s(a);
      apply_s(a);
      apply_s(a);
      break;
    case GateKind::Z:
      apply_s(a);
      apply_s(a);
      break;
    case GateKind::X:
      apply_h(a);
      apply_s(a);
      apply_s(a);
      apply_h(a);
      break;
    case GateKind::Y:
      apply_s(a);  // Sdg
      apply_s(a);
      apply_s(a);
      apply_h(a);  // X
      apply_s(a);
      apply_s(a);
      apply_h(a);
      apply_s(a);
      break;
    case GateKind::Cx:
      apply_cnot(a, b);
      break;
    case GateKind::Cz:
      apply_h(b);
      apply_cnot(a, b);
      apply_h(b);
      break;
    case GateKind::Swap:
      apply_cnot(a, b);
      apply_cnot(b, a);
      apply_cnot(a, b);
      break;
    case GateKind::M:
      throw std::invalid_argument(
          "measurement gates are not unitary; use measure()");
  }
}

void ReferenceTableau::rowsum(std::size_t h, std::size_t i) {
  int m = 2 * r_[h] + 2 * r_[i];
  for (std::size_t q = 0; q < n_; ++q) {
    m += rowsum_g(x_[i][q], z_[i][q], x_[h][q], z_[h][q]);
  }
  m = ((m % 4) + 4) % 4;
  if (m % 2 != 0) {
    throw InternalError("rowsum phase is imaginary: composed rows anticommute");
  }
  r_[h] = m == 2 ? 1 : 0;
  for (std::size_t q = 0; q < n_; ++q) {
    x_[h][q] ^= x_[i][q];
    z_[h][q] ^= z_[i][q];
  }
}

MeasureResult ReferenceTableau::measure(std::size_t q, RandomBitSource& rng) {
  check_qubit(q);
  std::size_t p = 2 * n_;
  for (std::size_t s = n_; s < 2 * n_; ++s) {
    if (x_[s][q]) {
      p = s;
      break;
    }
  }

  if (p < 2 * n_) {
    const bool b = rng.next_bit();
    for (std::size_t i = 0; i < 2 * n_; ++i) {
      if (i != p && i != p - n_ && x_[i][q]) {
        rowsum(i, p);
      }
    }
    x_[p - n_] = x_[p];
    z_[p - n_] = z_[p];
    r_[p - n_] = r_[p];
    std::fill(x_[p].begin(), x_[p].end(), 0);
    std::fill(z_[p].begin(), z_[p].end(), 0);
    z_[p][q] = 1;
    r_[p] = b ? 1 : 0;
    return {b, false};
  }

  const std::size_t scratch = 2 * n_;
  std::fill(x_[scratch].begin(), x_[scratch].end(), 0);
  std::fill(z_[scratch].begin(), z_[scratch].end(), 0);
  r_[scratch] = 0;
  for (std::size_t d = 0; d < n_; ++d) {
    if (x_[d][q]) {
      rowsum(scratch, d + n_);
    }
  }
  return {r_[scratch] != 0, true};
}

ReferenceRunResult reference_run_circuit(const Circuit& c,
                                         RandomBitSource& rng) {
  ReferenceRunResult result{ReferenceTableau(c.n), {}};
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::M) {
      const MeasureResult r = result.tableau.measure(g.q0, rng);
      result.outcomes.push_back(r.outcome ? 1 : 0);
    } else {
      result.tableau.apply_gate(g);
    }
  }
  return result;
}

}  // namespace stabsim
