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

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "stabsim/errors.hpp"

namespace stabsim {

namespace {

using Cplx = std::complex<double>;

constexpr double kSqrt1_2 = 0.70710678118654752440;
// Probabilities of Clifford-circuit outcomes are exactly 0, 1/2, or 1; this
// tolerance only absorbs floating-point error.
constexpr double kProbTol = 1e-9;

std::size_t bit_mask(std::size_t n, std::size_t q) {
  return std::size_t{1} << (n - 1 - q);
}

void check_cap(std::size_t n) {
  if (n > kDenseMaxQubits) {
    throw CapacityError("dense simulation capped at " +
                        std::to_string(kDenseMaxQubits) + " qubits, got " +
                        std::to_string(n));
  }
}

void apply_single(StateVector& v, std::size_t q,
                  const std::array<Cplx, 4>& u) {
  const std::size_t m = bit_mask(v.n, q);
  for (std::size_t k = 0; k < v.amp.size(); ++k) {
    if ((k & m) == 0) {
      const Cplx a0 = v.amp[k];
      const Cplx a1 = v.amp[k | m];
      v.amp[k] = u[0] * a0 + u[1] * a1;
      v.amp[k | m] = u[2] * a0 + u[3] * a1;
    }
  }
}

void apply_cx(StateVector& v, std::size_t c, std::size_t t) {
  const std::size_t mc = bit_mask(v.n, c);
  const std::size_t mt = bit_mask(v.n, t);
  for (std::size_t k = 0; k < v.amp.size(); ++k) {
    if ((k & mc) != 0 && (k & mt) == 0) {
      std::swap(v.amp[k], v.amp[k | mt]);
    }
  }
}

void apply_cz(StateVector& v, std::size_t a, std::size_t b) {
  const std::size_t ma = bit_mask(v.n, a);
  const std::size_t mb = bit_mask(v.n, b);
  for (std::size_t k = 0; k < v.amp.size(); ++k) {
    if ((k & ma) != 0 && (k & mb) != 0) {
      v.amp[k] = -v.amp[k];
    }
  }
}

void apply_swap(StateVector& v, std::size_t a, std::size_t b) {
  const std::size_t ma = bit_mask(v.n, a);
  const std::size_t mb = bit_mask(v.n, b);
  for (std::size_t k = 0; k < v.amp.size(); ++k) {
    if ((k & ma) != 0 && (k & mb) == 0) {
      std::swap(v.amp[k], v.amp[(k & ~ma) | mb]);
    }
  }
}

bool measure_dense(StateVector& v, std::size_t q, RandomBitSource& rng) {
  const std::size_t m = bit_mask(v.n, q);
  double p0 = 0.0;
  for (std::size_t k = 0; k < v.amp.size(); ++k) {
    if ((k & m) == 0) {
      p0 += std::norm(v.amp[k]);
    }
  }
  bool outcome;
  if (p0 > 1.0 - kProbTol) {
    outcome = false;
  } else if (p0 < kProbTol) {
    outcome = true;
  } else {
    outcome = rng.next_bit();
  }
  const double keep = outcome ? 1.0 - p0 : p0;
  const double scale = 1.0 / std::sqrt(keep);
  for (std::size_t k = 0; k < v.amp.size(); ++k) {
    const bool one = (k & m) != 0;
    if (one == outcome) {
      v.amp[k] *= scale;
    } else {
      v.amp[k] = 0.0;
    }
  }
  return outcome;
}

void apply_gate_dense(StateVector& v, const Gate& g, RandomBitSource& rng,
                      std::vector<std::uint8_t>* outcomes) {
  static const std::array<Cplx, 4> kH = {kSqrt1_2, kSqrt1_2, kSqrt1_2,
                                         -kSqrt1_2};
  static const std::array<Cplx, 4> kS = {1.0, 0.0, 0.0, Cplx(0.0, 1.0)};
  static const std::array<Cplx, 4> kSdg = {1.0, 0.0, 0.0, Cplx(0.0, -1.0)};
  static const std::array<Cplx, 4> kX = {0.0, 1.0, 1.0, 0.0};
  static const std::array<Cplx, 4> kY = {0.0, Cplx(0.0, -1.0), Cplx(0.0, 1.0),
                                         0.0};
  static const std::array<Cplx, 4> kZ = {1.0, 0.0, 0.0, -1.0};

  switch (g.kind) {
    case GateKind::H:
      apply_single(v, g.q0, kH);
      break;
    case GateKind::S:
      apply_single(v, g.q0, kS);
      break;
    case GateKind::Sdg:
      apply_single(v, g.q0, kSdg);
      break;
    case GateKind::X:
      apply_single(v, g.q0, kX);
      break;
    case GateKind::Y:
      apply_single(v, g.q0, kY);
      break;
    case GateKind::Z:
      apply_single(v, g.q0, kZ);
      break;
    case GateKind::Cx:
      apply_cx(v, g.q0, g.q1);
      break;
    case GateKind::Cz:
      apply_cz(v, g.q0, g.q1);
      break;
    case GateKind::Swap:
      apply_swap(v, g.q0, g.q1);
      break;
    case GateKind::M: {
      const bool b = measure_dense(v, g.q0, rng);
      if (outcomes != nullptr) {
        outcomes->push_back(b ? 1 : 0);
      }
      break;
    }
  }
}

// w <- (v + P v) / 2 for the signed Pauli row p.
void apply_half_projector(const PauliRow& p, const StateVector& v,
                          StateVector& w) {
  const std::size_t n = v.n;
  std::size_t mx = 0;
  std::size_t mz = 0;
  int ys = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (p.x_bit(q)) {
      mx |= bit_mask(n, q);
    }
    if (p.z_bit(q)) {
      mz |= bit_mask(n, q);
    }
    ys += p.x_bit(q) && p.z_bit(q);
  }
  static const Cplx kIPow[4] = {1.0, Cplx(0.0, 1.0), -1.0, Cplx(0.0, -1.0)};
  const Cplx base = (p.sign ? -1.0 : 1.0) * kIPow[ys % 4];
  w.n = n;
  w.amp.assign(v.amp.size(), 0.0);
  for (std::size_t k = 0; k < v.amp.size(); ++k) {
    const std::size_t src = k ^ mx;
    const int zpar = std::popcount(src & mz) & 1;
    const Cplx phase = zpar ? -base : base;
    w.amp[k] = 0.5 * (v.amp[k] + phase * v.amp[src]);
  }
}

}  // namespace

DenseRunResult dense_run(const Circuit& c, RandomBitSource& rng) {
  check_cap(c.n);
  if (c.n == 0) {
    throw std::invalid_argument("circuit has no qubits");
  }
  DenseRunResult result;
  result.state.n = c.n;
  result.state.amp.assign(std::size_t{1} << c.n, 0.0);
  result.state.amp[0] = 1.0;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    const bool bad = g.q0 >= c.n ||
                     (arity(g.kind) == 2 && (g.q1 >= c.n || g.q0 == g.q1));
    if (bad) {
      throw std::invalid_argument("gate " + std::to_string(i) +
                                  ": invalid qubit indices");
    }
    apply_gate_dense(result.state, g, rng, &result.outcomes);
  }
  return result;
}

StateVector to_statevector(const Tableau& t) {
  const std::size_t n = t.num_qubits();
  check_cap(n);
  const std::size_t dim = std::size_t{1} << n;

  std::vector<PauliRow> stabs;
  stabs.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    stabs.push_back(t.row(n + s));
  }

  StateVector v;
  StateVector w;
  for (std::size_t seed = 0; seed < dim; ++seed) {
    v.n = n;
    v.amp.assign(dim, 0.0);
    v.amp[seed] = 1.0;
    bool dead = false;
    for (const PauliRow& p : stabs) {
      apply_half_projector(p, v, w);
      std::swap(v.amp, w.amp);
      double norm2 = 0.0;
      for (const Cplx& a : v.amp) {
        norm2 += std::norm(a);
      }
      if (norm2 < 1e-12) {
        dead = true;
        break;
      }
    }
    if (dead) {
      continue;
    }
    double norm2 = 0.0;
    for (const Cplx& a : v.amp) {
      norm2 += std::norm(a);
    }
    if (norm2 < 1e-6 / static_cast<double>(dim)) {
      continue;
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (Cplx& a : v.amp) {
      a *= inv;
    }
    // Fix the global phase: first nonzero amplitude real positive.
    for (const Cplx& a : v.amp) {
      if (std::abs(a) > 1e-9) {
        const Cplx rot = std::conj(a) / std::abs(a);
        for (Cplx& b : v.amp) {
          b *= rot;
        }
        break;
      }
    }
    return v;
  }
  throw InternalError(
      "stabilizer projector annihilated every basis seed; corrupt tableau");
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.n != b.n || a.amp.size() != b.amp.size()) {
    throw std::invalid_argument("statevector size mismatch");
  }
  Cplx inner = 0.0;
  for (std::size_t k = 0; k < a.amp.size(); ++k) {
    inner += std::conj(a.amp[k]) * b.amp[k];
  }
  return std::norm(inner);
}

}  // namespace stabsim
