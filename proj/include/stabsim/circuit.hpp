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
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace stabsim {

enum class GateKind : std::uint8_t {
  H,
  S,
  Sdg,
  X,
  Y,
  Z,
  Cx,
  Cz,
  Swap,
  M,
};

constexpr int arity(GateKind k) {
  switch (k) {
    case GateKind::Cx:
    case GateKind::Cz:
    case GateKind::Swap:
      return 2;
    default:
      return 1;
  }
}

std::string_view mnemonic(GateKind k);

struct Gate {
  GateKind kind;
  std::uint32_t q0 = 0;
  std::uint32_t q1 = 0;  // unused (zero) for single-qubit gates

  static Gate single(GateKind k, std::uint32_t q) { return {k, q, 0}; }
  static Gate two(GateKind k, std::uint32_t a, std::uint32_t b) {
    return {k, a, b};
  }

  bool operator==(const Gate&) const = default;
};

struct Circuit {
  std::size_t n = 0;
  std::vector<Gate> gates;
  // Auxiliary key/value annotations (gate_count, source seed).  Serialized
  // as comments and dropped on parse; not part of circuit identity.
  std::map<std::string, std::string> metadata;

  bool has_measurements() const;

  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.n == b.n && a.gates == b.gates;
  }
};

// Parses the line-oriented circuit text format:
//
//   qubits 2
//   h 0        # comments run to end of line
//   cx 0 1
//
// Mnemonics: h s sdg x y z cx cz swap m, lowercase, indices 0-based decimal.
// Accepts LF and CRLF.  Throws ParseError for malformed input and
// ValidationError for out-of-range or repeated indices; never crashes on
// arbitrary bytes.
Circuit parse_circuit(std::string_view text);

// Deterministic inverse of parse_circuit: header, metadata comments, one
// lowercase gate per line, LF endings.  parse_circuit(serialize_circuit(c))
// equals c (metadata aside).
std::string serialize_circuit(const Circuit& c);

}  // namespace stabsim
