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

#include "stabsim/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "stabsim/errors.hpp"
#include "stabsim/tableau.hpp"

namespace stabsim {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

// Splits a line at '#', then on runs of spaces/tabs.
std::vector<Token> tokenize(std::string_view line) {
  const std::size_t hash = line.find('#');
  if (hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
      ++i;
    }
    out.push_back({line.substr(start, i - start), start + 1});
    ++i;
  }
  return out;
}

std::uint64_t parse_uint(const Token& tok, std::size_t line_no) {
  std::uint64_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line_no, tok.column,
                     "expected a non-negative integer, got '" +
                         std::string(tok.text) + "'");
  }
  return value;
}

struct MnemonicEntry {
  std::string_view name;
  GateKind kind;
};

constexpr MnemonicEntry kMnemonics[] = {
    {"h", GateKind::H},   {"s", GateKind::S},       {"sdg", GateKind::Sdg},
    {"x", GateKind::X},   {"y", GateKind::Y},       {"z", GateKind::Z},
    {"cx", GateKind::Cx}, {"cz", GateKind::Cz},     {"swap", GateKind::Swap},
    {"m", GateKind::M},
};

}  // namespace

std::string_view mnemonic(GateKind k) {
  for (const auto& e : kMnemonics) {
    if (e.kind == k) {
      return e.name;
    }
  }
  return "?";
}

bool Circuit::has_measurements() const {
  return std::any_of(gates.begin(), gates.end(),
                     [](const Gate& g) { return g.kind == GateKind::M; });
}

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) {
      eol = text.size();
    }
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    const bool last = eol == text.size();
    pos = eol + 1;
    ++line_no;

    const std::vector<Token> toks = tokenize(line);
    if (toks.empty()) {
      if (last) {
        break;
      }
      continue;
    }

    if (toks[0].text == "qubits") {
      if (have_header) {
        throw ParseError(line_no, toks[0].column, "duplicate header");
      }
      if (toks.size() != 2) {
        throw ParseError(line_no, toks[0].column,
                         "header must be 'qubits <n>'");
      }
      const std::uint64_t n = parse_uint(toks[1], line_no);
      if (n == 0 || n > kMaxQubits) {
        throw ValidationError(line_no, "qubit count must be in [1, " +
                                           std::to_string(kMaxQubits) + "]");
      }
      c.n = static_cast<std::size_t>(n);
      have_header = true;
      if (last) {
        break;
      }
      continue;
    }

    if (!have_header) {
      throw ParseError(line_no, toks[0].column,
                       "missing header: first line must be 'qubits <n>'");
    }

    GateKind kind{};
    bool known = false;
    for (const auto& e : kMnemonics) {
      if (toks[0].text == e.name) {
        kind = e.kind;
        known = true;
        break;
      }
    }
    if (!known) {
      throw ParseError(line_no, toks[0].column,
                       "unknown mnemonic '" + std::string(toks[0].text) + "'");
    }

    const int want = arity(kind);
    if (static_cast<int>(toks.size()) - 1 != want) {
      throw ParseError(line_no, toks[0].column,
                       "'" + std::string(toks[0].text) + "' takes " +
                           std::to_string(want) + " operand(s), got " +
                           std::to_string(toks.size() - 1));
    }

    std::uint32_t q[2] = {0, 0};
    for (int a = 0; a < want; ++a) {
      const std::uint64_t v = parse_uint(toks[a + 1], line_no);
      if (v >= c.n) {
        throw ValidationError(line_no, "qubit index " + std::to_string(v) +
                                           " out of range for " +
                                           std::to_string(c.n) + " qubit(s)");
      }
      q[a] = static_cast<std::uint32_t>(v);
    }
    if (want == 2 && q[0] == q[1]) {
      throw ValidationError(line_no, "'" + std::string(toks[0].text) +
                                         "' needs two distinct qubits");
    }
    c.gates.push_back(want == 2 ? Gate::two(kind, q[0], q[1])
                                : Gate::single(kind, q[0]));
    if (last) {
      break;
    }
  }

  if (!have_header) {
    throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing header");
  }
  return c;
}

std::string serialize_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.n << '\n';
  for (const auto& [key, value] : c.metadata) {
    out << "# " << key << ' ' << value << '\n';
  }
  for (const Gate& g : c.gates) {
    out << mnemonic(g.kind) << ' ' << g.q0;
    if (arity(g.kind) == 2) {
      out << ' ' << g.q1;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace stabsim
