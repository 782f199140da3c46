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

// End-to-end acceptance suite.  Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pauli_matrix_oracle.hpp"
#include "stabsim/bench.hpp"
#include "stabsim/circuit.hpp"
#include "stabsim/dense.hpp"
#include "stabsim/errors.hpp"
#include "stabsim/random_clifford.hpp"
#include "stabsim/rng.hpp"
#include "stabsim/stats.hpp"
#include "stabsim/tableau.hpp"
#include "stabsim/threads.hpp"
#include "stabsim/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using namespace stabsim;

int g_failures = 0;

void report(int index, const char* name, bool pass, const std::string& detail,
            Clock::time_point t0) {
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("[%d/7] %-24s %s (%s; %.1fs)\n", index, name,
              pass ? "PASS" : "FAIL", detail.c_str(), secs);
  std::fflush(stdout);
  if (!pass) {
    ++g_failures;
  }
}

// Criterion 1: 200 random Clifford circuits per n in 1..8; fidelity between
// the tableau-reconstructed state and dense simulation >= 1 - 1e-10.
void criterion_oracle_equivalence() {
  const auto t0 = Clock::now();
  const OracleEquivalenceResult r = check_oracle_equivalence(8, 200, 20260809);
  std::ostringstream detail;
  detail << r.circuits_checked << " circuits, min fidelity "
         << r.min_fidelity;
  if (!r.ok) {
    detail << "; first failing circuit:\n" << r.failing_circuit;
  }
  report(1, "oracle equivalence", r.ok && r.min_fidelity >= kFidelityFloor,
         detail.str(), t0);
}

// Criterion 2: every signed 1- and 2-qubit Pauli row under every supported
// unitary gate matches the dense Pauli-matrix oracle exactly.
void criterion_conjugation_table() {
  const auto t0 = Clock::now();
  std::size_t checked = 0;
  bool ok = true;

  static constexpr GateKind kSingle[] = {GateKind::H, GateKind::S,
                                         GateKind::Sdg, GateKind::X,
                                         GateKind::Y, GateKind::Z};
  for (const GateKind kind : kSingle) {
    for (int bits = 0; bits < 4 && ok; ++bits) {
      for (int sgn = 0; sgn < 2 && ok; ++sgn) {
        oracle::SignedPauli p;
        p.sign = sgn != 0;
        p.x = {(bits & 1) != 0};
        p.z = {(bits & 2) != 0};
        const auto expected = oracle::conjugate(p, kind);
        if (!expected) {
          ok = false;
          break;
        }
        Tableau t(1);
        PauliRow row = PauliRow::identity(1);
        row.set_x_bit(0, p.x[0]);
        row.set_z_bit(0, p.z[0]);
        row.sign = p.sign;
        t.set_row(0, row);
        t.apply_gate(Gate::single(kind, 0));
        ok = t.x_bit(0, 0) == expected->x[0] &&
             t.z_bit(0, 0) == expected->z[0] && t.sign(0) == expected->sign;
        ++checked;
      }
    }
  }

  static constexpr GateKind kTwo[] = {GateKind::Cx, GateKind::Cz,
                                      GateKind::Swap};
  for (const GateKind kind : kTwo) {
    for (int orient = 0; orient < 2 && ok; ++orient) {
      for (int bits = 0; bits < 16 && ok; ++bits) {
        for (int sgn = 0; sgn < 2 && ok; ++sgn) {
          oracle::SignedPauli p;
          p.sign = sgn != 0;
          p.x = {(bits & 1) != 0, (bits & 4) != 0};
          p.z = {(bits & 2) != 0, (bits & 8) != 0};
          const auto expected = oracle::conjugate(p, kind, orient != 0);
          if (!expected) {
            ok = false;
            break;
          }
          Tableau t(2);
          PauliRow row = PauliRow::identity(2);
          for (std::size_t q = 0; q < 2; ++q) {
            row.set_x_bit(q, p.x[q]);
            row.set_z_bit(q, p.z[q]);
          }
          row.sign = p.sign;
          t.set_row(0, row);
          t.apply_gate(orient == 0 ? Gate::two(kind, 0, 1)
                                   : Gate::two(kind, 1, 0));
          ok = t.x_bit(0, 0) == expected->x[0] &&
               t.z_bit(0, 0) == expected->z[0] &&
               t.x_bit(0, 1) == expected->x[1] &&
               t.z_bit(0, 1) == expected->z[1] && t.sign(0) == expected->sign;
          ++checked;
        }
      }
    }
  }
  std::ostringstream detail;
  detail << checked << " conjugations, exact match";
  report(2, "conjugation table", ok, detail.str(), t0);
}

// Criterion 3: Bell-pair and GHZ-3 statistics over 10000 seeded shots:
// perfectly correlated outcomes, first-bit marginal within +-0.02 of 0.5 and
// chi-square p > 0.001.
void criterion_measurement_statistics() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream detail;

  const double chi2_crit = chi_squared_critical(1, 1e-3);
  const int shots = 10000;

  for (const std::size_t width : {2, 3}) {
    Circuit c;
    c.n = width;
    c.gates.push_back(Gate::single(GateKind::H, 0));
    for (std::size_t q = 1; q < width; ++q) {
      c.gates.push_back(Gate::two(GateKind::Cx, 0,
                                  static_cast<std::uint32_t>(q)));
    }
    for (std::size_t q = 0; q < width; ++q) {
      c.gates.push_back(Gate::single(GateKind::M,
                                     static_cast<std::uint32_t>(q)));
    }

    Rng rng(555 + width);
    std::uint64_t ones = 0;
    bool correlated = true;
    for (int s = 0; s < shots; ++s) {
      const RunResult r = run_circuit(c, rng);
      for (std::size_t q = 1; q < width; ++q) {
        correlated = correlated && r.outcomes[q] == r.outcomes[0];
      }
      ones += r.outcomes[0];
    }
    const double marginal = static_cast<double>(ones) / shots;
    const double expected = shots / 2.0;
    const double chi2 =
        (ones - expected) * (ones - expected) / expected +
        (shots - ones - expected) * (shots - ones - expected) / expected;
    const bool this_ok = correlated && std::abs(marginal - 0.5) <= 0.02 &&
                         chi2 < chi2_crit;
    detail << (width == 2 ? "bell" : " ghz3") << " marginal " << marginal
           << " chi2 " << chi2;
    ok = ok && this_ok;
  }
  report(3, "measurement statistics", ok, detail.str(), t0);
}

// Criterion 4: sampler uniformity; n=1 over 24 classes with 48000 samples,
// n=2 over 11520 classes with 1200000 samples, both non-rejecting at
// significance 0.001, class counts matching the group order formula.
void criterion_uniform_sampling() {
  const auto t0 = Clock::now();
  const UniformityResult u1 = check_sampler_uniformity(1, 48000, 97);
  const UniformityResult u2 = check_sampler_uniformity(2, 1200000, 98);
  std::ostringstream detail;
  detail << "n=1: " << u1.classes_seen << "/24 classes, chi2 " << u1.statistic
         << " < " << u1.critical << "; n=2: " << u2.classes_seen
         << "/11520 classes, chi2 " << u2.statistic << " < " << u2.critical;
  const bool ok = u1.ok && u2.ok && u1.classes_seen == 24 &&
                  u2.classes_seen == 11520 &&
                  clifford_group_order(1) == 24 &&
                  clifford_group_order(2) == 11520;
  report(4, "uniform sampling", ok, detail.str(), t0);
}

// Criterion 5: runtime-scaling shape.  Factor-2 ladder 8..1024 with 100
// measurement-free circuits per point: mean(2n)/mean(n) <= 10 for n >= 128
// and means non-decreasing from n = 64 up; one n = 1000 circuit runs in
// under 60 s single-threaded.
void criterion_scaling_shape() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream detail;

  BenchConfig cfg;
  cfg.qubits = geometric_ladder(8, 1024, 2);
  cfg.reps = 100;
  cfg.seed = 1001;

  const std::string csv_path = "acceptance_scaling.csv";
  std::vector<BenchmarkRecord> records;
  {
    std::ofstream csv(csv_path);
    records = run_benchmark(cfg, csv);
  }

  // Every CSV row must parse back; the row count is ladder x reps.
  std::size_t rows = 0;
  {
    std::ifstream csv(csv_path);
    std::string line;
    std::getline(csv, line);
    ok = ok && line == kBenchCsvHeader;
    while (std::getline(csv, line)) {
      parse_csv_line(line);
      ++rows;
    }
  }
  ok = ok && rows == cfg.qubits.size() * cfg.reps;

  std::map<std::size_t, double> mean_ns;
  for (const BenchmarkRecord& r : records) {
    mean_ns[r.n] += static_cast<double>(r.wall_time_ns) / cfg.reps;
  }
  for (std::size_t i = 1; i < cfg.qubits.size(); ++i) {
    const std::size_t lo = cfg.qubits[i - 1];
    const std::size_t hi = cfg.qubits[i];
    const double ratio = mean_ns[hi] / mean_ns[lo];
    if (lo >= 128 && ratio > 10.0) {
      ok = false;
      detail << " ratio(" << lo << "->" << hi << ")=" << ratio << " > 10;";
    }
    if (lo >= 64 && mean_ns[hi] < mean_ns[lo]) {
      ok = false;
      detail << " mean decreased " << lo << "->" << hi << ";";
    }
  }
  detail << "mean(1024)/mean(512) = "
         << mean_ns[1024] / mean_ns[512] << ", " << rows << " rows";

  // Single n=1000 circuit, one thread, generation excluded from the clock.
  set_num_threads(1);
  {
    Rng gen(4321);
    const Circuit c = random_circuit(1000, gen);
    Tableau t(1000);
    Rng rng(1);
    const auto s0 = Clock::now();
    apply_circuit(t, c, rng);
    const double secs = std::chrono::duration<double>(Clock::now() - s0).count();
    detail << "; n=1000 single-thread " << secs << "s";
    ok = ok && secs < 60.0;
  }
  set_num_threads(max_threads());

  report(5, "scaling shape", ok, detail.str(), t0);
}

// Criterion 6: identical (seed, circuit) inputs give bit-identical tableaus
// and outcome streams for thread counts 1, 2, 8.
void criterion_determinism() {
  const auto t0 = Clock::now();
  bool ok = true;

  std::vector<Circuit> circuits;
  {
    Rng gen(77);
    Circuit a = random_circuit(64, gen);
    for (std::size_t q = 0; q < 64; q += 3) {
      a.gates.push_back(Gate::single(GateKind::M,
                                     static_cast<std::uint32_t>(q)));
      a.gates.push_back(Gate::single(GateKind::H,
                                     static_cast<std::uint32_t>(q)));
      a.gates.push_back(Gate::single(GateKind::M,
                                     static_cast<std::uint32_t>(q)));
    }
    circuits.push_back(std::move(a));
    Rng gen2(78);
    circuits.push_back(random_circuit(129, gen2));
  }

  for (const Circuit& c : circuits) {
    std::vector<std::vector<Word>> keys;
    std::vector<std::vector<std::uint8_t>> outcomes;
    for (const int threads : {1, 2, 8}) {
      set_num_threads(threads);
      Rng rng(31415);
      const RunResult r = run_circuit(c, rng);
      keys.push_back(r.tableau.canonical_key());
      outcomes.push_back(r.outcomes);
    }
    ok = ok && keys[0] == keys[1] && keys[1] == keys[2] &&
         outcomes[0] == outcomes[1] && outcomes[1] == outcomes[2];
  }
  set_num_threads(max_threads());
  report(6, "determinism", ok, "thread counts {1,2,8}, 2 circuits", t0);
}

// Criterion 7: 10000 random gate applications interleaved with symplectic
// invariant checks at n in {4, 16, 64}, zero violations; 100000 fuzzed byte
// strings through the parser, zero crashes.
void criterion_fuzz() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::size_t violations = 0;

  for (const std::size_t n : {4, 16, 64}) {
    Tableau t(n);
    Rng rng(n * 7);
    Rng meas(n * 7 + 1);
    static constexpr GateKind kinds[] = {
        GateKind::H,  GateKind::S,  GateKind::Sdg, GateKind::X, GateKind::Y,
        GateKind::Z,  GateKind::Cx, GateKind::Cz,  GateKind::Swap};
    for (int step = 0; step < 10000; ++step) {
      if (rng.next_word() % 16 == 0) {
        t.measure(rng.next_word() % n, meas);
      } else {
        const GateKind k = kinds[rng.next_word() % 9];
        if (arity(k) == 1 || n < 2) {
          t.apply_gate(Gate::single(
              arity(k) == 1 ? k : GateKind::H,
              static_cast<std::uint32_t>(rng.next_word() % n)));
        } else {
          const auto q0 = static_cast<std::uint32_t>(rng.next_word() % n);
          auto q1 = static_cast<std::uint32_t>(rng.next_word() % n);
          while (q1 == q0) {
            q1 = static_cast<std::uint32_t>(rng.next_word() % n);
          }
          t.apply_gate(Gate::two(k, q0, q1));
        }
      }
      if (!t.satisfies_symplectic_condition()) {
        ++violations;
      }
    }
  }
  ok = ok && violations == 0;

  // Parser fuzz: arbitrary bytes must only ever produce circuit errors.
  std::size_t crashes = 0;
  Rng fuzz(0xfaced);
  const std::string alphabet = "qubits hsdgxyzcwapm0123456789 \t\r\n#-";
  for (int i = 0; i < 100000; ++i) {
    std::string text;
    const std::size_t len = fuzz.next_word() % 64;
    const bool ascii_biased = (i % 2) == 0;
    for (std::size_t k = 0; k < len; ++k) {
      text.push_back(ascii_biased
                         ? alphabet[fuzz.next_word() % alphabet.size()]
                         : static_cast<char>(fuzz.next_word() & 0xff));
    }
    try {
      parse_circuit(text);
    } catch (const ParseError&) {
    } catch (const ValidationError&) {
    } catch (...) {
      ++crashes;
    }
  }
  ok = ok && crashes == 0;

  std::ostringstream detail;
  detail << violations << " invariant violations, " << crashes
         << " parser crashes";
  report(7, "fuzz", ok, detail.str(), t0);
}

}  // namespace

int main() {
  std::printf("threads available: %d\n", max_threads());
  criterion_oracle_equivalence();
  criterion_conjugation_table();
  criterion_measurement_statistics();
  criterion_uniform_sampling();
  criterion_scaling_shape();
  criterion_determinism();
  criterion_fuzz();
  if (g_failures != 0) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
