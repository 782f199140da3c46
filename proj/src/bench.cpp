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

#include "stabsim/bench.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "stabsim/random_clifford.hpp"
#include "stabsim/rng.hpp"
#include "stabsim/tableau.hpp"
#include "stabsim/threads.hpp"

namespace stabsim {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ns(Clock::time_point t0, Clock::time_point t1) {
  const auto ns =
      std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
  return ns > 0 ? ns : 1;
}

}  // namespace

std::string to_csv_line(const BenchmarkRecord& r) {
  std::ostringstream out;
  out << r.n << ',' << r.circuit_index << ',' << r.seed << ',' << r.gate_count
      << ',' << r.wall_time_ns << ',' << (r.include_alloc ? 1 : 0) << ','
      << r.threads;
  return out.str();
}

BenchmarkRecord parse_csv_line(const std::string& line) {
  std::istringstream in(line);
  BenchmarkRecord r;
  char sep = 0;
  int alloc = 0;
  in >> r.n >> sep >> r.circuit_index >> sep >> r.seed >> sep >> r.gate_count >>
      sep >> r.wall_time_ns >> sep >> alloc >> sep >> r.threads;
  if (!in || sep != ',') {
    throw std::invalid_argument("malformed benchmark CSV row: " + line);
  }
  r.include_alloc = alloc != 0;
  return r;
}

std::vector<std::size_t> geometric_ladder(std::size_t min_n, std::size_t max_n,
                                          std::size_t factor) {
  if (min_n == 0 || max_n < min_n || factor < 2) {
    throw std::invalid_argument("bad ladder parameters");
  }
  std::vector<std::size_t> ladder;
  for (std::size_t n = min_n; n <= max_n; n *= factor) {
    ladder.push_back(n);
  }
  return ladder;
}

void validate(const BenchConfig& cfg) {
  if (cfg.qubits.empty()) {
    throw std::invalid_argument("qubit list must be nonempty");
  }
  for (std::size_t i = 0; i < cfg.qubits.size(); ++i) {
    if (cfg.qubits[i] == 0 || cfg.qubits[i] > kMaxQubits) {
      throw std::invalid_argument("qubit counts must be in [1, " +
                                  std::to_string(kMaxQubits) + "]");
    }
    if (i > 0 && cfg.qubits[i] <= cfg.qubits[i - 1]) {
      throw std::invalid_argument("qubit list must be strictly ascending");
    }
  }
  if (cfg.reps == 0) {
    throw std::invalid_argument("reps must be positive");
  }
}

std::vector<BenchmarkRecord> run_benchmark(const BenchConfig& cfg,
                                           std::ostream& csv) {
  validate(cfg);
  if (cfg.threads > 0) {
    set_num_threads(cfg.threads);
  }
  const int threads = cfg.threads > 0 ? cfg.threads : max_threads();

  std::vector<BenchmarkRecord> records;
  records.reserve(cfg.qubits.size() * cfg.reps);
  csv << kBenchCsvHeader << '\n';

  for (const std::size_t n : cfg.qubits) {
    // Iteration 0 is a discarded warmup rep with its own seed slot.
    for (std::size_t i = 0; i <= cfg.reps; ++i) {
      const bool warmup = i == 0;
      const std::size_t rep = warmup ? cfg.reps : i - 1;
      const std::uint64_t circuit_seed = derive_seed(cfg.seed, n, rep + 1);
      Rng gen(circuit_seed);
      const Circuit c = random_circuit(n, gen);
      Rng run_rng(derive_seed(circuit_seed, 0, 0));

      std::int64_t ns = 0;
      if (cfg.include_alloc) {
        const auto t0 = Clock::now();
        Tableau t(n);
        apply_circuit(t, c, run_rng);
        const auto t1 = Clock::now();
        ns = elapsed_ns(t0, t1);
      } else {
        Tableau t(n);
        const auto t0 = Clock::now();
        apply_circuit(t, c, run_rng);
        const auto t1 = Clock::now();
        ns = elapsed_ns(t0, t1);
      }
      if (warmup) {
        continue;
      }
      BenchmarkRecord r;
      r.n = n;
      r.circuit_index = rep;
      r.seed = circuit_seed;
      r.gate_count = c.gates.size();
      r.wall_time_ns = ns;
      r.include_alloc = cfg.include_alloc;
      r.threads = threads;
      csv << to_csv_line(r) << '\n';
      records.push_back(r);
    }
  }
  return records;
}

void print_summary(const std::vector<BenchmarkRecord>& records,
                   std::ostream& out) {
  std::map<std::size_t, std::vector<double>> by_n;
  for (const BenchmarkRecord& r : records) {
    by_n[r.n].push_back(static_cast<double>(r.wall_time_ns));
  }
  out << std::setw(8) << "n" << std::setw(8) << "reps" << std::setw(16)
      << "mean_ms" << std::setw(16) << "stddev_ms" << '\n';
  for (const auto& [n, times] : by_n) {
    double mean = 0.0;
    for (const double t : times) {
      mean += t;
    }
    mean /= static_cast<double>(times.size());
    double var = 0.0;
    for (const double t : times) {
      var += (t - mean) * (t - mean);
    }
    var = times.size() > 1 ? var / static_cast<double>(times.size() - 1) : 0.0;
    out << std::setw(8) << n << std::setw(8) << times.size() << std::setw(16)
        << std::fixed << std::setprecision(4) << mean * 1e-6 << std::setw(16)
        << std::sqrt(var) * 1e-6 << '\n';
    out.unsetf(std::ios::fixed);
  }
}

}  // namespace stabsim
