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
#include <iosfwd>
#include <string>
#include <vector>

namespace stabsim {

// One timing observation: a freshly generated random Clifford circuit on n
// qubits, executed once.
struct BenchmarkRecord {
  std::size_t n = 0;
  std::size_t circuit_index = 0;
  std::uint64_t seed = 0;
  std::size_t gate_count = 0;
  std::int64_t wall_time_ns = 0;
  bool include_alloc = false;
  int threads = 1;
};

inline constexpr char kBenchCsvHeader[] =
    "n,circuit_index,seed,gate_count,wall_time_ns,include_alloc,threads";

std::string to_csv_line(const BenchmarkRecord& r);
BenchmarkRecord parse_csv_line(const std::string& line);

struct BenchConfig {
  // Ascending qubit counts; defaults to the factor-2 ladder 8..1024.
  std::vector<std::size_t> qubits;
  std::size_t reps = 100;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = leave the OpenMP default alone
  bool include_alloc = false;
};

std::vector<std::size_t> geometric_ladder(std::size_t min_n, std::size_t max_n,
                                          std::size_t factor);

void validate(const BenchConfig& cfg);

// For each n and rep: generate a measurement-free random Clifford circuit,
// time one execution (one extra warmup rep per n is discarded), and write a
// CSV row.  Circuit generation is never timed; tableau allocation is timed
// iff include_alloc.  Per-circuit seeds derive from (seed, n, rep), so gate
// counts and results are reproducible for any thread count.
std::vector<BenchmarkRecord> run_benchmark(const BenchConfig& cfg,
                                           std::ostream& csv);

// Per-n mean and standard deviation of wall times.
void print_summary(const std::vector<BenchmarkRecord>& records,
                   std::ostream& out);

}  // namespace stabsim
