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

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stabsim/bench.hpp"
#include "stabsim/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Clifford circuit simulator and benchmark harness"};
  app.require_subcommand(1);

  // bench
  auto* bench = app.add_subcommand(
      "bench", "Time random Clifford circuits over a qubit ladder");
  std::vector<std::size_t> qubits;
  std::size_t min_n = 8;
  std::size_t max_n = 1024;
  std::size_t factor = 2;
  stabsim::BenchConfig cfg;
  std::string bench_out;
  auto* qopt = bench->add_option("--qubits", qubits,
                                 "explicit comma-separated qubit counts");
  qopt->delimiter(',');
  bench->add_option("--min", min_n, "ladder start")->excludes(qopt);
  bench->add_option("--max", max_n, "ladder end")->excludes(qopt);
  bench->add_option("--factor", factor, "ladder growth factor")
      ->excludes(qopt);
  bench->add_option("--reps", cfg.reps, "timed circuits per qubit count");
  bench->add_option("--seed", cfg.seed, "base seed");
  bench->add_option("--threads", cfg.threads, "worker thread count");
  bench->add_flag("--include-alloc", cfg.include_alloc,
                  "time tableau allocation too");
  bench->add_option("--out", bench_out, "CSV output path")->required();

  // run
  auto* run = app.add_subcommand("run", "Execute a circuit file");
  std::string run_file;
  std::uint64_t run_seed = 0;
  std::size_t shots = 1;
  run->add_option("file", run_file, "circuit file")->required();
  run->add_option("--seed", run_seed, "measurement seed");
  run->add_option("--shots", shots, "number of executions");

  // sample
  auto* sample =
      app.add_subcommand("sample", "Write a random Clifford circuit file");
  std::size_t sample_n = 0;
  std::uint64_t sample_seed = 0;
  std::string sample_out;
  sample->add_option("--qubits", sample_n, "qubit count")->required();
  sample->add_option("--seed", sample_seed, "sampling seed");
  sample->add_option("--out", sample_out, "output path")->required();

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Cross-check the simulator against dense simulation");
  std::size_t verify_max_n = 8;
  std::size_t trials = 200;
  std::uint64_t verify_seed = 0;
  verify->add_option("--max-n", verify_max_n, "largest qubit count");
  verify->add_option("--trials", trials, "circuits per qubit count");
  verify->add_option("--seed", verify_seed, "base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? stabsim::kExitOk : stabsim::kExitUsage;
  }

  if (bench->parsed()) {
    try {
      cfg.qubits = qubits.empty()
                       ? stabsim::geometric_ladder(min_n, max_n, factor)
                       : qubits;
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << '\n';
      return stabsim::kExitUsage;
    }
    return stabsim::cmd_bench(cfg, bench_out, std::cout, std::cerr);
  }
  if (run->parsed()) {
    return stabsim::cmd_run(run_file, run_seed, shots, std::cout, std::cerr);
  }
  if (sample->parsed()) {
    return stabsim::cmd_sample(sample_n, sample_seed, sample_out, std::cerr);
  }
  if (verify->parsed()) {
    return stabsim::cmd_verify(verify_max_n, trials, verify_seed, std::cout,
                               std::cerr);
  }
  return stabsim::kExitUsage;
}
