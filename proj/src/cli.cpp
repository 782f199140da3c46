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

#include "stabsim/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "stabsim/circuit.hpp"
#include "stabsim/errors.hpp"
#include "stabsim/random_clifford.hpp"
#include "stabsim/rng.hpp"
#include "stabsim/tableau.hpp"
#include "stabsim/verify.hpp"

namespace stabsim {

int cmd_bench(const BenchConfig& cfg, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::ofstream csv(out_path);
  if (!csv) {
    err << "error: cannot open '" << out_path << "' for writing\n";
    return kExitIo;
  }
  try {
    const std::vector<BenchmarkRecord> records = run_benchmark(cfg, csv);
    csv.flush();
    if (!csv) {
      err << "error: failed writing '" << out_path << "'\n";
      return kExitIo;
    }
    print_summary(records, out);
    out << records.size() << " records written to " << out_path << '\n';
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int cmd_run(const std::string& path, std::uint64_t seed, std::size_t shots,
            std::ostream& out, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot open '" << path << "'\n";
    return kExitIo;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (shots == 0) {
    err << "error: shots must be positive\n";
    return kExitUsage;
  }

  Circuit c;
  try {
    c = parse_circuit(buf.str());
  } catch (const ParseError& e) {
    err << path << ": " << e.what() << '\n';
    return kExitFailure;
  } catch (const ValidationError& e) {
    err << path << ": " << e.what() << '\n';
    return kExitFailure;
  }

  Rng rng(seed);
  for (std::size_t shot = 0; shot < shots; ++shot) {
    const RunResult r = run_circuit(c, rng);
    std::string bits;
    bits.reserve(r.outcomes.size());
    for (const std::uint8_t b : r.outcomes) {
      bits.push_back(b ? '1' : '0');
    }
    out << bits << '\n';
    if (shot + 1 == shots) {
      out << "stabilizers:\n";
      const std::size_t n = r.tableau.num_qubits();
      for (std::size_t s = 0; s < n; ++s) {
        out << "  " << r.tableau.row_str(n + s) << '\n';
      }
    }
  }
  return kExitOk;
}

int cmd_sample(std::size_t n, std::uint64_t seed, const std::string& out_path,
               std::ostream& err) {
  if (n == 0 || n > kMaxQubits) {
    err << "error: qubit count must be in [1, " << kMaxQubits << "]\n";
    return kExitUsage;
  }
  Rng rng(seed);
  const Circuit c = random_circuit(n, rng);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    err << "error: cannot open '" << out_path << "' for writing\n";
    return kExitIo;
  }
  out << serialize_circuit(c);
  out.flush();
  if (!out) {
    err << "error: failed writing '" << out_path << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

int cmd_verify(std::size_t max_n, std::size_t trials, std::uint64_t seed,
               std::ostream& out, std::ostream& err) {
  if (trials == 0) {
    err << "error: trials must be positive\n";
    return kExitUsage;
  }
  OracleEquivalenceResult oracle;
  try {
    oracle = check_oracle_equivalence(max_n, trials, seed);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (oracle.ok) {
    out << "oracle equivalence: PASS (" << oracle.circuits_checked
        << " circuits, min fidelity " << oracle.min_fidelity << ")\n";
  } else {
    out << "oracle equivalence: FAIL after " << oracle.circuits_checked
        << " circuits\n";
    out << "first failing circuit:\n" << oracle.failing_circuit;
  }

  const UniformityResult uni =
      check_sampler_uniformity(1, 48000, derive_seed(seed, 1, 0));
  if (uni.ok) {
    out << "1-qubit sampler uniformity: PASS (" << uni.classes_seen
        << " classes, chi2 " << uni.statistic << " < " << uni.critical
        << ")\n";
  } else {
    out << "1-qubit sampler uniformity: FAIL (" << uni.classes_seen << "/"
        << uni.classes_expected << " classes, chi2 " << uni.statistic
        << " vs critical " << uni.critical << ")\n";
  }

  return oracle.ok && uni.ok ? kExitOk : kExitFailure;
}

}  // namespace stabsim
