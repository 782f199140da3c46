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

#include "stabsim/bench.hpp"

namespace stabsim {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification/validation failure
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

int cmd_bench(const BenchConfig& cfg, const std::string& out_path,
              std::ostream& out, std::ostream& err);

int cmd_run(const std::string& path, std::uint64_t seed, std::size_t shots,
            std::ostream& out, std::ostream& err);

int cmd_sample(std::size_t n, std::uint64_t seed, const std::string& out_path,
               std::ostream& err);

int cmd_verify(std::size_t max_n, std::size_t trials, std::uint64_t seed,
               std::ostream& out, std::ostream& err);

}  // namespace stabsim
