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
#include <vector>

namespace stabsim {

// Upper-tail chi-squared critical value: the statistic threshold above which
// the null hypothesis is rejected at the given significance.
double chi_squared_critical(unsigned dof, double significance);

// Pearson statistic against a uniform expectation over all classes.
double chi_squared_statistic(const std::vector<std::uint64_t>& counts,
                             double expected_per_class);

struct ChiSquareTest {
  double statistic = 0.0;
  double critical = 0.0;
  unsigned dof = 0;
  bool rejected = false;
};

ChiSquareTest chi_squared_uniform_test(
    const std::vector<std::uint64_t>& counts, double significance);

}  // namespace stabsim
