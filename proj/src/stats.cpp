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

#include "stabsim/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <stdexcept>

namespace stabsim {

double chi_squared_critical(unsigned dof, double significance) {
  if (dof == 0 || significance <= 0.0 || significance >= 1.0) {
    throw std::invalid_argument("bad chi-squared test parameters");
  }
  const boost::math::chi_squared dist(static_cast<double>(dof));
  return boost::math::quantile(dist, 1.0 - significance);
}

double chi_squared_statistic(const std::vector<std::uint64_t>& counts,
                             double expected_per_class) {
  if (expected_per_class <= 0.0) {
    throw std::invalid_argument("expected count must be positive");
  }
  double stat = 0.0;
  for (const std::uint64_t c : counts) {
    const double d = static_cast<double>(c) - expected_per_class;
    stat += d * d / expected_per_class;
  }
  return stat;
}

ChiSquareTest chi_squared_uniform_test(
    const std::vector<std::uint64_t>& counts, double significance) {
  if (counts.size() < 2) {
    throw std::invalid_argument("need at least two classes");
  }
  std::uint64_t total = 0;
  for (const std::uint64_t c : counts) {
    total += c;
  }
  ChiSquareTest t;
  t.dof = static_cast<unsigned>(counts.size() - 1);
  t.statistic = chi_squared_statistic(
      counts, static_cast<double>(total) / static_cast<double>(counts.size()));
  t.critical = chi_squared_critical(t.dof, significance);
  t.rejected = t.statistic > t.critical;
  return t;
}

}  // namespace stabsim
