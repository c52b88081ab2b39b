// Copyright 2026 The lattice-interp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <random>

#include "lattice_interp/lattice.hpp"

namespace lattice_interp::testing {

// Random sequence on the box: iid normal on a random sub-box, or
// exponentially damped.
inline LatticeSeq random_seq(std::mt19937_64& rng, int dim, int radius) {
  std::normal_distribution<double> normal;
  std::uniform_int_distribution<int> pick(0, radius);
  std::uniform_real_distribution<double> damp(0.05, 1.5);
  LatticeSeq u(dim, radius);
  const bool damped = rng() % 2 == 0;
  const int support = pick(rng);
  const double a = damp(rng);
  for (std::size_t f = 0; f < u.size(); ++f) {
    const Index n = u.index_of(f);
    int l1 = 0, linf = 0;
    for (int ax = 0; ax < dim; ++ax) {
      l1 += std::abs(n[ax]);
      linf = std::max(linf, std::abs(n[ax]));
    }
    if (damped) {
      u[f] = normal(rng) * std::exp(-a * l1);
    } else if (linf <= support) {
      u[f] = normal(rng);
    }
  }
  if (u.value_at({0, 0, 0}) == 0.0) u.at({0, 0, 0}) = 1.0;
  return u;
}

}  // namespace lattice_interp::testing
