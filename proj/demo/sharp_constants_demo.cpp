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

// Prints the headline constants next to their truncated-lattice values.

#include <cmath>
#include <cstdio>

#include "lattice_interp/lattice_interp.hpp"

namespace li = lattice_interp;

int main() {
  std::printf("%-28s %-16s %-16s\n", "constant", "closed form", "lattice (N=60)");
  for (double theta : {0.6, 0.75, 0.9}) {
    const double k = li::green1d::K1_theta(theta).constant;
    const auto o = li::oracle::max_interpolation_ratio(1, 1, theta, 60);
    std::printf("K1(%.2f)%20s %-16.12f %-16.12f\n", theta, "", k, o.ratio);
  }
  const double k12 = li::higher_order::K12_theta(0.85).constant;
  const auto o12 = li::oracle::max_interpolation_ratio(1, 2, 0.85, 60);
  std::printf("K12(0.85)%19s %-16.12f %-16.12f\n", "", k12, o12.ratio);

  std::printf("\nK2(0.01)  = %.6f   asymptotic surrogate %.6f\n",
              li::green2d::K2_theta(0.01).constant, li::green2d::K2_small_theta(0.01));
  std::printf("K3(0)     = %.12f (elliptic)  %.12f (Gamma product)\n",
              li::greennd::Kd0(3), li::greennd::K3_watson());
  std::printf("K12(3/4)  = %.12f   C12(3/4) = %.12f\n",
              li::higher_order::K12_theta(0.75).constant, li::higher_order::taikov_C1n(2));

  li::spectral::SchrodingerSpec s{3, 1, li::spectral::box_well(3, 5.0, 1), 12};
  const auto r = li::spectral::lieb_thirring_check(s, 0.0);
  std::printf("\n3D well depth 5, halfwidth 1: %zu bound states, trace %.6f, bound %.6f\n",
              r.eigenvalues.size(), r.trace, r.bound);
}
