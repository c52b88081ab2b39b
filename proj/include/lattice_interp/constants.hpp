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

// Admissible (dim, order, theta) combinations and the sharp constant for each.

#pragma once

#include <string>

#include "lattice_interp/errors.hpp"
#include "lattice_interp/green1d.hpp"
#include "lattice_interp/green2d.hpp"
#include "lattice_interp/greennd.hpp"
#include "lattice_interp/higher_order.hpp"
#include "lattice_interp/sharp_constant.hpp"

namespace lattice_interp {

inline constexpr const char* kAdmissibilityRule =
    "theta in [1 - 1/(2n), 1] for dim 1 and order n >= 1; theta in (0, 1] "
    "for dim 2, order 1; theta in [0, 1] for dim 3..5, order 1";

inline void check_admissible(int dim, int order, double theta) {
  bool ok = false;
  if (dim == 1 && order >= 1) {
    ok = theta >= 1.0 - 1.0 / (2.0 * order) && theta <= 1.0;
  } else if (dim == 2 && order == 1) {
    ok = theta > 0.0 && theta <= 1.0;
  } else if (dim >= 3 && dim <= 5 && order == 1) {
    ok = theta >= 0.0 && theta <= 1.0;
  }
  if (!ok) {
    throw DomainError("inadmissible (dim=" + std::to_string(dim) +
                      ", order=" + std::to_string(order) +
                      ", theta=" + std::to_string(theta) + "): " +
                      kAdmissibilityRule);
  }
}

/// K(theta) in u(k)^2 <= K ||u||^{2 theta} ||D^n u||^{2(1 - theta)}.
inline SharpConstantResult sharp_constant(int dim, int order, double theta) {
  check_admissible(dim, order, theta);
  if (dim == 1) {
    if (order == 1) return green1d::K1_theta(theta);
    if (order == 2) return higher_order::K12_theta(theta);
    return higher_order::K1n_theta(order, theta);
  }
  if (dim == 2) return green2d::K2_theta(theta);
  if (theta == 1.0) return {theta, 1.0, std::nullopt, Extremal::delta, ""};
  if (theta == 0.0) {
    return {theta, greennd::Kd0(dim), std::nullopt, Extremal::not_in_l2,
            "limit G_0 is not square summable"};
  }
  return greennd::Kd_theta(dim, theta);
}

}  // namespace lattice_interp
