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
#include <optional>
#include <string>

namespace lattice_interp {

enum class Extremal {
  green,       // multiple of G_{lambda_star}
  delta,       // the delta sequence
  none,        // supremum approached along lambda -> 0+, not attained
  not_in_l2,   // limit object outside l^2
};

inline const char* to_string(Extremal e) {
  switch (e) {
    case Extremal::green: return "green";
    case Extremal::delta: return "delta";
    case Extremal::none: return "none";
    case Extremal::not_in_l2: return "not_in_l2";
  }
  return "?";
}

struct SharpConstantResult {
  double theta = 0.0;
  double constant = 0.0;
  std::optional<double> lambda_star;
  Extremal extremal = Extremal::none;
  std::string note;
};

// theta^theta (1 - theta)^(1 - theta), with 0^0 = 1.
inline double theta_weight(double theta) {
  auto xlogx = [](double x) { return x > 0.0 ? x * std::log(x) : 0.0; };
  return std::exp(xlogx(theta) + xlogx(1.0 - theta));
}

}  // namespace lattice_interp
