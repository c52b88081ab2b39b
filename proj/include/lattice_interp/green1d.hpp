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

// Closed forms for the one-dimensional first-order problem.

#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "lattice_interp/errors.hpp"
#include "lattice_interp/sharp_constant.hpp"

namespace lattice_interp::green1d {

inline void check_lambda(double lambda) {
  if (!(lambda > 0.0 || lambda < -4.0)) {
    throw DomainError("green1d: lambda = " + std::to_string(lambda) +
                      " lies in the spectrum [-4, 0]");
  }
}

/// G_lambda(0) = 1 / sqrt(lambda (lambda + 4)).
inline double f1(double lambda) {
  check_lambda(lambda);
  return 1.0 / std::sqrt(lambda * (lambda + 4.0));
}

/// ||G_lambda||^2.
inline double g1(double lambda) {
  check_lambda(lambda);
  const double l = std::abs(lambda);
  const double m = std::abs(lambda + 4.0);
  return std::abs(lambda + 2.0) / (m * std::sqrt(l * l * l * m));
}

/// ||D G_lambda||^2.
inline double h1(double lambda) {
  check_lambda(lambda);
  const double m = std::abs(lambda + 4.0);
  return 2.0 / std::sqrt(std::abs(lambda) * m * m * m);
}

/// Decay ratio q with G_lambda(n) = f1(lambda) q^|n|; negative below the
/// spectrum.
inline double q1(double lambda) {
  check_lambda(lambda);
  const double s = std::sqrt(lambda * (lambda + 4.0));
  return lambda > 0.0 ? (lambda + 2.0 - s) / 2.0 : (lambda + 2.0 + s) / 2.0;
}

inline double green1d_n(double lambda, int n) {
  return f1(lambda) * std::pow(q1(lambda), std::abs(n));
}

/// ||DG||^2 / ||G||^2 as a function of lambda.
inline double d_of_lambda(double lambda) {
  check_lambda(lambda);
  return 2.0 * lambda / (2.0 + lambda);
}

inline void check_d(double d) {
  if (!(d > 0.0 && d < 4.0)) {
    throw DomainError("green1d: d = " + std::to_string(d) +
                      " outside (0, 4)");
  }
}

inline double lambda_of_d(double d) {
  check_d(d);
  if (d == 2.0) {
    throw DomainError("green1d: d = 2 corresponds to the delta extremal");
  }
  return 2.0 * d / (2.0 - d);
}

struct VResult {
  double value = 0.0;
  std::optional<double> lambda;  // empty at d = 2 (delta)
};

/// sup{u(0)^2 : ||u|| = 1, ||Du||^2 = d}; 0 at the closed endpoints.
inline VResult V1_ext(double d) {
  if (d == 0.0 || d == 4.0) return {0.0, std::nullopt};
  check_d(d);
  VResult r{0.5 * std::sqrt(d * (4.0 - d)), std::nullopt};
  if (d != 2.0) r.lambda = lambda_of_d(d);
  return r;
}

inline double V1(double d) { return V1_ext(d).value; }

inline SharpConstantResult K1_theta(double theta) {
  if (!(theta >= 0.5 && theta <= 1.0)) {
    throw DomainError("K1_theta: theta = " + std::to_string(theta) +
                      " outside [1/2, 1]");
  }
  if (theta == 0.5) {
    return {theta, 1.0, std::nullopt, Extremal::none,
            "maximizing family G_lambda with lambda -> 0+"};
  }
  if (theta == 1.0) return {theta, 1.0, std::nullopt, Extremal::delta, ""};
  const double k = 0.5 * std::pow(2.0 / theta, theta) *
                   std::pow(2.0 * theta - 1.0, theta - 0.5);
  return {theta, k, (4.0 * theta - 2.0) / (1.0 - theta), Extremal::green, ""};
}

/// Right-hand side 1/2 sqrt(4 - d) ||u|| ||Du||, d = ||Du||^2 / ||u||^2.
inline double refined_rhs(double norm_sq, double diff_norm_sq) {
  const double d = norm_sq > 0.0 ? diff_norm_sq / norm_sq : 0.0;
  if (!(d > 0.0 && d < 4.0)) {
    throw DomainError("refined_rhs: ratio " + std::to_string(d) +
                      " outside (0, 4)");
  }
  return 0.5 * std::sqrt(4.0 - d) * std::sqrt(norm_sq * diff_norm_sq);
}

}  // namespace lattice_interp::green1d
