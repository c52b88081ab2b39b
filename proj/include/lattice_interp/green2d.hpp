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

// Closed forms for the two-dimensional first-order problem, expressed through
// complete elliptic integrals of modulus k = 4 / (4 + lambda).

#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "lattice_interp/errors.hpp"
#include "lattice_interp/numerics.hpp"
#include "lattice_interp/sharp_constant.hpp"
#include "lattice_interp/specfun.hpp"

namespace lattice_interp::green2d {

inline constexpr double kPi = std::numbers::pi;

inline void check_lambda(double lambda) {
  if (!(lambda > 0.0 || lambda < -8.0)) {
    throw DomainError("green2d: lambda = " + std::to_string(lambda) +
                      " lies in the spectrum [-8, 0]");
  }
}

// K and E at k = 4 / (4 + lambda), via k'^2 = lambda (lambda + 8) / (4 + lambda)^2.
inline specfun::EllipticPair elliptic_pair(double lambda) {
  const double s = std::abs(4.0 + lambda);
  const double kp = std::sqrt(lambda * (lambda + 8.0)) / s;
  return specfun::elliptic_KE(4.0 / s, std::min(kp, 1.0));
}

/// G_lambda(0, 0) = (2/pi) K(4/(4+lambda)) / |4 + lambda|.
inline double f2(double lambda) {
  check_lambda(lambda);
  return 2.0 / kPi * elliptic_pair(lambda).K / std::abs(4.0 + lambda);
}

/// ||G_lambda||^2.
inline double g2(double lambda) {
  check_lambda(lambda);
  return 2.0 * elliptic_pair(lambda).E / (kPi * lambda * (lambda + 8.0));
}

/// h / g = lambda (lambda + 8) K / ((lambda + 4) E) - lambda, rearranged
/// through K - E so that no cancellation occurs as lambda -> infinity.
inline double d2_of_lambda(double lambda) {
  check_lambda(lambda);
  const auto ke = elliptic_pair(lambda);
  return lambda * ((lambda + 4.0) * ke.K_minus_E + 4.0 * ke.K) /
         ((lambda + 4.0) * ke.E);
}

/// ||grad G_lambda||^2 = (2/pi) K / (4 + lambda) - 2 E / (pi (lambda + 8)),
/// evaluated as g * d.
inline double h2(double lambda) { return g2(lambda) * d2_of_lambda(lambda); }

/// log G_lambda(0,0) for lambda = exp(t) > 0, valid far below the range of exp.
inline double log_f2_at_log_lambda(double t) {
  if (t > -700.0) return std::log(f2(std::exp(t)));
  return std::log((5.0 * std::numbers::ln2 - t) / (4.0 * kPi));
}

inline void check_d(double d) {
  if (!(d > 0.0 && d < 8.0)) {
    throw DomainError("green2d: d = " + std::to_string(d) + " outside (0, 8)");
  }
}

/// Inverse of d2_of_lambda: lambda > 0 for d < 4, lambda < -8 for d > 4.
inline double lambda2_of_d(double d) {
  check_d(d);
  if (d == 4.0) {
    throw DomainError("lambda2_of_d: d = 4 corresponds to the delta extremal");
  }
  if (d > 4.0) return -8.0 - lambda2_of_d(8.0 - d);
  // d2 increases with lambda; search in t = log(lambda).
  auto residual = [&](double t) { return d2_of_lambda(std::exp(t)) - d; };
  return std::exp(numerics::bisect(residual, -700.0, 300.0));
}

struct VResult {
  double value = 0.0;
  std::optional<double> lambda;  // empty at d = 4 (delta)
};

inline VResult V2_ext(double d) {
  check_d(d);
  if (d == 4.0) return {1.0, std::nullopt};
  const double lambda = lambda2_of_d(d);
  const auto ke = elliptic_pair(lambda);
  const double s = 4.0 + lambda;
  return {2.0 * ke.K * ke.K * lambda * (lambda + 8.0) / (kPi * s * s * ke.E),
          lambda};
}

inline double V2(double d) { return V2_ext(d).value; }

/// Explicit majorant of V2 with the 2 pi constant; V0(4) = 1.
inline double V0_majorant(double d) {
  check_d(d);
  const double p = d * (8.0 - d);
  const double l = std::log(16.0 / p);
  return p / 8.0 * (l + std::log1p(l) + 2.0 * kPi) / (4.0 * kPi);
}

/// norm_sq * V0(grad_norm_sq / norm_sq), the right-hand side of the
/// logarithmic inequality.
inline double log_inequality_rhs(double norm_sq, double grad_norm_sq) {
  const double d = norm_sq > 0.0 ? grad_norm_sq / norm_sq : 0.0;
  if (!(d > 0.0 && d < 8.0)) {
    throw DomainError("log_inequality_rhs: ratio " + std::to_string(d) +
                      " outside (0, 8)");
  }
  return norm_sq * V0_majorant(d);
}

/// lambda(d) ~ -d / W_{-1}(-e d / 32) for small d.
inline double lambda_expansion_smalld(double d) {
  if (!(d > 0.0 && d < 0.1)) {
    throw DomainError("lambda_expansion_smalld: d = " + std::to_string(d) +
                      " outside (0, 0.1)");
  }
  return -d / specfun::lambert_w_m1(-std::numbers::e * d / 32.0);
}

/// K2(theta) = max_{lambda > 0} lambda^theta G_lambda(0,0) / (theta^theta (1-theta)^(1-theta)).
///
/// The maximizer behaves like 32 exp(1 - 1/theta), far below 1e-8 for small
/// theta, so the search runs over t = log(lambda) on a bracket scaled by 1/theta.
inline SharpConstantResult K2_theta(double theta) {
  if (!(theta > 0.0 && theta <= 1.0)) {
    throw DomainError("K2_theta: theta = " + std::to_string(theta) +
                      " outside (0, 1]");
  }
  if (theta == 1.0) return {theta, 1.0, std::nullopt, Extremal::delta, ""};
  auto objective = [&](double t) { return theta * t + log_f2_at_log_lambda(t); };
  const double lo = -1.5 / theta - 40.0;
  const auto m = numerics::maximize(objective, lo, 60.0, 400, 1e-13);
  return {theta, std::exp(m.value) / theta_weight(theta), std::exp(m.argmax),
          Extremal::green, ""};
}

/// Leading small-theta behaviour 1 / (theta^theta (1-theta)^(1-theta) 4 pi e theta).
inline double K2_small_theta(double theta) {
  return 1.0 / (theta_weight(theta) * 4.0 * kPi * std::numbers::e * theta);
}

/// (1/4pi) int_0^pi dx / sqrt((lambda/4 + s)(lambda/4 + 1 + s)), s = sin^2(x/2).
inline double f2_single_integral(double lambda) {
  auto integrand = [&](double x) {
    const double s = std::sin(0.5 * x) * std::sin(0.5 * x);
    return 1.0 / std::sqrt((0.25 * lambda + s) * (0.25 * lambda + 1.0 + s));
  };
  return numerics::gauss_kronrod(integrand, 0.0, kPi, 1e-15, 1e-14).value /
         (4.0 * kPi);
}

/// (2pi)^-2 int_{T^2} dx dy / (lambda + 4 sin^2(x/2) + 4 sin^2(y/2)) by the
/// tensor trapezoid rule with n nodes per axis.
inline double f2_fourier(double lambda, int n = 1024) {
  const double step = 2.0 * kPi / n;
  std::vector<double> w(n);
  for (int j = 0; j < n; ++j) {
    const double s = std::sin(0.5 * j * step);
    w[j] = 4.0 * s * s;
  }
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += 1.0 / (lambda + w[i] + w[j]);
    sum += row;
  }
  return sum / (static_cast<double>(n) * n);
}

}  // namespace lattice_interp::green2d
