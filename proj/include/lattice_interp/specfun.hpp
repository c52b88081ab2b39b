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

// Special functions used by the closed forms: complete elliptic integrals of
// the first and second kind (arithmetic-geometric mean), the lower real branch
// of the Lambert W function, and the Gamma function.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "lattice_interp/errors.hpp"

namespace lattice_interp::specfun {

/// Elliptic modulus k. K(k) requires |k| < 1, E(k) allows |k| <= 1.
struct EllipticModulus {
  double k = 0.0;
};

struct EllipticPair {
  double K = 0.0;
  double E = 0.0;
  double K_minus_E = 0.0;
};

/// K, E and K - E from the modulus pair (k, k'), k^2 + k'^2 = 1, 0 < k' <= 1.
///
/// Both members are taken as given so that each keeps full relative accuracy:
/// k' carries the behaviour as k -> 1 and k^2 seeds K - E without cancellation
/// as k -> 0.
inline EllipticPair elliptic_KE(double k, double kprime) {
  if (!(kprime > 0.0 && kprime <= 1.0)) {
    throw DomainError("elliptic integrals: complementary modulus must lie in "
                      "(0, 1], got " + std::to_string(kprime));
  }
  double a = 1.0;
  double b = kprime;
  // sum of 2^(n-1) c_n^2 with c_0 = k
  double sum = 0.5 * k * k;
  double weight = 0.5;
  for (int it = 0; it < 64; ++it) {
    const double c = 0.5 * (a - b);
    if (std::abs(c) <= 1e-17 * a) break;
    const double a_next = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = a_next;
    weight *= 2.0;
    sum += weight * c * c;
  }
  const double K = std::numbers::pi / (2.0 * a);
  return {K, K * (1.0 - sum), K * sum};
}

/// K and E from the complementary modulus alone.
inline EllipticPair elliptic_KE_complementary(double kprime) {
  return elliptic_KE(std::sqrt((1.0 - kprime) * (1.0 + kprime)), kprime);
}

/// Complete elliptic integral of the first kind, K(k) = int_0^1 dt /
/// sqrt((1-t^2)(1-k^2 t^2)).
inline double elliptic_K(EllipticModulus m) {
  const double k = std::abs(m.k);
  if (!(k < 1.0)) {
    throw DomainError("elliptic_K: |k| must be < 1, got " +
                      std::to_string(m.k));
  }
  return elliptic_KE(k, std::sqrt((1.0 - k) * (1.0 + k))).K;
}

inline double elliptic_K(double k) { return elliptic_K(EllipticModulus{k}); }

/// Complete elliptic integral of the second kind, defined for |k| <= 1.
inline double elliptic_E(EllipticModulus m) {
  const double k = std::abs(m.k);
  if (!(k <= 1.0)) {
    throw DomainError("elliptic_E: |k| must be <= 1, got " +
                      std::to_string(m.k));
  }
  if (k == 1.0) return 1.0;
  return elliptic_KE(k, std::sqrt((1.0 - k) * (1.0 + k))).E;
}

inline double elliptic_E(double k) { return elliptic_E(EllipticModulus{k}); }

/// Branch W_{-1} of the Lambert function: the solution w <= -1 of
/// w e^w = z for -1/e <= z < 0.
inline double lambert_w_m1(double z) {
  constexpr double kInvE = 1.0 / std::numbers::e;
  if (!(z >= -kInvE && z < 0.0)) {
    throw DomainError("lambert_w_m1: argument must lie in [-1/e, 0), got " +
                      std::to_string(z));
  }
  // Branch point expansion in p = -sqrt(2(1 + e z)).
  const double p = -std::sqrt(std::max(0.0, 2.0 * (1.0 + std::numbers::e * z)));
  if (p > -1e-6) {
    return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  }
  double w;
  if (z < -0.25) {
    w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  } else {
    const double l1 = std::log(-z);
    const double l2 = std::log(-l1);
    w = l1 - l2 + l2 / l1;
  }
  for (int it = 0; it < 50; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    const double w1 = w + 1.0;
    const double denom = ew * w1 - (w + 2.0) * f / (2.0 * w1);
    const double dw = f / denom;
    w -= dw;
    if (w > -1.0) w = -1.0 - 1e-12;
    if (std::abs(dw) <= 4e-16 * std::abs(w)) break;
  }
  return w;
}

/// Gamma function for x > 0 (Lanczos approximation, g = 7, with the
/// reflection formula below 1/2).
inline double gamma_fn(double x) {
  if (!(x > 0.0)) {
    throw DomainError("gamma_fn: argument must be positive, got " +
                      std::to_string(x));
  }
  static constexpr std::array<double, 9> kLanczos = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) {
    return std::numbers::pi /
           (std::sin(std::numbers::pi * x) * gamma_fn(1.0 - x));
  }
  const double y = x - 1.0;
  double series = kLanczos[0];
  for (int i = 1; i < 9; ++i) series += kLanczos[i] / (y + i);
  const double t = y + 7.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, y + 0.5) *
         std::exp(-t) * series;
}

}  // namespace lattice_interp::specfun
