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

// One-dimensional higher-order problems: the bilaplacian resolvent in closed
// form, general order n through the rescaled integral S(mu), the continuous
// whole-line constants and the periodic first-order constant.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>

#include "lattice_interp/errors.hpp"
#include "lattice_interp/numerics.hpp"
#include "lattice_interp/sharp_constant.hpp"

namespace lattice_interp::higher_order {

inline constexpr double kPi = std::numbers::pi;

inline void check_lambda(double lambda) {
  if (!(lambda > 0.0 || lambda < -16.0)) {
    throw DomainError("higher_order: lambda = " + std::to_string(lambda) +
                      " lies in the spectrum [-16, 0]");
  }
}

/// G_lambda(0) for (Delta^2 + lambda) G = delta (lambda > 0) or
/// (-Delta^2 - lambda) G = delta (lambda < -16).
inline double f12(double lambda) {
  check_lambda(lambda);
  if (lambda > 0.0) {
    const double s = std::sqrt(lambda + 16.0);
    return std::sqrt(0.5) * std::pow(lambda, -0.75) *
           std::sqrt((s + std::sqrt(lambda)) / (lambda + 16.0));
  }
  const double m = -lambda;
  const double r = std::sqrt(m);
  return 0.5 * std::pow(m, -0.75) *
         (std::sqrt(r + 4.0) + std::sqrt(r - 4.0)) / std::sqrt(m - 16.0);
}

/// (1/pi) int_0^pi dx / |lambda + 16 sin^4(x/2)|, the defining integral.
inline double f12_quadrature(double lambda) {
  check_lambda(lambda);
  auto f = [&](double x) {
    const double s = std::sin(0.5 * x);
    return 1.0 / std::abs(lambda + 16.0 * s * s * s * s);
  };
  return numerics::gauss_kronrod(f, 0.0, kPi, 1e-15, 1e-14).value / kPi;
}

namespace detail {

// Returns (L, 1 + lambda L) with L = d/dlambda log f12 for lambda > 0, or
// (M, 1 + m M) with M = d/dm log f12, m = -lambda, for lambda < -16. The
// second member is written in factored form to avoid cancellation.
inline std::array<double, 2> log_derivative(double lambda) {
  if (lambda > 0.0) {
    const double r = std::sqrt(lambda / (lambda + 16.0));
    const double c = 4.0 * (1.0 + 2.0 * r) / ((lambda + 16.0) * (1.0 + r));
    return {(c - 1.0) / lambda, c};
  }
  const double m = -lambda;
  const double rho = std::sqrt(m / (m - 16.0));
  const double c = -4.0 * (1.0 + 2.0 * rho) / ((m - 16.0) * (1.0 + rho));
  return {(c - 1.0) / m, c};
}

}  // namespace detail

/// Analytic derivative df12/dlambda.
inline double f12_prime(double lambda) {
  check_lambda(lambda);
  const auto ld = detail::log_derivative(lambda);
  return lambda > 0.0 ? f12(lambda) * ld[0] : -f12(lambda) * ld[0];
}

/// ||G_lambda||^2 = -sign(lambda) f'.
inline double g12(double lambda) {
  return lambda > 0.0 ? -f12_prime(lambda) : f12_prime(lambda);
}

/// ||Delta G_lambda||^2 / ||G_lambda||^2 = -f/f' - lambda.
inline double d12_of_lambda(double lambda) {
  check_lambda(lambda);
  const auto ld = detail::log_derivative(lambda);
  return lambda > 0.0 ? -ld[1] / ld[0] : ld[1] / ld[0];
}

/// ||Delta G_lambda||^2 = sign(lambda) (f + lambda f').
inline double h12(double lambda) { return g12(lambda) * d12_of_lambda(lambda); }

inline void check_d(double d) {
  if (!(d > 0.0 && d < 16.0)) {
    throw DomainError("higher_order: d = " + std::to_string(d) +
                      " outside (0, 16)");
  }
}

/// lambda > 0 for d < 6, lambda < -16 for d > 6.
inline double lambda12_of_d(double d) {
  check_d(d);
  if (d == 6.0) {
    throw DomainError("lambda12_of_d: d = 6 corresponds to the delta extremal");
  }
  if (d < 6.0) {
    auto residual = [&](double t) { return d12_of_lambda(std::exp(t)) - d; };
    return std::exp(numerics::bisect(residual, -700.0, 300.0));
  }
  // t = log(-16 - lambda), kept above the resolution of -16 + rounding
  auto residual = [&](double t) { return d - d12_of_lambda(-16.0 - std::exp(t)); };
  return -16.0 - std::exp(numerics::bisect(residual, -33.0, 300.0));
}

struct VResult {
  double value = 0.0;
  std::optional<double> lambda;
};

/// sup{u(0)^2 : ||u|| = 1, ||Delta u||^2 = d}.
inline VResult V12_ext(double d) {
  check_d(d);
  if (d == 6.0) return {1.0, std::nullopt};
  const double lambda = lambda12_of_d(d);
  return {f12(lambda) * f12(lambda) / g12(lambda), lambda};
}

inline double V12(double d) { return V12_ext(d).value; }

/// The decaying characteristic root q(lambda), |q| < 1.
inline std::complex<double> q_root(double lambda) {
  if (!(lambda > 0.0)) {
    throw DomainError("q_root: lambda must be positive");
  }
  const double s = std::sqrt(lambda + 16.0);
  const double r = std::sqrt(lambda);
  const double l4 = std::pow(lambda, 0.25);
  const double c = 2.0 * std::numbers::sqrt2;
  return {1.0 - l4 * std::sqrt(s - r) / c, r / 2.0 - l4 * std::sqrt(s + r) / c};
}

/// q1 = q, q2 = 1/q1, q3 = conj(q2), q4 = conj(q1).
inline std::array<std::complex<double>, 4> characteristic_roots(double lambda) {
  const auto q1 = q_root(lambda);
  const auto q2 = 1.0 / q1;
  return {q1, q2, std::conj(q2), std::conj(q1)};
}

/// G_lambda(n) for lambda > 0.
inline double green12_n(double lambda, int n) {
  if (!(lambda > 0.0)) {
    throw DomainError("green12_n: lambda must be positive");
  }
  const double s = std::sqrt(lambda + 16.0);
  const double r = std::sqrt(lambda);
  const std::complex<double> a(s + r, 4.0);
  const auto z = a * std::pow(q_root(lambda), std::abs(n));
  return z.real() /
         (std::numbers::sqrt2 * std::pow(lambda, 0.75) * s * std::sqrt(s + r));
}

inline double lambda_star_12(double theta) {
  if (!(theta >= 0.75 && theta < 1.0)) {
    throw DomainError("lambda_star_12: theta = " + std::to_string(theta) +
                      " outside [3/4, 1)");
  }
  return (64.0 * theta - 32.0 * theta * theta - 29.0 +
          std::sqrt(32.0 * theta - 23.0)) /
         (2.0 * theta * theta - 5.0 * theta + 3.0);
}

inline SharpConstantResult K12_theta(double theta) {
  if (!(theta >= 0.75 && theta <= 1.0)) {
    throw DomainError("K12_theta: theta = " + std::to_string(theta) +
                      " outside [3/4, 1]");
  }
  if (theta == 1.0) return {theta, 1.0, std::nullopt, Extremal::delta, ""};
  const double ls = lambda_star_12(theta);
  return {theta, std::pow(ls, theta) * f12(ls) / theta_weight(theta), ls,
          Extremal::green, ""};
}

/// lambda^(1 - 1/2n) int_0^pi dx / (lambda + 4^n sin^2n(x/2)) written in
/// t = tan(x/2) / sqrt(mu), mu = lambda^(1/n); finite at mu = 0.
inline double S_mu(int n, double mu) {
  if (n < 1 || !(mu >= 0.0)) {
    throw DomainError("S_mu: needs n >= 1 and mu >= 0");
  }
  const double c = std::pow(4.0, n);
  auto integrand = [&](double s) {
    if (s >= 1.0) return 0.0;
    const double t = s / (1.0 - s);
    const double b = 1.0 + mu * t * t;
    const double denom = b * (1.0 + c * std::pow(t * t / b, n));
    return 2.0 / denom / ((1.0 - s) * (1.0 - s));
  };
  return numerics::gauss_kronrod(integrand, 0.0, 1.0, 1e-15, 1e-13).value;
}

/// int_0^inf dx / (1 + x^2n) = pi / (2n sin(pi/2n)).
inline double S_zero_closed(int n) {
  return kPi / (2.0 * n * std::sin(kPi / (2.0 * n)));
}

/// K_{1,n}(theta) on [1 - 1/2n, 1]. At the left endpoint the supremum is the
/// larger of the interior maximum of S and its mu -> 0 limit; `extremal`
/// records which one wins.
inline SharpConstantResult K1n_theta(int n, double theta) {
  if (n < 1) throw DomainError("K1n_theta: order must be >= 1");
  const double theta_star = 1.0 - 1.0 / (2.0 * n);
  if (!(theta >= theta_star && theta <= 1.0)) {
    throw DomainError("K1n_theta: theta = " + std::to_string(theta) +
                      " outside [" + std::to_string(theta_star) + ", 1]");
  }
  if (theta == 1.0) return {theta, 1.0, std::nullopt, Extremal::delta, ""};
  const double p = n * (theta - theta_star);
  auto objective = [&](double u) { return p * u + std::log(S_mu(n, std::exp(u))); };
  const double lo = std::log(1e-10) / n, hi = std::log(1e10) / n;
  const auto m = numerics::maximize(objective, lo, hi, 96, 1e-12);
  const double w = kPi * theta_weight(theta);
  SharpConstantResult r{theta, std::exp(m.value) / w, std::nullopt,
                        Extremal::green, ""};
  if (m.interior) r.lambda_star = std::exp(n * m.argmax);
  if (theta == theta_star) {
    const double limit = S_zero_closed(n) / w;
    if (limit >= r.constant) {
      r.constant = limit;
      r.lambda_star.reset();
      r.extremal = Extremal::none;
      r.note = "supremum approached as lambda -> 0+";
    }
  }
  return r;
}

/// Whole-line constant at its only admissible exponent 1 - 1/2n.
inline double taikov_C1n(int n) {
  if (n < 1) throw DomainError("taikov_C1n: order must be >= 1");
  const double theta = 1.0 - 1.0 / (2.0 * n);
  return S_zero_closed(n) / (kPi * theta_weight(theta));
}

/// G(lambda) = (1/pi) sum_{k >= 1} 1 / (k^2 + lambda).
inline double periodic_G(double lambda) {
  if (!(lambda >= 0.0)) throw DomainError("periodic_G: lambda must be >= 0");
  if (lambda < 1e-3) {
    // (1/pi) sum_j (-lambda)^j zeta(2j + 2)
    const double p2 = kPi * kPi;
    return kPi / 6.0 - lambda * p2 * kPi / 90.0 +
           lambda * lambda * p2 * p2 * kPi / 945.0 -
           lambda * lambda * lambda * p2 * p2 * p2 * kPi / 9450.0;
  }
  const double r = kPi * std::sqrt(lambda);
  return (r / std::tanh(r) - 1.0) / (2.0 * kPi * lambda);
}

/// Sharp constant for mean-zero periodic functions, theta in [0, 1/2].
inline double periodic_C11(double theta) {
  if (!(theta >= 0.0 && theta <= 0.5)) {
    throw DomainError("periodic_C11: theta = " + std::to_string(theta) +
                      " outside [0, 1/2]");
  }
  // limits of lambda^theta G(lambda) at 0 and at infinity
  double best = 0.0;
  if (theta == 0.0) best = kPi / 6.0;
  if (theta == 0.5) best = 0.5;
  auto objective = [&](double t) { return theta * t + std::log(periodic_G(std::exp(t))); };
  const auto m = numerics::maximize(objective, -40.0, 80.0, 240, 1e-12);
  if (m.interior) best = std::max(best, std::exp(m.value));
  return best / theta_weight(theta);
}

}  // namespace lattice_interp::higher_order
