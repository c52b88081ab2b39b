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

// Green's function at the origin in dimension d >= 3, reduced to a
// (d - 2)-fold integral of K(1/a) / a with a = lambda/4 + 1 + sum sin^2(x_j/2).

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "lattice_interp/errors.hpp"
#include "lattice_interp/numerics.hpp"
#include "lattice_interp/sharp_constant.hpp"
#include "lattice_interp/specfun.hpp"

namespace lattice_interp::greennd {

inline constexpr double kPi = std::numbers::pi;

inline void check_dim(int dim) {
  if (dim < 3 || dim > 5) {
    throw DomainError("greennd: dimension " + std::to_string(dim) +
                      " not supported (3, 4 or 5)");
  }
}

namespace detail {

inline double sin_half_sq(double x) {
  const double s = std::sin(0.5 * x);
  return s * s;
}

// K(1/a)/a (kind = 0) or E(1/a)/(a^2 - 1) (kind = 1), with a - 1 = excess > 0.
inline double kernel(double excess, int kind) {
  const double a = 1.0 + excess;
  const double kp = std::sqrt(excess * (a + 1.0)) / a;
  const auto ke = specfun::elliptic_KE(1.0 / a, std::min(kp, 1.0));
  return kind == 0 ? ke.K / a : ke.E / (excess * (a + 1.0));
}

inline int factorial(int m) { return m <= 1 ? 1 : m * factorial(m - 1); }

// int_{[0,pi]^m} kernel(lambda/4 + sum sin^2(x_j/2)) dx. For m >= 2 the cube
// is folded onto the simplex x_1 >= ... >= x_m and mapped by
// x_1 = r, x_{k+1} = x_k s_k, which removes the corner singularity at lambda = 0.
inline double reduced_integral(int m, double lambda, int kind, int gl_points = 24) {
  const double shift = 0.25 * lambda;
  if (m == 1) {
    auto f = [&](double x, double dx0, double) {
      // sin^2(x/2) near 0 evaluated from the exact distance to the endpoint
      return kernel(shift + sin_half_sq(dx0), kind);
      (void)x;
    };
    return numerics::tanh_sinh(f, 0.0, kPi, 1e-15).value;
  }
  const auto rule = numerics::gauss_legendre(gl_points);
  const int inner = m - 1;
  auto at_r = [&](double, double r, double) {
    if (r == 0.0) return 0.0;
    const double sr = sin_half_sq(r);
    double total = 0.0;
    std::vector<int> idx(inner, 0);
    while (true) {
      double x = r, weight = 1.0, c = sr;
      for (int k = 0; k < inner; ++k) {
        const double s = rule.nodes[idx[k]];
        x *= s;
        c += sin_half_sq(x);
        weight *= rule.weights[idx[k]] * std::pow(s, inner - 1 - k);
      }
      total += weight * kernel(shift + c, kind);
      int k = 0;
      while (k < inner && ++idx[k] == gl_points) idx[k++] = 0;
      if (k == inner) break;
    }
    return total * std::pow(r, inner);
  };
  return factorial(m) * numerics::tanh_sinh(at_r, 0.0, kPi, 1e-14).value;
}

}  // namespace detail

/// G_lambda(0) on Z^dim, lambda >= 0.
inline double fd(int dim, double lambda) {
  check_dim(dim);
  if (!(lambda >= 0.0)) {
    throw DomainError("greennd: lambda = " + std::to_string(lambda) +
                      " must be >= 0");
  }
  return detail::reduced_integral(dim - 2, lambda, 0) /
         (2.0 * std::pow(kPi, dim - 1));
}

inline double f3(double lambda) { return fd(3, lambda); }

/// ||G_lambda||^2 = -d/dlambda G_lambda(0), lambda > 0.
inline double gd(int dim, double lambda) {
  check_dim(dim);
  if (!(lambda > 0.0)) {
    throw DomainError("greennd: ||G||^2 needs lambda > 0");
  }
  return detail::reduced_integral(dim - 2, lambda, 1) /
         (8.0 * std::pow(kPi, dim - 1));
}

/// ||grad G_lambda||^2 = f - lambda g; finite at lambda = 0 where it equals f.
inline double hd(int dim, double lambda) {
  if (lambda == 0.0) return fd(dim, 0.0);
  return fd(dim, lambda) - lambda * gd(dim, lambda);
}

inline double grad_green0_norm_sq(int dim = 3) { return hd(dim, 0.0); }

/// K_d(0) = (2pi)^-d int_{T^d} dx / (4 sum sin^2(x_j/2)).
inline double Kd0(int dim) { return fd(dim, 0.0); }

/// Gamma-product closed form of K_3(0).
inline double K3_watson() {
  using specfun::gamma_fn;
  return std::sqrt(6.0) / (24.0 * std::pow(2.0 * kPi, 3)) *
         gamma_fn(1.0 / 24.0) * gamma_fn(5.0 / 24.0) * gamma_fn(7.0 / 24.0) *
         gamma_fn(11.0 / 24.0);
}

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Plain Monte Carlo for K_d(0), sampling the folded simplex coordinates in
/// which the estimator is bounded.
inline MonteCarloEstimate Kd0_monte_carlo(int dim, std::int64_t samples,
                                          std::uint64_t seed) {
  check_dim(dim);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double scale = detail::factorial(dim) * kPi / std::pow(kPi, dim);
  double sum = 0.0, sum_sq = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    const double r = kPi * (1.0 - unit(rng));
    double x = r, jac = std::pow(r, dim - 1);
    double c = detail::sin_half_sq(r);
    for (int k = 0; k < dim - 1; ++k) {
      const double s = unit(rng);
      x *= s;
      c += detail::sin_half_sq(x);
      jac *= std::pow(s, dim - 2 - k);
    }
    const double v = scale * jac / (4.0 * c);
    sum += v;
    sum_sq += v * v;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  return {mean, std::sqrt(std::max(0.0, sum_sq / n - mean * mean) / n)};
}

/// K_d(theta) for 0 < theta < 1; dim > 3 is the same construction carried
/// beyond the three-dimensional statement.
inline SharpConstantResult Kd_theta(int dim, double theta) {
  check_dim(dim);
  if (!(theta > 0.0 && theta < 1.0)) {
    throw DomainError("Kd_theta: theta = " + std::to_string(theta) +
                      " outside (0, 1)");
  }
  auto objective = [&](double t) {
    return theta * t + std::log(fd(dim, std::exp(t)));
  };
  const auto m = numerics::maximize(objective, -60.0, 40.0, 200, 1e-12);
  SharpConstantResult r{theta, std::exp(m.value) / theta_weight(theta),
                        std::exp(m.argmax), Extremal::green, ""};
  if (dim > 3) r.note = "extended beyond the three-dimensional case";
  return r;
}

inline SharpConstantResult K3_theta(double theta) { return Kd_theta(3, theta); }

}  // namespace lattice_interp::greennd
