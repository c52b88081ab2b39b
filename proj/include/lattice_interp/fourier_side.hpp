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

// Integral (Fourier) side of the discrete inequalities: Carlson-type
// inequalities on the torus, Parseval identities for lattice sequences and the
// non-limiting discrete Sobolev inequality.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lattice_interp/errors.hpp"
#include "lattice_interp/green1d.hpp"
#include "lattice_interp/higher_order.hpp"
#include "lattice_interp/lattice.hpp"
#include "lattice_interp/numerics.hpp"

namespace lattice_interp::fourier {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

using TorusFunction1D = std::function<double(double)>;
using TorusFunction2D = std::function<double(double, double)>;

struct Sides {
  double lhs = 0.0;
  double rhs = 0.0;
};

namespace detail {

template <class F>
double torus_integral(F&& f) {
  return numerics::gauss_kronrod(f, 0.0, kTwoPi, 1e-15, 1e-14).value;
}

inline double weight(double x, int order) {
  return std::pow(2.0 * std::sin(0.5 * x), 2 * order);
}

}  // namespace detail

/// Sharp constant of the one-dimensional order-n inequality.
inline double constant_1d(int order, double theta) {
  if (order == 1) return green1d::K1_theta(theta).constant;
  if (order == 2) return higher_order::K12_theta(theta).constant;
  return higher_order::K1n_theta(order, theta).constant;
}

/// (int g)^2 against 2 pi K(theta) (int g^2)^theta (int (2 sin(x/2))^2n g^2)^(1-theta).
inline Sides carlson_lhs_rhs(const TorusFunction1D& g, double theta, int order) {
  const double k = constant_1d(order, theta);
  const double i1 = detail::torus_integral(g);
  const double i2 = detail::torus_integral([&](double x) { return g(x) * g(x); });
  const double i3 = detail::torus_integral(
      [&](double x) { return detail::weight(x, order) * g(x) * g(x); });
  return {i1 * i1,
          kTwoPi * k * std::pow(i2, theta) * std::pow(i3, 1.0 - theta)};
}

/// Limiting form: (int g)^2 against pi sqrt(4 - J/I) sqrt(I J), I = int g^2,
/// J = int 4 sin^2(x/2) g^2.
inline Sides carlson_refined(const TorusFunction1D& g) {
  const double i1 = detail::torus_integral(g);
  const double i2 = detail::torus_integral([&](double x) { return g(x) * g(x); });
  const double i3 = detail::torus_integral(
      [&](double x) { return detail::weight(x, 1) * g(x) * g(x); });
  if (!(i2 > 0.0)) throw DomainError("carlson_refined: g vanishes identically");
  const double ratio = i3 / i2;
  if (!(ratio > 0.0 && ratio < 4.0)) {
    throw DomainError("carlson_refined: ratio " + std::to_string(ratio) +
                      " outside (0, 4)");
  }
  return {i1 * i1, kPi * std::sqrt(4.0 - ratio) * std::sqrt(i2 * i3)};
}

/// Saturating family 1 / (lambda + 4 sin^2(x/2)).
inline TorusFunction1D g_lambda(double lambda) {
  return [lambda](double x) {
    const double s = std::sin(0.5 * x);
    return 1.0 / (lambda + 4.0 * s * s);
  };
}

/// Saturating family 1 / (lambda + 16 sin^4(x/2)) of the second-order case.
inline TorusFunction1D g_lambda_order2(double lambda) {
  return [lambda](double x) {
    const double s = std::sin(0.5 * x);
    return 1.0 / (lambda + 16.0 * s * s * s * s);
  };
}

/// Two-dimensional Carlson form with constant k2 = K_2(theta), integrated by
/// the tensor trapezoid rule with n nodes per axis (exact for trigonometric
/// polynomials of degree < n/2).
inline Sides carlson_2d(const TorusFunction2D& g, double theta, double k2, int n) {
  const double h = kTwoPi / n;
  double i1 = 0.0, i2 = 0.0, i3 = 0.0;
  for (int a = 0; a < n; ++a) {
    const double x = a * h;
    const double sx = std::sin(0.5 * x);
    for (int b = 0; b < n; ++b) {
      const double y = b * h;
      const double sy = std::sin(0.5 * y);
      const double v = g(x, y);
      i1 += v;
      i2 += v * v;
      i3 += 4.0 * (sx * sx + sy * sy) * v * v;
    }
  }
  const double area = h * h;
  i1 *= area;
  i2 *= area;
  i3 *= area;
  return {i1 * i1, kTwoPi * kTwoPi * k2 * std::pow(i2, theta) *
                       std::pow(i3, 1.0 - theta)};
}

/// Carlson's original inequality (sum a_k)^2 <= pi (sum a_k^2)^1/2 (sum k^2 a_k^2)^1/2,
/// a[0] holding a_1.
inline Sides carlson_original(std::span<const double> a) {
  double s1 = 0.0, s2 = 0.0, s3 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    s1 += a[i];
    s2 += a[i] * a[i];
    s3 += k * k * a[i] * a[i];
  }
  return {s1 * s1, kPi * std::sqrt(s2 * s3)};
}

/// Values of the trigonometric polynomial a^(x) = sum_n u(n) e^{i n x} on the
/// uniform grid x_j = 2 pi j / nodes of each axis, row-major.
inline std::vector<std::complex<double>> fourier_samples(const LatticeSeq& u,
                                                         int nodes) {
  const int dim = u.dim();
  const int side = u.side();
  const int radius = u.radius();
  // twiddle[j][m] = exp(i (m - radius) x_j)
  std::vector<std::complex<double>> twiddle(static_cast<std::size_t>(nodes) * side);
  for (int j = 0; j < nodes; ++j) {
    for (int m = 0; m < side; ++m) {
      twiddle[static_cast<std::size_t>(j) * side + m] =
          std::polar(1.0, kTwoPi * j * (m - radius) / nodes);
    }
  }
  // Transform one axis at a time; the array shape goes from side^dim to nodes^dim.
  std::vector<std::complex<double>> data(u.values().begin(), u.values().end());
  std::vector<int> shape(dim, side);
  for (int axis = 0; axis < dim; ++axis) {
    std::size_t outer = 1, inner = 1;
    for (int a = 0; a < axis; ++a) outer *= shape[a];
    for (int a = axis + 1; a < dim; ++a) inner *= shape[a];
    std::vector<std::complex<double>> next(outer * nodes * inner);
    for (std::size_t o = 0; o < outer; ++o) {
      for (int j = 0; j < nodes; ++j) {
        for (std::size_t i = 0; i < inner; ++i) {
          std::complex<double> acc = 0.0;
          for (int m = 0; m < side; ++m) {
            acc += twiddle[static_cast<std::size_t>(j) * side + m] *
                   data[(o * side + m) * inner + i];
          }
          next[(o * nodes + j) * inner + i] = acc;
        }
      }
    }
    data.swap(next);
    shape[axis] = nodes;
  }
  return data;
}

struct ParsevalReport {
  double norm_sq = 0.0;          // ||u||^2 from the sequence
  double grad_norm_sq = 0.0;     // ||grad u||^2 from the sequence
  double fourier_norm_sq = 0.0;  // (2pi)^-d int |a^|^2
  double fourier_grad_norm_sq = 0.0;  // (2pi)^-d int |a^|^2 4 sum sin^2(x_j/2)
};

inline int exact_nodes(const LatticeSeq& u) { return 2 * u.side() + 2; }

inline ParsevalReport parseval_bridge(const LatticeSeq& u) {
  const int nodes = exact_nodes(u);
  const auto a = fourier_samples(u, nodes);
  std::vector<double> w(nodes);
  for (int j = 0; j < nodes; ++j) {
    const double s = std::sin(kPi * j / nodes);
    w[j] = 4.0 * s * s;
  }
  double n2 = 0.0, g2 = 0.0;
  for (std::size_t f = 0; f < a.size(); ++f) {
    double weight = 0.0;
    std::size_t rest = f;
    for (int axis = 0; axis < u.dim(); ++axis) {
      weight += w[rest % nodes];
      rest /= nodes;
    }
    const double m = std::norm(a[f]);
    n2 += m;
    g2 += m * weight;
  }
  const double count = static_cast<double>(a.size());
  return {u.norm_sq(), grad_norm_sq(u), n2 / count, g2 / count};
}

/// Exponents of the non-limiting Sobolev inequality; p_prime = p / (p - 1),
/// p = infinity corresponds to p_prime = 1.
struct SobolevParams {
  int dim = 3;
  double p_prime = 1.0;

  static SobolevParams from_p(int dim, double p) {
    return {dim, std::isinf(p) ? 1.0 : p / (p - 1.0)};
  }
  double p() const { return p_prime == 1.0 ? INFINITY : p_prime / (p_prime - 1.0); }
};

inline void validate(const SobolevParams& s) {
  if (s.dim < 3 || s.dim > 5) {
    throw DomainError("sobolev: dimension " + std::to_string(s.dim) +
                      " not supported (3, 4 or 5)");
  }
  if (!(s.p_prime >= 1.0 && s.p_prime < 0.5 * s.dim)) {
    throw DomainError("sobolev: p' = " + std::to_string(s.p_prime) +
                      " must lie in [1, d/2) for the integral to converge");
  }
}

namespace detail {

// sin^2(r s / 2) / r^2, accurate when r underflows.
inline double scaled_sin_sq(double r, double s) {
  const double z = 0.5 * r * s;
  const double sinc = std::abs(z) < 1e-4 ? 1.0 - z * z / 6.0 : std::sin(z) / z;
  return 0.25 * s * s * sinc * sinc;
}

// Integrand of int_{[0,pi]^d} (sum sin^2(x_j/2))^-p' after folding onto the
// ordered simplex (x_1 = r, x_{k+1} = x_k s_k) and setting r = y^m with
// m = 1 / (d - 2p'), which turns the radial factor into the constant m.
inline double sobolev_folded(int dim, double p_prime, double y,
                             std::span<const double> s) {
  const double m = 1.0 / (dim - 2.0 * p_prime);
  const double r = std::pow(y, m);
  double sigma = 1.0, c = scaled_sin_sq(r, 1.0), jac = m;
  for (int k = 0; k < dim - 1; ++k) {
    sigma *= s[k];
    c += scaled_sin_sq(r, sigma);
    jac *= std::pow(s[k], dim - 2 - k);
  }
  return jac * std::pow(c, -p_prime);
}

inline double factorial(int m) { return m <= 1 ? 1.0 : m * factorial(m - 1); }

}  // namespace detail

/// int_{T^d} dx / (sum sin^2(x_j/2))^p' (before the 1/p' power).
inline double sobolev_integral(const SobolevParams& params, int gl_points = 32) {
  validate(params);
  const int dim = params.dim;
  const double m = 1.0 / (dim - 2.0 * params.p_prime);
  const double y_max = std::pow(kPi, 1.0 / m);
  const auto rule = numerics::gauss_legendre(gl_points);
  const int inner = dim - 1;
  std::vector<double> s(inner);
  auto at_y = [&](double y) {
    double total = 0.0;
    std::vector<int> idx(inner, 0);
    while (true) {
      double w = 1.0;
      for (int k = 0; k < inner; ++k) {
        s[k] = rule.nodes[idx[k]];
        w *= rule.weights[idx[k]];
      }
      total += w * detail::sobolev_folded(dim, params.p_prime, y, s);
      int k = 0;
      while (k < inner && ++idx[k] == gl_points) idx[k++] = 0;
      if (k == inner) break;
    }
    return total;
  };
  const double folded = numerics::gauss_kronrod(at_y, 0.0, y_max, 1e-15, 1e-12).value;
  return std::pow(2.0, dim) * detail::factorial(dim) * folded;
}

/// I_{p',d} = (int_{T^d} dx / (sum sin^2(x_j/2))^p')^(1/p').
inline double sobolev_I(const SobolevParams& params) {
  return std::pow(sobolev_integral(params), 1.0 / params.p_prime);
}

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Monte Carlo estimate of sobolev_integral in the folded coordinates, where
/// the sampled quantity is bounded.
inline MonteCarloEstimate sobolev_integral_monte_carlo(const SobolevParams& params,
                                                       std::int64_t samples,
                                                       std::uint64_t seed) {
  validate(params);
  const int dim = params.dim;
  const double m = 1.0 / (dim - 2.0 * params.p_prime);
  const double y_max = std::pow(kPi, 1.0 / m);
  const double scale = std::pow(2.0, dim) * detail::factorial(dim) * y_max;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> s(dim - 1);
  double sum = 0.0, sum_sq = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    const double y = y_max * (1.0 - unit(rng));
    for (auto& v : s) v = unit(rng);
    const double v = scale * detail::sobolev_folded(dim, params.p_prime, y, s);
    sum += v;
    sum_sq += v * v;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  return {mean, std::sqrt(std::max(0.0, sum_sq / n - mean * mean) / n)};
}

/// 1/4 (2 pi)^{d (p + 1) / p} I_{p',d}, the constant as stated with the
/// inequality ||u||^2_{l^2p} <= C ||grad u||^2.
inline double sobolev_constant(const SobolevParams& params) {
  const double exponent = params.dim * (2.0 - 1.0 / params.p_prime);
  return 0.25 * std::pow(kTwoPi, exponent) * sobolev_I(params);
}

/// 1/4 (2 pi)^{-d / p'} I_{p',d}: the same chain of estimates with the
/// Parseval normalization carried through. Tends to K_d(0) as p' -> 1.
inline double sobolev_constant_parseval(const SobolevParams& params) {
  return 0.25 * std::pow(kTwoPi, -params.dim / params.p_prime) * sobolev_I(params);
}

/// K_d(0) = (2pi)^-d int_{T^d} dx / (4 sum sin^2(x_j/2)), by direct torus
/// quadrature (no elliptic reduction).
inline double fourier_Kd0(int dim) {
  return sobolev_integral({dim, 1.0}) / (4.0 * std::pow(kTwoPi, dim));
}

/// Both ends of the Cauchy-Schwarz chain |a(0)|^2 <= K_d(0) ||grad a||^2,
/// each evaluated from the Fourier side; kd0 is the constant on the right.
inline Sides elementary_Kd0_proof_check(const LatticeSeq& u, double kd0) {
  if (u.dim() < 3) {
    throw DomainError("elementary_Kd0_proof_check: dimension must be >= 3");
  }
  const int nodes = exact_nodes(u);
  const auto a = fourier_samples(u, nodes);
  std::complex<double> mean = 0.0;
  for (const auto& v : a) mean += v;
  mean /= static_cast<double>(a.size());
  const ParsevalReport p = parseval_bridge(u);
  return {std::norm(mean), kd0 * p.fourier_grad_norm_sq};
}

}  // namespace lattice_interp::fourier
