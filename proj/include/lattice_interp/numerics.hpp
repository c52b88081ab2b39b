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

// Numerical building blocks shared by every closed-form module: adaptive
// Gauss-Kronrod and tanh-sinh quadrature, Gauss-Legendre rules, the periodic
// trapezoid rule, bracketed bisection and golden-section maximization.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <functional>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "lattice_interp/errors.hpp"

namespace lattice_interp::numerics {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

template <class F>
Segment kronrod15(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = h * kKronrodNodes[i];
    const double pair = f(c - dx) + f(c + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  return {a, b, kronrod * h, std::abs((kronrod - gauss) * h)};
}

}  // namespace detail

// Globally adaptive G7K15 quadrature: the segment with the largest error
// estimate is bisected until the summed estimate meets the tolerance.
template <class F>
QuadratureResult gauss_kronrod(F&& f, double a, double b,
                               double abs_tol = 1e-13, double rel_tol = 1e-13,
                               int max_segments = 4000) {
  if (a == b) return {};
  std::priority_queue<detail::Segment> queue;
  detail::Segment first = detail::kronrod15(f, a, b);
  double total = first.value;
  double error = first.error;
  queue.push(first);
  int segments = 1;
  while (error > std::max(abs_tol, rel_tol * std::abs(total)) &&
         segments < max_segments) {
    detail::Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    detail::Segment left = detail::kronrod15(f, worst.a, mid);
    detail::Segment right = detail::kronrod15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++segments;
  }
  // Recompute the sums from the queue to shed accumulated cancellation.
  double value = 0.0;
  double err = 0.0;
  while (!queue.empty()) {
    value += queue.top().value;
    err += queue.top().error;
    queue.pop();
  }
  return {value, err};
}

// Tanh-sinh (double exponential) quadrature on [a, b]. Integrable endpoint
// singularities of logarithmic or mild power type are handled without special
// treatment. When F accepts three doubles it is called as
// f(x, x - a, b - x) with both distances computed without cancellation, so the
// integrand can resolve singular factors exactly at the endpoints.
template <class F>
QuadratureResult tanh_sinh(F&& f, double a, double b, double rel_tol = 1e-13,
                           int max_level = 12) {
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  constexpr double kTMax = 4.0;
  const double half = 0.5 * (b - a);
  const double center = 0.5 * (a + b);

  auto eval = [&](double x, double da, double db) {
    if constexpr (std::invocable<F&, double, double, double>) {
      return f(x, da, db);
    } else {
      return f(x);
    }
  };
  // Contribution of the node pair at +-t (t > 0).
  auto pair_sum = [&](double t) {
    const double u = kHalfPi * std::sinh(t);
    const double cu = std::cosh(u);
    const double weight = half * kHalfPi * std::cosh(t) / (cu * cu);
    const double d = half / (std::exp(u) * cu);  // distance to the endpoint
    if (!(d > 0.0) || !(weight > 0.0)) return 0.0;
    const double right = eval(b - d, 2.0 * half - d, d);
    const double left = eval(a + d, d, 2.0 * half - d);
    return weight * (left + right);
  };

  double h = 1.0;
  double sum = half * kHalfPi * eval(center, half, half);
  for (double t = h; t <= kTMax; t += h) sum += pair_sum(t);
  double estimate = h * sum;
  double previous = estimate;
  double change = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    for (double t = h; t <= kTMax; t += 2.0 * h) sum += pair_sum(t);
    estimate = h * sum;
    change = std::abs(estimate - previous);
    if (level >= 4 && change <= rel_tol * std::abs(estimate)) break;
    previous = estimate;
  }
  return {estimate, change};
}

// Gauss-Legendre nodes and weights on [0, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline GaussLegendreRule gauss_legendre(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

// Trapezoid rule for a periodic integrand over one full period; exact for
// trigonometric polynomials of degree < n.
template <class F>
double periodic_trapezoid(F&& f, double start, double period, int n) {
  const double step = period / n;
  double sum = 0.0;
  for (int j = 0; j < n; ++j) sum += f(start + j * step);
  return sum * step;
}

// Bisection on a sign-changing bracket, run to floating-point resolution.
template <class F>
double bisect(F&& f, double lo, double hi, double x_tol = 0.0,
              int max_iter = 400) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw ConvergenceError("bisect: bracket [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "] does not change sign");
  }
  for (int it = 0; it < max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi || hi - lo <= x_tol) return mid;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct MaximumResult {
  double argmax = 0.0;
  double value = 0.0;
  bool interior = true;  // false when the best point sits on the bracket edge
};

// Maximizes a unimodal-on-the-bracket function: a coarse scan locates the
// best grid cell, golden-section search narrows it, and a secant step on the
// central-difference derivative polishes the abscissa.
template <class F>
MaximumResult maximize(F&& f, double lo, double hi, int scan_points = 96,
                       double x_tol = 1e-11) {
  std::vector<double> xs(scan_points + 1);
  std::vector<double> fs(scan_points + 1);
  int best = 0;
  for (int i = 0; i <= scan_points; ++i) {
    xs[i] = lo + (hi - lo) * i / scan_points;
    fs[i] = f(xs[i]);
    if (fs[i] > fs[best]) best = i;
  }
  if (best == 0 || best == scan_points) {
    return {xs[best], fs[best], false};
  }
  double a = xs[best - 1];
  double b = xs[best + 1];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > x_tol * std::max(1.0, std::abs(a) + std::abs(b))) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  double x = 0.5 * (a + b);
  double fx = f(x);

  // Secant iteration on f'(x) = 0 using central differences.
  const double lo_cell = xs[best - 1];
  const double hi_cell = xs[best + 1];
  const double step = 1e-4 * std::max(1.0, std::abs(x)) *
                      std::min(1.0, (hi_cell - lo_cell));
  auto deriv = [&](double t) { return (f(t + step) - f(t - step)) / (2 * step); };
  double x0 = x - 10 * step;
  double x1 = x + 10 * step;
  double g0 = deriv(x0);
  double g1 = deriv(x1);
  for (int it = 0; it < 20 && g1 != g0; ++it) {
    const double x2 = x1 - g1 * (x1 - x0) / (g1 - g0);
    if (!(x2 > lo_cell && x2 < hi_cell)) break;
    x0 = x1;
    g0 = g1;
    x1 = x2;
    g1 = deriv(x1);
    if (std::abs(x1 - x0) < 1e-15 * std::max(1.0, std::abs(x1))) break;
  }
  if (x1 > lo_cell && x1 < hi_cell) {
    const double f1 = f(x1);
    if (f1 >= fx - 1e-15 * std::abs(fx)) {
      x = x1;
      fx = f1;
    }
  }
  return {x, fx, true};
}

}  // namespace lattice_interp::numerics
