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

// Verification suites: each check records its measured discrepancy against a
// tolerance. Checks inside a suite run through parallel_map and draw their
// random inputs from a stream seeded by (seed, suite, check index), so the
// report is identical for any thread count.

#pragma once

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "lattice_interp/constants.hpp"
#include "lattice_interp/curves.hpp"
#include "lattice_interp/fourier_side.hpp"
#include "lattice_interp/green1d.hpp"
#include "lattice_interp/green2d.hpp"
#include "lattice_interp/greennd.hpp"
#include "lattice_interp/higher_order.hpp"
#include "lattice_interp/lattice.hpp"
#include "lattice_interp/lattice_oracle.hpp"
#include "lattice_interp/parallel.hpp"
#include "lattice_interp/specfun.hpp"
#include "lattice_interp/spectral.hpp"

namespace lattice_interp::verify {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct Options {
  std::uint64_t seed = kDefaultSeed;
  // Scales every reference constant by 0.97 so that the suites must fail.
  bool inject_fault = false;
};

struct Check {
  std::string suite;
  std::string name;
  std::string ref;
  double discrepancy = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct Report {
  std::vector<Check> checks;
  double seconds = 0.0;
  bool all_pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

namespace detail {

inline constexpr double kPi = std::numbers::pi;

struct Ctx {
  const Options& opts;
  std::mt19937_64 rng;
  double k(double v) const { return opts.inject_fault ? 0.97 * v : v; }
  double uniform(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(rng);
  }
  double normal() { return std::normal_distribution<double>()(rng); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); }
};

using Task = std::function<Check(Ctx&)>;

inline Check measured(std::string name, std::string ref, double discrepancy,
                      double tol, std::string note = "") {
  return {"", std::move(name), std::move(ref), discrepancy, tol,
          std::isfinite(discrepancy) && discrepancy <= tol, std::move(note)};
}

inline Check close_abs(std::string name, std::string ref, double got,
                       double want, double tol) {
  return measured(std::move(name), std::move(ref), std::abs(got - want), tol);
}

inline Check close_rel(std::string name, std::string ref, double got,
                       double want, double tol) {
  return measured(std::move(name), std::move(ref),
                  std::abs(got - want) / std::abs(want), tol);
}

// Worst relative excess (lhs - rhs) / rhs; the inequality holds when <= 0.
struct Excess {
  double worst = -INFINITY;
  void add(double lhs, double rhs) {
    worst = std::max(worst, rhs > 0.0 ? (lhs - rhs) / rhs
                                      : (lhs > 0.0 ? INFINITY : -1.0));
  }
};

inline Check holds(std::string name, std::string ref, const Excess& e) {
  return measured(std::move(name), std::move(ref), e.worst, 0.0,
                  "relative excess of lhs over rhs");
}

// Random finitely supported sequences of three kinds: iid on a sub-box,
// exponentially damped, and a sparse handful of sites.
inline LatticeSeq random_seq(Ctx& c, int dim, int radius) {
  LatticeSeq u(dim, radius);
  const int kind = c.integer(0, 2);
  const int support = c.integer(0, radius);
  const double damp = c.uniform(0.05, 1.5);
  for (std::size_t f = 0; f < u.size(); ++f) {
    const Index n = u.index_of(f);
    int l1 = 0, linf = 0;
    for (int a = 0; a < dim; ++a) {
      l1 += std::abs(n[a]);
      linf = std::max(linf, std::abs(n[a]));
    }
    if (kind == 0 && linf <= support) u[f] = c.normal();
    if (kind == 1) u[f] = c.normal() * std::exp(-damp * l1);
    if (kind == 2 && c.uniform(0.0, 1.0) < 0.05) u[f] = c.normal();
  }
  if (u.value_at({0, 0, 0}) == 0.0) u.at({0, 0, 0}) = c.normal();
  return u;
}

inline LatticeSeq from_function(int dim, int radius,
                                const std::function<double(const Index&)>& f) {
  LatticeSeq u(dim, radius);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = f(u.index_of(i));
  return u;
}

inline void add_noise(Ctx& c, LatticeSeq& u, double amplitude) {
  const double scale = amplitude * std::sqrt(u.norm_sq() / u.size());
  for (auto& v : u.values()) v += scale * c.normal();
}

// max over samples of ratio / K - 1 for the interpolation inequality.
template <class Gen>
Excess ratio_excess(Ctx& c, int samples, int order, double theta, double k,
                    Gen&& make) {
  Excess e;
  for (int i = 0; i < samples; ++i) {
    const LatticeSeq u = make(c, i);
    e.add(oracle::interpolation_ratio(u, order, theta), k);
  }
  return e;
}

inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

// ---------------------------------------------------------------- specfun
inline std::vector<Task> specfun_tasks() {
  std::vector<Task> t;
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double k = c.uniform(0.0, 1.0);
      const double kp = std::sqrt(1.0 - k * k);
      const double K = specfun::elliptic_K(k), E = specfun::elliptic_E(k);
      const double Kp = specfun::elliptic_K(kp), Ep = specfun::elliptic_E(kp);
      worst = std::max(worst, std::abs(E * Kp + Ep * K - K * Kp - kPi / 2 * c.k(1.0)));
    }
    return measured("legendre_relation", "E K' + E' K - K K' = pi/2", worst, 1e-10);
  });
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    for (double k : {0.2, 0.5, 0.8}) {
      const double h = 1e-5;
      const double fd = (specfun::elliptic_K(k + h) - specfun::elliptic_K(k - h)) / (2 * h);
      const double K = specfun::elliptic_K(k), E = specfun::elliptic_E(k);
      const double exact = c.k(E / (k * (1 - k * k)) - K / k);
      worst = std::max(worst, std::abs(fd - exact) / exact);
    }
    return measured("dK_dk", "dK/dk = E/(k(1-k^2)) - K/k", worst, 1e-6);
  });
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double lo = std::log(1e-8), hi = std::log(1.0 / std::numbers::e);
      const double z = -std::exp(lo + (hi - lo) * (i + 0.5) / 50.0);
      const double w = specfun::lambert_w_m1(z);
      worst = std::max(worst, std::abs(c.k(w) * std::exp(c.k(w)) - z) / std::abs(z));
    }
    return measured("lambert_w_m1_residual", "w e^w = z on the -1 branch", worst, 1e-12);
  });
  t.push_back([](Ctx& c) {
    return close_rel("gamma_half", "Gamma(1/2) = sqrt(pi)", c.k(specfun::gamma_fn(0.5)),
                     std::sqrt(kPi), 1e-13);
  });
  return t;
}

// --------------------------------------------------------- lattice oracle
inline std::vector<Task> lattice_oracle_tasks() {
  std::vector<Task> t;
  t.push_back([](Ctx& c) {
    double worst = INFINITY;
    for (int i = 0; i < 30; ++i) {
      const int dim = c.integer(1, 3);
      const int order = dim == 1 ? c.integer(1, 2) : 1;
      const double w = spectral_width(dim, order);
      const double lambda = c.integer(0, 1) ? std::exp(c.uniform(-3.0, 3.0))
                                            : -w - std::exp(c.uniform(-3.0, 3.0));
      const int radius = 12;
      worst = std::min(worst, oracle::smallest_eigenvalue({dim, order, lambda}, radius));
    }
    return measured("positive_definite", "smallest eigenvalue of A(lambda) > 0",
                    -c.k(worst), 0.0 - 1e-300, "minus the smallest eigenvalue seen");
  });
  t.push_back([](Ctx& c) {
    double worst = INFINITY;
    // small boxes keep the far corner values above the solver's round-off
    const int radii[4] = {0, 10, 6, 4};
    for (int dim = 1; dim <= 3; ++dim) {
      for (double lambda : {0.5, 2.0}) {
        const auto g = oracle::green_solve_dense({dim, 1, lambda}, radii[dim]);
        for (double v : g.values()) worst = std::min(worst, c.k(v));
      }
    }
    return measured("green_positive", "0 < G_lambda(n), lambda > 0", -worst, -1e-300,
                    "minus the smallest value");
  });
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    for (double lambda : {0.5, 2.0, 10.0}) {
      const auto a = oracle::green_solve({1, 1, lambda}, 60);
      const auto b = oracle::green_solve({1, 1, -4.0 - lambda}, 60);
      for (int n = -60; n <= 60; ++n) {
        const double sign = (std::abs(n) % 2 == 0) ? 1.0 : -1.0;
        worst = std::max(worst, std::abs(b.value_at({n, 0, 0}) -
                                         c.k(sign * a.value_at({n, 0, 0}))));
      }
    }
    return measured("sign_flip_symmetry", "G_{-4-lambda}(n) = (-1)^|n| G_lambda(n)",
                    worst, 1e-9);
  });
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    const int radii[4] = {0, 40, 30, 20};
    for (int dim = 1; dim <= 3; ++dim) {
      for (double lambda : {0.5, 2.0}) {
        const double a = oracle::green_solve({dim, 1, lambda}, radii[dim]).value_at({0, 0, 0});
        const double b = oracle::green_solve({dim, 1, lambda}, 2 * radii[dim]).value_at({0, 0, 0});
        worst = std::max(worst, std::abs(c.k(a) - b));
      }
    }
    return measured("truncation_convergence", "G(0) at N and 2N, lambda >= 0.5", worst, 1e-9);
  });
  t.push_back([](Ctx& c) {
    Excess e;
    for (double lambda : {0.5, 2.0}) {
      const double g0 = c.k(green1d::f1(lambda));
      for (int i = 0; i < 100; ++i) {
        const LatticeSeq u = random_seq(c, 1, 20);
        const LatticeSeq au = apply_A_lambda(u, {1, 1, lambda});
        double form = 0.0;
        for (std::size_t f = 0; f < au.size(); ++f) {
          form += au[f] * u.value_at(au.index_of(f));
        }
        const double u0 = u.value_at({0, 0, 0});
        e.add(u0 * u0, g0 * form);
      }
    }
    return holds("cauchy_schwarz_chain", "u(0)^2 <= G_lambda(0) (A(lambda) u, u)", e);
  });
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const int dim = c.integer(1, 3);
      const LatticeSeq u = random_seq(c, dim, 8);
      worst = std::max(worst, grad_norm_sq(u) / (4.0 * dim * c.k(u.norm_sq())) - 1.0);
    }
    return measured("difference_bounded", "||Du||^2 <= 4 dim ||u||^2", worst, 0.0);
  });
  return t;
}

// ---------------------------------------------------------------- green1d
inline std::vector<Task> green1d_tasks() {
  std::vector<Task> t;
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double lambda = std::exp(std::log(1e-6) + (std::log(1e3) - std::log(1e-6)) * (i + 1) / 50.0);
      const double f = green1d::f1(lambda);
      worst = std::max(worst, std::abs(c.k(f) - green1d::h1(lambda) - lambda * green1d::g1(lambda)) / f);
    }
    return measured("f_equals_h_plus_lambda_g", "f = h + lambda g", worst, 1e-12);
  });
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    for (double lambda : {0.1, 1.0, 10.0}) {
      const double h = 1e-5 * lambda;
      const double fd = -(green1d::f1(lambda + h) - green1d::f1(lambda - h)) / (2 * h);
      worst = std::max(worst, std::abs(fd - c.k(green1d::g1(lambda))) / fd);
    }
    return measured("g_is_minus_f_prime", "g(lambda) = -f'(lambda)", worst, 1e-6);
  });
  t.push_back([](Ctx& c) {
    Excess e;
    for (double theta : {0.5, 0.6, 0.75, 0.9, 1.0}) {
      const auto k = green1d::K1_theta(theta);
      const double lambda = k.lambda_star.value_or(0.0);
      e.worst = std::max(e.worst, ratio_excess(c, 100, 1, theta, c.k(k.constant), [&](Ctx& cc, int i) {
        if (i % 2 == 0 || lambda == 0.0) {
          LatticeSeq u = random_seq(cc, 1, 40);
          if (theta == 1.0 && i % 4 == 1) {
            u = LatticeSeq::delta(1, 40);
            add_noise(cc, u, 1e-2);
          }
          return u;
        }
        LatticeSeq u = from_function(1, 40, [&](const Index& n) { return green1d::green1d_n(lambda, n[0]); });
        add_noise(cc, u, cc.uniform(1e-3, 1e-1));
        return u;
      }).worst);
    }
    return holds("interpolation_inequality_1d", "u(0)^2 <= K1(theta) ||u||^2theta ||Du||^2(1-theta)", e);
  });
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    for (double theta : {0.6, 0.75, 0.9}) {
      const auto k = green1d::K1_theta(theta);
      const double lambda = *k.lambda_star;
      // tail q^N below 1e-10
      const double q = green1d::q1(lambda);
      const int radius = static_cast<int>(std::ceil(std::log(1e-12) / std::log(std::abs(q)))) + 5;
      const auto u = from_function(1, radius, [&](const Index& n) { return green1d::green1d_n(lambda, n[0]); });
      worst = std::max(worst, std::abs(oracle::interpolation_ratio(u, 1, theta) - c.k(k.constant)));
    }
    return measured("extremal_attains_K1", "ratio of G_lambda* vs K1(theta)", worst, 1e-7);
  });
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    for (double theta : {0.6, 0.75, 0.9}) {
      const auto r = oracle::max_interpolation_ratio(1, 1, theta, 60);
      worst = std::max(worst, std::abs(r.ratio - c.k(green1d::K1_theta(theta).constant)));
    }
    return measured("lattice_max_ratio_1d", "truncated-lattice maximum vs K1(theta), N=60", worst, 1e-6);
  });
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    for (double d : {0.5, 1.0, 2.0, 3.0, 3.5}) {
      const auto m = oracle::maximize_u0(1, 1, d, 60);
      worst = std::max(worst, std::abs(m.value - c.k(green1d::V1(d))));
    }
    return measured("V1_vs_oracle", "V(d) = sqrt(d(4-d))/2 vs constrained maximum", worst, 1e-7);
  });
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    for (int i = 0; i < 40; ++i) {
      const double d = c.uniform(1e-3, 4.0 - 1e-3);
      worst = std::max(worst, std::abs(c.k(green1d::V1(d)) - green1d::V1(4.0 - d)));
    }
    return measured("V1_symmetry", "V(d) = V(4 - d)", worst, 1e-12);
  });
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    for (int i = 0; i < 40; ++i) {
      const double d = c.uniform(1e-3, 4.0 - 1e-3);
      if (std::abs(d - 2.0) < 1e-9) continue;
      worst = std::max(worst, std::abs(green1d::d_of_lambda(green1d::lambda_of_d(d)) - c.k(d)));
    }
    return measured("d_lambda_round_trip_1d", "d(lambda(d)) = d", worst, 1e-10);
  });
  t.push_back([](Ctx& c) {
    return close_abs("K1_endpoints", "K1(1/2) = K1(1) = 1",
                     c.k(green1d::K1_theta(0.5).constant) + green1d::K1_theta(1.0).constant, 2.0, 0.0);
  });
  return t;
}

// ---------------------------------------------------------------- green2d
inline std::vector<Task> green2d_tasks() {
  std::vector<Task> t;
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double lambda = std::exp(c.uniform(-6.0, 6.0));
      const double d = c.uniform(0.01, 3.99);
      const double f = green2d::f2(lambda);
      worst = std::max(worst, std::abs(green2d::f2(-8.0 - lambda) - c.k(f)) / f);
      const double dl = green2d::d2_of_lambda(lambda);
      worst = std::max(worst, std::abs(green2d::d2_of_lambda(-8.0 - lambda) - (8.0 - dl)) / dl);
      const double v = green2d::V2(d);
      worst = std::max(worst, std::abs(green2d::V2(8.0 - d) - v) / v);
    }
    return measured("symmetry_2d", "f2(-8-l) = f2(l), d(-8-l) = 8 - d(l), V(8-d) = V(d)", worst, 1e-10);
  });
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    for (double lambda : {0.5, 4.0, 20.0}) {
      worst = std::max(worst, std::abs(green2d::f2_fourier(lambda) - c.k(green2d::f2(lambda))));
    }
    return measured("f2_vs_fourier_quadrature", "G(0,0) from the 2D Fourier integral", worst, 1e-8);
  });
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    for (double lambda : {1.0, 9.0}) {
      worst = std::max(worst, std::abs(green2d::f2_single_integral(lambda) - c.k(green2d::f2(lambda))));
    }
    return measured("f2_single_integral", "single-integral form of G(0,0)", worst, 1e-10);
  });
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    for (double lambda : {2.0, 4.0}) {
      const double g0 = oracle::green_solve({2, 1, lambda}, 60).value_at({0, 0, 0});
      worst = std::max(worst, std::abs(g0 - c.k(green2d::f2(lambda))));
    }
    return measured("f2_vs_lattice", "closed form vs truncated solve, N=60", worst, 1e-7);
  });
  t.push_back([](Ctx& c) {
    Excess e;
    for (double theta : {0.1, 0.3, 0.5, 0.9}) {
      const double k = c.k(green2d::K2_theta(theta).constant);
      e.worst = std::max(e.worst, ratio_excess(c, 100, 1, theta, k, [](Ctx& cc, int) {
        return random_seq(cc, 2, 10);
      }).worst);
    }
    return holds("interpolation_inequality_2d", "u(0,0)^2 <= K2(theta) ||u||^2theta ||grad u||^2(1-theta)", e);
  });
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    for (double theta : {0.3, 0.7}) {
      const auto k = green2d::K2_theta(theta);
      const auto g = oracle::green_solve({2, 1, *k.lambda_star}, 80);
      worst = std::max(worst, std::abs(oracle::interpolation_ratio(g, 1, theta) - c.k(k.constant)));
    }
    return measured("extremal_attains_K2", "ratio of G_lambda* vs K2(theta), N=80", worst, 1e-6);
  });
  t.push_back([](Ctx& c) {
    double worst = INFINITY, at4 = 0.0;
    for (int i = 1; i < 4000; ++i) {
      const double d = 8.0 * i / 4000.0;
      const double gap = c.k(green2d::V0_majorant(d)) - green2d::V2(d);
      if (i == 2000) {
        at4 = std::abs(gap);
      } else {
        worst = std::min(worst, gap);
      }
    }
    return measured("V0_majorizes_V", "V0(d) > V(d) for d != 4, equality at d = 4",
                    std::max(-worst, at4), 0.0, "min margin away from d = 4: " + fmt(worst));
  });
  t.push_back([](Ctx& c) {
    Excess e;
    const auto delta = LatticeSeq::delta(2, 2);
    const double sat = std::abs(c.k(green2d::log_inequality_rhs(1.0, grad_norm_sq(delta))) - 1.0);
    for (int i = 0; i < 200; ++i) {
      LatticeSeq u = random_seq(c, 2, 30);
      const double u0 = u.value_at({0, 0, 0});
      const double d = grad_norm_sq(u) / u.norm_sq();
      if (d <= 0.0 || d >= 8.0) continue;
      e.add(u0 * u0, c.k(green2d::log_inequality_rhs(u.norm_sq(), grad_norm_sq(u))));
    }
    return measured("log_inequality", "u(0,0)^2 <= ||u||^2 V0(||grad u||^2/||u||^2), equality at delta",
                    std::max(e.worst, sat), 0.0);
  });
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    for (int i = 0; i < 30; ++i) {
      const double d = c.uniform(1e-3, 8.0 - 1e-3);
      if (std::abs(d - 4.0) < 1e-6) continue;
      worst = std::max(worst, std::abs(green2d::d2_of_lambda(green2d::lambda2_of_d(d)) - c.k(d)));
    }
    return measured("d_lambda_round_trip_2d", "d(lambda(d)) = d", worst, 1e-10);
  });
  t.push_back([](Ctx& c) {
    const double a = std::abs(c.k(green2d::K2_theta(0.01).constant) - 3.205);
    const double b = std::abs(green2d::K2_small_theta(0.01) - 3.096);
    return measured("K2_small_theta", "K2(0.01) = 3.205, asymptotic surrogate 3.096", std::max(a, b), 2e-3);
  });
  return t;
}

// ---------------------------------------------------------------- greennd
inline std::vector<Task> greennd_tasks() {
  std::vector<Task> t;
  t.push_back([](Ctx& c) {
    Excess e;
    const double k = c.k(greennd::Kd0(3));
    for (int i = 0; i < 100; ++i) {
      const LatticeSeq u = random_seq(c, 3, 20);
      const double u0 = u.value_at({0, 0, 0});
      e.add(u0 * u0, k * grad_norm_sq(u));
    }
    return holds("sobolev_3d", "u(0)^2 <= K3(0) ||grad u||^2", e);
  });
  t.push_back([](Ctx& c) {
    double worst = -INFINITY;
    double prev = c.k(greennd::f3(0.0));
    for (int i = 1; i < 50; ++i) {
      const double lambda = std::exp(-8.0 + 14.0 * i / 49.0);
      const double f = greennd::f3(lambda);
      worst = std::max(worst, f - prev);
      prev = f;
    }
    return measured("f3_decreasing", "f3 strictly decreasing", worst, -1e-300, "largest increment");
  });
  t.push_back([](Ctx& c) {
    const double a = c.k(greennd::Kd0(3)), b = greennd::K3_watson(), f = fourier::fourier_Kd0(3);
    return measured("K3_three_ways", "elliptic reduction, Gamma product, torus quadrature",
                    std::max({std::abs(a - b), std::abs(a - f), std::abs(b - f)}), 1e-6);
  });
  t.push_back([](Ctx& c) {
    return close_rel("K3_small_theta_continuity", "K3(0.001) -> K3(0)",
                     c.k(greennd::K3_theta(0.001).constant), greennd::Kd0(3), 1e-2);
  });
  t.push_back([](Ctx& c) {
    const auto mc = greennd::Kd0_monte_carlo(4, 1000000, c.rng());
    return measured("K4_monte_carlo", "K4(0) quadrature vs Monte Carlo (standard errors)",
                    std::abs(c.k(greennd::Kd0(4)) - mc.mean) / mc.std_error, 3.0);
  });
  t.push_back([](Ctx& c) {
    return close_rel("grad_green0", "||grad G_0||^2 = K3(0)", c.k(greennd::grad_green0_norm_sq(3)),
                     greennd::Kd0(3), 1e-9);
  });
  return t;
}

// ----------------------------------------------------------- higher order
inline std::vector<Task> higher_order_tasks() {
  std::vector<Task> t;
  t.push_back([](Ctx& c) {
    const double lambda = 16.0 / 3.0;
    const auto q = higher_order::characteristic_roots(lambda);
    double worst = std::abs(q[0] * q[1] - c.k(1.0));
    worst = std::max(worst, std::abs(q[2] - std::conj(q[1])));
    worst = std::max(worst, std::abs(q[3] - std::conj(q[0])));
    for (const auto& r : q) {
      const auto s = std::sqrt(r) - 1.0 / std::sqrt(r);
      worst = std::max(worst, std::abs(s * s * s * s + lambda) / lambda);
    }
    return measured("characteristic_roots", "q1 q2 = 1, conjugate pairs, (q^1/2 - q^-1/2)^4 = -lambda", worst, 1e-10);
  });
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    for (int n : {2, 3}) {
      const double theta = 1.0 - 1.0 / (2.0 * n);
      const double lambda = 1e-6;
      const double integral = numerics::gauss_kronrod([&](double x) {
        return 1.0 / (lambda + std::pow(4.0, n) * std::pow(std::sin(0.5 * x), 2 * n));
      }, 0.0, kPi, 1e-15, 1e-13).value;
      worst = std::max(worst, std::abs(std::pow(lambda, theta) * integral - c.k(higher_order::S_zero_closed(n))) /
                                  higher_order::S_zero_closed(n));
    }
    return measured("K1n_limit", "lambda^theta* int -> pi / (2n sin(pi/2n))", worst, 1e-3);
  });
  t.push_back([](Ctx& c) {
    const double up = higher_order::S_mu(2, 1e-3) - c.k(higher_order::S_mu(2, 0.0));
    const double down = c.k(higher_order::S_mu(1, 0.0)) - higher_order::S_mu(1, 1e-3);
    return measured("S_slope_at_zero", "S increasing at 0 for n = 2, decreasing for n = 1",
                    -std::min(up, down), -1e-300);
  });
  t.push_back([](Ctx& c) {
    Excess e;
    for (double theta : {0.75, 0.85, 1.0}) {
      const auto k = higher_order::K12_theta(theta);
      const double lambda = k.lambda_star.value_or(0.0);
      e.worst = std::max(e.worst, ratio_excess(c, 100, 2, theta, c.k(k.constant), [&](Ctx& cc, int i) {
        if (i % 2 == 0 || lambda == 0.0) return random_seq(cc, 1, 40);
        LatticeSeq u = from_function(1, 40, [&](const Index& n) { return higher_order::green12_n(lambda, n[0]); });
        add_noise(cc, u, cc.uniform(1e-3, 1e-1));
        return u;
      }).worst);
    }
    return holds("interpolation_inequality_order2", "u(0)^2 <= K12(theta) ||u||^2theta ||Delta u||^2(1-theta)", e);
  });
  t.push_back([](Ctx& c) {
    const double lambda = 16.0 / 3.0;
    double worst = 0.0;
    const double st[5] = {1.0, -4.0, 6.0, -4.0, 1.0};
    for (int n = -20; n <= 20; ++n) {
      double r = lambda * c.k(higher_order::green12_n(lambda, n)) - (n == 0 ? 1.0 : 0.0);
      for (int j = -2; j <= 2; ++j) r += st[j + 2] * higher_order::green12_n(lambda, n + j);
      worst = std::max(worst, std::abs(r));
    }
    return measured("green12_recurrence", "Delta^2 G + lambda G = delta, |n| <= 20", worst, 1e-10);
  });
  t.push_back([](Ctx& c) {
    double worst = std::abs(c.k(higher_order::K12_theta(0.75).constant) - std::sqrt(2.0) / 2.0);
    worst = std::max(worst, std::abs(higher_order::lambda_star_12(0.75) - 16.0 / 3.0));
    return measured("K12_three_quarters", "K12(3/4) = sqrt(2)/2, lambda*(3/4) = 16/3", worst, 1e-14);
  });
  t.push_back([](Ctx& c) {
    const double k = c.k(higher_order::K12_theta(0.85).constant);
    const double lambda = higher_order::lambda_star_12(0.85);
    const auto u = from_function(1, 80, [&](const Index& n) { return higher_order::green12_n(lambda, n[0]); });
    return close_abs("extremal_attains_K12", "ratio of G_lambda* vs K12(0.85), N=80",
                     oracle::interpolation_ratio(u, 2, 0.85), k, 1e-6);
  });
  t.push_back([](Ctx& c) {
    return close_abs("V12_vs_oracle", "V(3) order 2 vs constrained maximum, N=80",
                     oracle::maximize_u0(1, 2, 3.0, 80).value, c.k(higher_order::V12(3.0)), 1e-6);
  });
  t.push_back([](Ctx& c) {
    double worst = -INFINITY;
    for (int n : {2, 3, 4}) {
      const double theta = 1.0 - 1.0 / (2.0 * n);
      worst = std::max(worst, higher_order::taikov_C1n(n) - c.k(higher_order::K1n_theta(n, theta).constant));
    }
    return measured("K1n_exceeds_C1n", "K_{1,n}(theta*) > C_{1,n}(theta*), n = 2..4", worst, -1e-300);
  });
  t.push_back([](Ctx& c) {
    double worst = std::abs(c.k(higher_order::periodic_C11(0.0)) - kPi / 6.0);
    worst = std::max(worst, std::abs(higher_order::periodic_C11(0.5) - 1.0));
    double series = 0.0;
    for (long k = 1000000; k >= 1; --k) series += 1.0 / (double(k) * k + 1.0);
    worst = std::max(worst, std::abs(higher_order::periodic_G(1.0) - series / kPi) - 1.0 / (kPi * 1e6));
    return measured("periodic_C11", "C11per(0) = pi/6, C11per(1/2) = 1, coth form vs series", worst, 1e-6);
  });
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    for (double lambda : {16.0 / 3.0, 1.0, 50.0, -17.0, -40.0}) {
      worst = std::max(worst, std::abs(higher_order::f12_quadrature(lambda) - c.k(higher_order::f12(lambda))) /
                                  std::abs(higher_order::f12(lambda)));
    }
    return measured("f12_vs_quadrature", "closed form vs (1/2pi) int dx/(lambda + 16 sin^4)", worst, 1e-10);
  });
  return t;
}

// --------------------------------------------------------- fourier side
inline double trig_poly(const std::vector<double>& u, double x) {
  const int r = static_cast<int>(u.size() / 2);
  double s = u[r];
  for (int n = 1; n <= r; ++n) s += 2.0 * u[r + n] * std::cos(n * x);
  return s;
}

inline std::vector<Task> fourier_tasks() {
  std::vector<Task> t;
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    auto gap = [](const fourier::Sides& s) { return std::abs(s.lhs - s.rhs) / s.rhs; };
    const double ls = (4.0 * 0.75 - 2.0) / (1.0 - 0.75);
    worst = std::max(worst, gap(fourier::carlson_lhs_rhs(fourier::g_lambda(ls), 0.75, 1)));
    worst = std::max(worst, gap(fourier::carlson_lhs_rhs([](double) { return 1.0; }, 1.0, 1)));
    worst = std::max(worst, gap(fourier::carlson_lhs_rhs(fourier::g_lambda_order2(16.0 / 3.0), 0.75, 2)));
    worst = std::max(worst, gap(fourier::carlson_refined(fourier::g_lambda(green1d::lambda_of_d(1.0)))));
    worst = std::max(worst, gap(fourier::carlson_refined([](double) { return 1.0; })));
    return measured("carlson_saturation", "equality for the saturating g_lambda families",
                    std::abs(c.k(1.0 + worst) - 1.0), 1e-8);
  });
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    bool verdicts = true;
    for (int i = 0; i < 20; ++i) {
      const int degree = c.integer(1, 15);
      const double theta = c.uniform(0.5, 1.0);
      std::vector<double> u(2 * degree + 1);
      for (int n = 0; n <= degree; ++n) u[degree + n] = u[degree - n] = c.normal();
      const auto s = fourier::carlson_lhs_rhs([&](double x) { return trig_poly(u, x); }, theta, 1);
      LatticeSeq seq(1, degree);
      for (int n = -degree; n <= degree; ++n) seq.at({n, 0, 0}) = u[degree + n];
      const double k = c.k(green1d::K1_theta(theta).constant);
      const double disc_lhs = u[degree] * u[degree];
      const double disc_rhs = k * std::pow(seq.norm_sq(), theta) * std::pow(grad_norm_sq(seq), 1.0 - theta);
      const double scale = 4.0 * kPi * kPi;
      worst = std::max(worst, std::abs(s.rhs / scale - disc_rhs) / disc_rhs);
      worst = std::max(worst, std::abs(s.lhs / scale - disc_lhs) / std::max(disc_lhs, 1e-300));
      verdicts = verdicts && ((s.lhs <= s.rhs) == (disc_lhs <= disc_rhs)) && disc_lhs <= disc_rhs;
    }
    return measured("discrete_integral_equivalence", "Carlson integral form vs coefficient inequality",
                    verdicts ? worst : INFINITY, 1e-9);
  });
  t.push_back([](Ctx& c) {
    Excess e;
    for (double theta : {0.3, 0.7}) {
      const double k = c.k(green2d::K2_theta(theta).constant);
      for (int i = 0; i < 20; ++i) {
        const int deg = c.integer(1, 6);
        std::vector<double> a((2 * deg + 1) * (2 * deg + 1));
        for (auto& v : a) v = c.normal();
        auto g = [&](double x, double y) {
          double s = 0.0;
          for (int m = -deg; m <= deg; ++m) {
            for (int n = -deg; n <= deg; ++n) {
              s += a[(m + deg) * (2 * deg + 1) + n + deg] * std::cos(m * x + n * y);
            }
          }
          return s;
        };
        const auto s = fourier::carlson_2d(g, theta, k, 4 * deg + 4);
        e.add(s.lhs, s.rhs);
      }
    }
    return holds("carlson_2d", "(int g)^2 <= (2pi)^2 K2 (int g^2)^theta (int 4 sum sin^2 g^2)^(1-theta)", e);
  });
  t.push_back([](Ctx& c) {
    Excess e;
    for (int i = 0; i < 50; ++i) {
      const double s = c.uniform(1.5, 4.0);
      std::vector<double> a(c.integer(5, 400));
      for (std::size_t k = 0; k < a.size(); ++k) a[k] = c.uniform(0.0, 1.0) / std::pow(k + 1.0, s);
      const auto r = fourier::carlson_original(a);
      e.add(r.lhs, c.k(r.rhs));
    }
    return holds("carlson_original", "(sum a)^2 <= pi sqrt(sum a^2 sum k^2 a^2)", e);
  });
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const int dim = c.integer(1, 3);
      const auto u = random_seq(c, dim, dim == 3 ? 4 : 10);
      const auto p = fourier::parseval_bridge(u);
      worst = std::max({worst, std::abs(c.k(p.norm_sq) - p.fourier_norm_sq) / p.norm_sq,
                        std::abs(p.grad_norm_sq - p.fourier_grad_norm_sq) / p.grad_norm_sq});
    }
    return measured("parseval_bridge", "sequence norms vs trigonometric quadrature", worst, 1e-12);
  });
  t.push_back([](Ctx& c) {
    Excess e;
    const fourier::SobolevParams params = fourier::SobolevParams::from_p(3, 4.0);
    const double k = c.k(fourier::sobolev_constant(params));
    for (int i = 0; i < 100; ++i) {
      const auto u = random_seq(c, 3, 12);
      double s = 0.0;
      for (double v : u.values()) s += std::pow(v, 8.0);
      e.add(std::pow(s, 0.25), k * grad_norm_sq(u));
    }
    return holds("discrete_sobolev", "||u||_8^2 <= C ||grad u||^2, d = 3, p = 4", e);
  });
  t.push_back([](Ctx& c) {
    Excess e;
    const double k = c.k(greennd::Kd0(3));
    for (int i = 0; i < 10; ++i) {
      const auto s = fourier::elementary_Kd0_proof_check(random_seq(c, 3, 4), k);
      e.add(s.lhs, s.rhs);
    }
    return holds("elementary_K3_chain", "|a(0)|^2 <= K3(0) ||grad a||^2 from the Fourier side", e);
  });
  t.push_back([](Ctx& c) {
    const double i1 = fourier::sobolev_I({3, 1.0});
    return close_rel("sobolev_I_at_one", "I_{1,3} = (2pi)^3 4 K3(0)", c.k(i1),
                     std::pow(2.0 * kPi, 3) * 4.0 * greennd::Kd0(3), 1e-5);
  });
  return t;
}

// ---------------------------------------------------------------- spectral
struct LtCase {
  int dim, order;
  double theta;
  int support, radius;
  double vmax;
};

inline LatticeSeq random_potential(Ctx& c, int dim, int support, double vmax) {
  LatticeSeq v(dim, support);
  const double scale = c.uniform(0.1, 1.0) * vmax;
  for (auto& x : v.values()) x = c.uniform(0.0, 1.0) < 0.8 ? scale * c.uniform(0.0, 1.0) : 0.0;
  v.at({0, 0, 0}) = std::max(v.value_at({0, 0, 0}), 0.1 * scale);
  return v;
}

inline std::vector<Task> spectral_tasks() {
  std::vector<Task> t;
  t.push_back([](Ctx& c) {
    const std::pair<double, double> want[3] = {
        {spectral::lieb_thirring_constant(1, 1, 0.5), 2.0 / (3.0 * std::sqrt(3.0))},
        {spectral::lieb_thirring_constant(1, 2, 0.75), 2.0 * std::sqrt(2.0) / std::pow(5.0, 1.25)},
        {spectral::lieb_thirring_constant(3, 1, 0.0), 0.0631}};
    double worst = 0.0;
    for (int i = 0; i < 2; ++i) worst = std::max(worst, std::abs(c.k(want[i].first) - want[i].second));
    worst = std::max(worst, std::abs(c.k(want[2].first) - want[2].second) > 1e-4 ? 1.0 : 0.0);
    return measured("lieb_thirring_constants", "2/(3 sqrt3), 2 sqrt2/5^(5/4), K3(0)/4 = 0.0631", worst, 1e-15);
  });
  const LtCase cases[4] = {{1, 1, 0.5, 3, 60, 10.0},
                           {1, 2, 0.75, 3, 60, 20.0},
                           {2, 1, 0.5, 2, 12, 10.0},
                           {3, 1, 0.0, 1, 8, 12.0}};
  for (const auto& lc : cases) {
    t.push_back([lc](Ctx& c) {
      double worst_ratio = 0.0, worst_rayleigh = 0.0;
      for (int i = 0; i < 50; ++i) {
        spectral::SchrodingerSpec s{lc.dim, lc.order,
                                    random_potential(c, lc.dim, c.integer(0, lc.support), lc.vmax),
                                    lc.radius};
        auto r = spectral::lieb_thirring_check(s, lc.theta);
        worst_ratio = std::max(worst_ratio, r.trace / c.k(r.bound));
        worst_rayleigh = std::max(worst_rayleigh, std::abs(r.rayleigh_residual));
      }
      const std::string tag = "(" + std::to_string(lc.dim) + "," + std::to_string(lc.order) + "," + fmt(lc.theta) + ")";
      Check ch = measured("lieb_thirring_ratio" + tag, "sum |lambda_j| <= bound, 50 random potentials",
                          worst_ratio, 1.0, "largest trace/bound");
      if (worst_rayleigh > 1e-8) {
        ch.pass = false;
        ch.note += "; Rayleigh identity residual " + fmt(worst_rayleigh);
      }
      return ch;
    });
  }
  t.push_back([](Ctx& c) {
    double worst = -INFINITY;
    for (int i = 0; i < 10; ++i) {
      const int dim = c.integer(1, 2);
      spectral::SchrodingerSpec s{dim, 1, random_potential(c, dim, 2, 4.0), dim == 1 ? 40 : 10};
      const auto a = spectral::lieb_thirring_check(s, 0.5).trace;
      for (auto& v : s.potential.values()) v *= 2.0;
      const auto b = spectral::lieb_thirring_check(s, 0.5).trace;
      worst = std::max(worst, c.k(a) - b);
    }
    return measured("trace_monotone", "V -> 2V never decreases the negative trace", worst, 0.0);
  });
  // Radius doubling: 1D at N = 100 -> 200 for both orders; 3D single-site
  // wells at N = 6 -> 12, whose bound states are deep enough to decay
  // within the smaller box.
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    std::string note;
    for (int order : {1, 2}) {
      for (int i = 0; i < 20; ++i) {
        spectral::SchrodingerSpec s{1, order, random_potential(c, 1, c.integer(0, 3), order == 1 ? 10.0 : 20.0), 100};
        const auto a = spectral::negative_spectrum(s).values;
        s.radius = 200;
        const auto b = spectral::negative_spectrum(s).values;
        for (std::size_t j = 0; j < std::min(a.size(), b.size()); ++j) {
          worst = std::max(worst, std::abs(c.k(a[j]) - b[j]));
        }
        if (a.size() != b.size()) note = "count changed under doubling";
      }
    }
    for (int i = 0; i < 5; ++i) {
      LatticeSeq v(3, 0);
      v.at({0, 0, 0}) = c.uniform(8.0, 14.0);
      spectral::SchrodingerSpec s{3, 1, v, 6};
      const auto a = spectral::negative_spectrum(s).values;
      s.radius = 12;
      const auto b = spectral::negative_spectrum(s).values;
      for (std::size_t j = 0; j < std::min(a.size(), b.size()); ++j) {
        worst = std::max(worst, std::abs(c.k(a[j]) - b[j]));
      }
      if (a.size() != b.size()) note = "count changed under doubling";
    }
    Check ch = measured("truncation_stability", "eigenvalues under radius doubling", worst, 1e-8, note);
    if (!note.empty()) ch.pass = false;
    return ch;
  });
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
      const int n = c.integer(1, 5);
      Eigen::MatrixXd m(41, n);
      for (int a = 0; a < 41; ++a) for (int b = 0; b < n; ++b) m(a, b) = c.normal();
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
      const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(41, n);
      spectral::OrthonormalFamily fam;
      for (int b = 0; b < n; ++b) {
        LatticeSeq u(1, 20);
        for (int a = 0; a < 41; ++a) u[a] = q(a, b);
        fam.push_back(u);
      }
      double total = 0.0;
      const LatticeSeq rho = spectral::density(fam);
      for (double r : rho.values()) total += r;
      worst = std::max(worst, std::abs(c.k(total) - n));
      const auto s = spectral::orth_family_check(fam, 0.5, 1);
      if (s.lhs > c.k(s.rhs)) worst = INFINITY;
    }
    return measured("orthonormal_family", "sum rho = N and the density inequality", worst, 1e-12);
  });
  return t;
}

// ------------------------------------------------------------------ curves
inline std::vector<Task> curves_tasks() {
  std::vector<Task> t;
  t.push_back([](Ctx& c) {
    double worst = 0.0;
    auto endpoint = [&](const std::string& name, std::vector<double> grid, double want) {
      worst = std::max(worst, std::abs(c.k(curves::sample_curve(name, grid).rows.front()[1]) - want));
    };
    endpoint("k1_theta", {0.5}, 1.0);
    endpoint("k1_theta", {1.0}, 1.0);
    endpoint("c11_per", {0.0}, kPi / 6.0);
    endpoint("c11_per", {0.5}, 1.0);
    endpoint("k2_theta", {1.0}, 1.0);
    endpoint("v_d_1d", {2.0}, 1.0);
    endpoint("k3_theta", {0.0}, greennd::Kd0(3));
    endpoint("k3_theta", {1.0}, 1.0);
    endpoint("k12_theta", {0.75}, std::sqrt(2.0) / 2.0);
    endpoint("k12_theta", {1.0}, 1.0);
    endpoint("g_16_3", {0.0}, higher_order::green12_n(16.0 / 3.0, 0));
    endpoint("v_d_order2", {6.0}, 1.0);
    endpoint("v0_vs_v_2d", {4.0}, 1.0);
    return measured("curve_endpoints", "curve endpoints equal the module values", worst, 0.0);
  });
  t.push_back([](Ctx& c) {
    double worst = INFINITY;
    for (const auto& row : curves::sample_curve("v0_vs_v_2d").rows) worst = std::min(worst, c.k(row[1]) - row[2]);
    return measured("v0_margin_curve", "V0 - V >= 0 at every emitted point", -worst, 0.0);
  });
  return t;
}

inline std::vector<Task> tasks_for(const std::string& suite);

inline std::uint32_t fnv1a(const std::string& s) {
  std::uint32_t h = 2166136261u;
  for (unsigned char ch : s) h = (h ^ ch) * 16777619u;
  return h;
}

}  // namespace detail

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "specfun", "lattice_oracle", "green1d", "green2d", "greennd",
      "higher_order", "fourier", "spectral", "curves"};
  return names;
}

inline std::vector<detail::Task> detail::tasks_for(const std::string& suite) {
  if (suite == "specfun") return specfun_tasks();
  if (suite == "lattice_oracle") return lattice_oracle_tasks();
  if (suite == "green1d") return green1d_tasks();
  if (suite == "green2d") return green2d_tasks();
  if (suite == "greennd") return greennd_tasks();
  if (suite == "higher_order") return higher_order_tasks();
  if (suite == "fourier") return fourier_tasks();
  if (suite == "spectral") return spectral_tasks();
  if (suite == "curves") return curves_tasks();
  throw DomainError("unknown suite '" + suite + "'");
}

inline Report run_suite(const std::string& suite, const Options& opts = {}) {
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = suite_names();
  } else {
    detail::tasks_for(suite);  // validates the name
    suites = {suite};
  }
  const auto start = std::chrono::steady_clock::now();
  struct Job {
    std::string suite;
    std::size_t index;
    detail::Task task;
  };
  std::vector<Job> jobs;
  for (const auto& s : suites) {
    auto tasks = detail::tasks_for(s);
    for (std::size_t i = 0; i < tasks.size(); ++i) jobs.push_back({s, i, tasks[i]});
  }
  Report report;
  report.checks = parallel_map(jobs.size(), [&](std::size_t j) {
    const Job& job = jobs[j];
    std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                      detail::fnv1a(job.suite),
                      static_cast<std::uint32_t>(job.index)};
    detail::Ctx ctx{opts, std::mt19937_64(seq)};
    Check c;
    try {
      c = job.task(ctx);
    } catch (const std::exception& e) {
      c = detail::measured("check_" + std::to_string(job.index), "", INFINITY, 0.0,
                           std::string("exception: ") + e.what());
    }
    c.suite = job.suite;
    return c;
  });
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace lattice_interp::verify
