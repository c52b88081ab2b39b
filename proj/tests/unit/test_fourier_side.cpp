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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "lattice_interp/fourier_side.hpp"
#include "lattice_interp/green1d.hpp"
#include "lattice_interp/green2d.hpp"
#include "lattice_interp/greennd.hpp"
#include "lattice_interp/lattice_oracle.hpp"
#include "support.hpp"

namespace li = lattice_interp;
namespace fs = lattice_interp::fourier;

constexpr double kPi = std::numbers::pi;

namespace {

// a^(x) for coefficients c[k] = u(k - offset); real when u is even.
double trig(const std::vector<double>& c, int offset, double x) {
  double s = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * std::cos((static_cast<int>(k) - offset) * x);
  return s;
}

}  // namespace

TEST(Carlson, SaturatesAtGLambda) {
  const double theta = 0.75;
  const double ls = (4 * theta - 2) / (1 - theta);
  const auto s = fs::carlson_lhs_rhs(fs::g_lambda(ls), theta, 1);
  EXPECT_NEAR(s.lhs / s.rhs, 1.0, 1e-8);
}

TEST(Carlson, SaturatesAtConstantsForThetaOne) {
  const auto s = fs::carlson_lhs_rhs([](double) { return 1.0; }, 1.0, 1);
  EXPECT_NEAR(s.lhs / s.rhs, 1.0, 1e-12);
}

TEST(Carlson, SecondOrderSaturates) {
  const auto s = fs::carlson_lhs_rhs(fs::g_lambda_order2(16.0 / 3.0), 0.75, 2);
  EXPECT_NEAR(s.lhs / s.rhs, 1.0, 1e-8);
}

TEST(Carlson, InadmissibleTheta) {
  EXPECT_THROW(fs::carlson_lhs_rhs(fs::g_lambda(1.0), 0.4, 1), li::DomainError);
  EXPECT_THROW(fs::carlson_lhs_rhs(fs::g_lambda(1.0), 0.7, 2), li::DomainError);
}

TEST(CarlsonRefined, Cases) {
  const auto sat = fs::carlson_refined(fs::g_lambda(2.0));
  EXPECT_NEAR(sat.lhs / sat.rhs, 1.0, 1e-8);
  const auto c = fs::carlson_refined([](double) { return 1.0; });
  EXPECT_NEAR(c.lhs / c.rhs, 1.0, 1e-12);
  const auto strict = fs::carlson_refined([](double x) { return 1.0 + std::cos(x); });
  EXPECT_LT(strict.lhs, strict.rhs * (1 - 1e-6));
  EXPECT_THROW(fs::carlson_refined([](double) { return 0.0; }), li::DomainError);
}

TEST(Carlson, EquivalentToDiscreteForm) {
  // The integral form on a^(x) and the discrete form on the coefficients use the
  // same constant; both right-hand sides must agree up to the 2 pi scaling.
  std::mt19937_64 rng(8);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 20; ++trial) {
    const int radius = 1 + trial % 15;
    li::LatticeSeq u(1, radius);
    for (auto& v : u.values()) v = normal(rng);
    // symmetrize so that a^ is real
    for (int n = 1; n <= radius; ++n) u.at({-n, 0, 0}) = u.at({n, 0, 0});
    std::vector<double> c(u.values().begin(), u.values().end());
    const double theta = 0.5 + 0.5 * (trial + 0.5) / 20.0;
    const auto integral = fs::carlson_lhs_rhs([&](double x) { return trig(c, radius, x); }, theta, 1);
    const double k = li::green1d::K1_theta(theta).constant;
    const double u0 = u.value_at({0, 0, 0});
    const double discrete_lhs = u0 * u0;
    const double discrete_rhs = k * std::pow(u.norm_sq(), theta) * std::pow(li::grad_norm_sq(u), 1 - theta);
    const double scale = 4 * kPi * kPi;
    EXPECT_NEAR(integral.rhs / (scale * discrete_rhs), 1.0, 1e-9);
    EXPECT_NEAR(integral.lhs / scale, discrete_lhs, 1e-9 * (1 + discrete_lhs));
    EXPECT_EQ(integral.lhs <= integral.rhs, discrete_lhs <= discrete_rhs);
  }
}

TEST(Carlson, TwoDimensional) {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> normal;
  for (double theta : {0.3, 0.7}) {
    const double k2 = li::green2d::K2_theta(theta).constant;
    for (int trial = 0; trial < 20; ++trial) {
      double c[5][5];
      for (auto& row : c)
        for (auto& v : row) v = normal(rng);
      auto g = [&](double x, double y) {
        double s = 0.0;
        for (int a = 0; a < 5; ++a)
          for (int b = 0; b < 5; ++b) s += c[a][b] * std::cos((a - 2) * x + (b - 2) * y);
        return s;
      };
      const auto s = fs::carlson_2d(g, theta, k2, 32);
      EXPECT_LE(s.lhs, s.rhs);
    }
  }
}

TEST(Carlson, OriginalForm) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> r(0.1, 1.0);
  std::uniform_real_distribution<double> sdist(1.6, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double s = sdist(rng);
    std::vector<double> a(2000);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = r(rng) / std::pow(k + 1.0, s);
    const auto sides = fs::carlson_original(a);
    EXPECT_LE(sides.lhs, sides.rhs);
  }
}

TEST(Parseval, Delta) {
  const auto p1 = fs::parseval_bridge(li::LatticeSeq::delta(1, 3));
  EXPECT_NEAR(p1.fourier_norm_sq, 1.0, 1e-14);
  EXPECT_NEAR(p1.fourier_grad_norm_sq, 2.0, 1e-14);
  EXPECT_EQ(p1.grad_norm_sq, 2.0);
  const auto p3 = fs::parseval_bridge(li::LatticeSeq::delta(3, 2));
  EXPECT_NEAR(p3.fourier_norm_sq, 1.0, 1e-14);
}

TEST(Parseval, RandomTwoDimensional) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10; ++i) {
    const auto u = li::testing::random_seq(rng, 2, 10);
    const auto p = fs::parseval_bridge(u);
    EXPECT_NEAR(p.fourier_norm_sq, p.norm_sq, 1e-12 * (1 + p.norm_sq));
    EXPECT_NEAR(p.fourier_grad_norm_sq, p.grad_norm_sq, 1e-12 * (1 + p.grad_norm_sq));
  }
}

TEST(Sobolev, MonteCarloAgrees) {
  const auto params = fs::SobolevParams::from_p(3, 4.0);
  EXPECT_NEAR(params.p_prime, 4.0 / 3.0, 1e-15);
  const double exact = fs::sobolev_integral(params);
  const auto mc = fs::sobolev_integral_monte_carlo(params, 10'000'000, 7);
  EXPECT_GT(exact, 0.0);
  EXPECT_LE(std::abs(exact - mc.mean), 3 * mc.std_error);
}

TEST(Sobolev, KdZeroRelation) {
  const double i1 = fs::sobolev_I({3, 1.0});
  EXPECT_NEAR(i1 / (std::pow(2 * kPi, 3) * 4 * li::greennd::Kd0(3)), 1.0, 1e-5);
}

TEST(Sobolev, DomainErrors) {
  EXPECT_THROW(fs::sobolev_I({3, 1.5}), li::DomainError);
  EXPECT_THROW(fs::sobolev_I({3, 0.9}), li::DomainError);
  EXPECT_THROW(fs::sobolev_I({6, 1.2}), li::DomainError);
}

// Known failure: the p'-th root undoes the growth of the integral between
// 1.1 and 1.3. Kept to document the gap.
TEST(Sobolev, GrowsTowardsCriticalExponent) {
  const double a = fs::sobolev_I({3, 1.1});
  const double b = fs::sobolev_I({3, 1.3});
  const double c = fs::sobolev_I({3, 1.45});
  EXPECT_LT(a, b);
  EXPECT_LT(b, c);
}

TEST(Sobolev, IntegralIncreasesWithExponent) {
  double prev = fs::sobolev_integral({3, 1.0});
  for (double pp : {1.1, 1.3, 1.45, 1.49}) {
    const double v = fs::sobolev_integral({3, pp});
    EXPECT_GT(v, prev) << pp;
    prev = v;
  }
}

TEST(Sobolev, ConstantBlowsUp) {
  EXPECT_GT(fs::sobolev_constant({3, 1.49}), 10 * fs::sobolev_constant({3, 1.3}));
}

TEST(Sobolev, InequalityOnRandomSequences) {
  const auto params = fs::SobolevParams::from_p(3, 4.0);
  const double c = fs::sobolev_constant(params);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const auto u = li::testing::random_seq(rng, 3, 12);
    double s = 0.0;
    for (double v : u.values()) s += std::pow(v, 8.0);
    EXPECT_LE(std::pow(s, 0.25), c * li::grad_norm_sq(u));
  }
}

TEST(Sobolev, ParsevalVariantTendsToKd0) {
  const double k = li::greennd::Kd0(3);
  double prev_gap = INFINITY;
  for (double pp : {1.2, 1.1, 1.05}) {
    const double gap = std::abs(fs::sobolev_constant_parseval({3, pp}) - k);
    EXPECT_LT(gap, prev_gap) << pp;
    prev_gap = gap;
  }
  EXPECT_NEAR(fs::sobolev_constant_parseval({3, 1.0}), k, 1e-6);
}

TEST(ElementaryKd0, Cases) {
  const double k = li::greennd::Kd0(3);
  const auto d = fs::elementary_Kd0_proof_check(li::LatticeSeq::delta(3, 2), k);
  EXPECT_NEAR(d.lhs, 1.0, 1e-12);
  EXPECT_NEAR(d.rhs, 6 * k, 1e-10);
  const auto z = fs::elementary_Kd0_proof_check(li::LatticeSeq(3, 2), k);
  EXPECT_EQ(z.lhs, 0.0);
  EXPECT_EQ(z.rhs, 0.0);
  std::mt19937_64 rng(14);
  for (int i = 0; i < 5; ++i) {
    const auto s = fs::elementary_Kd0_proof_check(li::testing::random_seq(rng, 3, 8), k);
    EXPECT_LE(s.lhs, s.rhs);
  }
  EXPECT_THROW(fs::elementary_Kd0_proof_check(li::LatticeSeq(2, 2), k), li::DomainError);
}
