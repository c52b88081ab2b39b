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

#include "lattice_interp/green2d.hpp"
#include "lattice_interp/lattice_oracle.hpp"
#include "support.hpp"

namespace li = lattice_interp;
namespace g2 = lattice_interp::green2d;

constexpr double kPi = std::numbers::pi;

TEST(F2, EllipticValueAndQuadrature) {
  EXPECT_NEAR(g2::f2(4.0), 2.0 / kPi * li::specfun::elliptic_K(0.5) / 8.0, 1e-15);
  EXPECT_NEAR(g2::f2(4.0), 0.134147750893670546881605213496, 1e-14);  // mpmath
  EXPECT_NEAR(g2::f2(0.5), 0.316235097306709905027660603202, 1e-14);
  EXPECT_NEAR(g2::f2(20.0), 0.0419606287517399347776996422463, 1e-14);
  for (double lambda : {0.5, 4.0, 20.0}) EXPECT_NEAR(g2::f2_fourier(lambda), g2::f2(lambda), 1e-8);
}

TEST(F2, MatchesLattice) {
  for (double lambda : {2.0, 4.0}) {
    EXPECT_NEAR(li::oracle::green_solve({2, 1, lambda}, 60).value_at({0, 0, 0}), g2::f2(lambda), 1e-7);
  }
}

TEST(F2, SymmetryAndAsymptotics) {
  EXPECT_NEAR(g2::f2(-10.0), g2::f2(2.0), 1e-15);
  const double l = 1e4;
  EXPECT_NEAR(g2::f2(l), 1.0 / l - 4.0 / (l * l), 1e-6);
  EXPECT_THROW(g2::f2(-4.0), li::DomainError);
  EXPECT_THROW(g2::f2(0.0), li::DomainError);
}

TEST(F2, SingleIntegralForm) {
  for (double lambda : {1.0, 9.0}) EXPECT_NEAR(g2::f2_single_integral(lambda), g2::f2(lambda), 1e-10);
}

TEST(GH2, LatticeNormsAndIdentities) {
  const auto g = li::oracle::green_solve({2, 1, 2.0}, 60);
  const auto n = li::oracle::green_norms(g, 1);
  EXPECT_NEAR(n.g, g2::g2(2.0), 1e-7);
  EXPECT_NEAR(n.h, g2::h2(2.0), 1e-7);
  for (double lambda : {1.0, 5.0, 50.0}) {
    const double f = g2::f2(lambda);
    EXPECT_LE(std::abs(f - g2::h2(lambda) - lambda * g2::g2(lambda)), 1e-12 * f);
  }
  const double h = 3e-5;
  const double fd = -(g2::f2(3.0 + h) - g2::f2(3.0 - h)) / (2 * h);
  EXPECT_NEAR(g2::g2(3.0) / fd, 1.0, 1e-6);
}

TEST(D2, SymmetryAndLimits) {
  EXPECT_NEAR(g2::d2_of_lambda(-10.0), 8.0 - g2::d2_of_lambda(2.0), 1e-13);
  const double big = g2::d2_of_lambda(1e6);
  EXPECT_GT(big, 4.0 - 1e-4);
  EXPECT_LT(big, 4.0);
  const double l = 1e-4;
  EXPECT_NEAR(g2::d2_of_lambda(l) / ((5 * std::log(2.0) - std::log(l) - 1) * l), 1.0, 1e-2);
}

TEST(Symmetry, RandomPoints) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ul(-6.0, 6.0);
  std::uniform_real_distribution<double> ud(0.05, 3.95);
  for (int i = 0; i < 20; ++i) {
    const double l = std::exp(ul(rng));
    EXPECT_NEAR(g2::f2(-8.0 - l) / g2::f2(l), 1.0, 1e-10);
    EXPECT_NEAR((8.0 - g2::d2_of_lambda(-8.0 - l)) / g2::d2_of_lambda(l), 1.0, 1e-10);
    const double d = ud(rng);
    EXPECT_NEAR(g2::V2(8.0 - d) / g2::V2(d), 1.0, 1e-10);
  }
}

TEST(D2, RoundTrip) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(1e-3, 8.0 - 1e-3);
  for (int i = 0; i < 30; ++i) {
    const double d = u(rng);
    EXPECT_NEAR(g2::d2_of_lambda(g2::lambda2_of_d(d)), d, 1e-10) << d;
  }
  EXPECT_GT(g2::lambda2_of_d(1.0), 0.0);
  EXPECT_LT(g2::lambda2_of_d(5.0), -8.0);
  EXPECT_THROW(g2::lambda2_of_d(8.0), li::DomainError);
  EXPECT_THROW(g2::lambda2_of_d(4.0), li::DomainError);
}

TEST(V2, Values) {
  const auto four = g2::V2_ext(4.0);
  EXPECT_EQ(four.value, 1.0);
  EXPECT_FALSE(four.lambda.has_value());
  EXPECT_NEAR(g2::V2(1.5), g2::V2(6.5), 1e-12);
  EXPECT_NEAR(li::oracle::maximize_u0(2, 1, 2.0, 60).value, g2::V2(2.0), 1e-6);
  EXPECT_THROW(g2::V2(0.0), li::DomainError);
}

TEST(V0, MajorantOnFineGrid) {
  EXPECT_DOUBLE_EQ(g2::V0_majorant(4.0), 1.0);
  EXPECT_NEAR(g2::V0_majorant(1.0), g2::V0_majorant(7.0), 1e-15);
  for (int i = 0; i < 400; ++i) {
    const double d = 0.02 + (7.98 - 0.02) * i / 399.0;
    EXPECT_GE(g2::V0_majorant(d), g2::V2(d)) << d;
  }
}

TEST(LogInequality, SaturationAndRandom) {
  const auto delta = li::LatticeSeq::delta(2, 1);
  EXPECT_DOUBLE_EQ(g2::log_inequality_rhs(1.0, li::grad_norm_sq(delta)), 1.0);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const auto u = li::testing::random_seq(rng, 2, 30);
    const double u0 = u.value_at({0, 0, 0});
    EXPECT_LE(u0 * u0, g2::log_inequality_rhs(u.norm_sq(), li::grad_norm_sq(u)));
  }
  const auto g = li::oracle::green_solve({2, 1, 1.0}, 40);
  const double g0 = g.value_at({0, 0, 0});
  EXPECT_LT(g0 * g0, g2::log_inequality_rhs(g.norm_sq(), li::grad_norm_sq(g)) * (1 - 1e-6));
  EXPECT_THROW(g2::log_inequality_rhs(1.0, 9.0), li::DomainError);
}

TEST(LambdaExpansion, SmallD) {
  EXPECT_LT(std::abs(g2::lambda_expansion_smalld(1e-3) / g2::lambda2_of_d(1e-3) - 1), 0.05);
  EXPECT_LT(std::abs(g2::lambda_expansion_smalld(1e-6) / g2::lambda2_of_d(1e-6) - 1), 0.01);
  const double z = -std::numbers::e * 1e-3 / 32;
  const double w = li::specfun::lambert_w_m1(z);
  EXPECT_NEAR(w * std::exp(w), z, 1e-12 * std::abs(z));
  EXPECT_THROW(g2::lambda_expansion_smalld(0.2), li::DomainError);
}

TEST(K2, StatedValues) {
  EXPECT_NEAR(g2::K2_theta(0.01).constant, 3.205, 0.001);
  EXPECT_NEAR(g2::K2_small_theta(0.01), 3.096, 0.002);
  EXPECT_EQ(g2::K2_theta(1.0).constant, 1.0);
  EXPECT_EQ(g2::K2_theta(1.0).extremal, li::Extremal::delta);
  EXPECT_NEAR(g2::K2_theta(0.05).constant * 4 * kPi * std::numbers::e * 0.05, 1.0, 0.15);
  EXPECT_THROW(g2::K2_theta(0.0), li::DomainError);
  EXPECT_THROW(g2::K2_theta(1.1), li::DomainError);
}

// Known failure at theta = 0.05 above: the next-order factor
// 32^theta / theta_weight(theta) is 1.45 there. It accounts for the gap.
TEST(K2, SecondOrderAsymptotics) {
  for (double theta : {0.01, 0.05}) {
    const double approx = std::pow(32.0, theta) * g2::K2_small_theta(theta);
    EXPECT_NEAR(g2::K2_theta(theta).constant / approx, 1.0, 1e-2) << theta;
  }
}

TEST(K2, InequalityOnRandomSequences) {
  std::mt19937_64 rng(41);
  for (double theta : {0.1, 0.3, 0.5, 0.9}) {
    const double k = g2::K2_theta(theta).constant;
    for (int i = 0; i < 100; ++i) {
      EXPECT_LE(li::oracle::interpolation_ratio(li::testing::random_seq(rng, 2, 10), 1, theta), k);
    }
  }
}

TEST(K2, ExtremalNearOptimal) {
  for (double theta : {0.3, 0.7}) {
    const auto k = g2::K2_theta(theta);
    ASSERT_GE(*k.lambda_star, 0.5);
    const auto g = li::oracle::green_solve({2, 1, *k.lambda_star}, 80);
    EXPECT_NEAR(li::oracle::interpolation_ratio(g, 1, theta), k.constant, 1e-6);
  }
}
