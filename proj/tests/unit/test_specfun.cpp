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

#include "lattice_interp/numerics.hpp"
#include "lattice_interp/specfun.hpp"

namespace li = lattice_interp;
using li::specfun::elliptic_E;
using li::specfun::elliptic_K;

namespace {

constexpr double kPi = std::numbers::pi;

double K_quadrature(double k) {
  // t = sin(phi) removes the endpoint singularity
  return li::numerics::gauss_kronrod(
             [&](double p) { return 1.0 / std::sqrt(1.0 - k * k * std::sin(p) * std::sin(p)); },
             0.0, kPi / 2, 1e-15, 1e-14)
      .value;
}

double E_quadrature(double k) {
  return li::numerics::gauss_kronrod(
             [&](double p) { return std::sqrt(1.0 - k * k * std::sin(p) * std::sin(p)); },
             0.0, kPi / 2, 1e-15, 1e-14)
      .value;
}

}  // namespace

TEST(EllipticK, AtZeroIsHalfPi) { EXPECT_DOUBLE_EQ(elliptic_K(0.0), kPi / 2); }

TEST(EllipticK, EvenInModulus) { EXPECT_EQ(elliptic_K(-0.3), elliptic_K(0.3)); }

TEST(EllipticK, MatchesQuadratureAt08) {
  EXPECT_NEAR(elliptic_K(0.8), K_quadrature(0.8), 1e-10);
  EXPECT_NEAR(elliptic_K(0.8), 1.99530277766472938768621133937, 1e-14);  // mpmath
  EXPECT_NEAR(elliptic_K(0.3), 1.60804861993051280126720722224, 1e-14);
}

TEST(EllipticK, RejectsUnitModulus) {
  EXPECT_THROW(elliptic_K(1.0), li::DomainError);
  EXPECT_THROW(elliptic_K(-1.2), li::DomainError);
}

TEST(EllipticE, Endpoints) {
  EXPECT_DOUBLE_EQ(elliptic_E(0.0), kPi / 2);
  EXPECT_DOUBLE_EQ(elliptic_E(1.0), 1.0);
  EXPECT_THROW(elliptic_E(1.01), li::DomainError);
}

TEST(EllipticE, MatchesQuadratureAtHalf) {
  EXPECT_NEAR(elliptic_E(0.5), E_quadrature(0.5), 1e-10);
  EXPECT_NEAR(elliptic_E(0.5), 1.46746220933942715545979526699, 1e-14);
}

TEST(EllipticPair, ComplementaryFormKeepsKMinusE) {
  // k' tiny: K - E is computed without cancellation
  const double kp = 1e-9;
  const auto p = li::specfun::elliptic_KE(std::sqrt(1.0 - kp * kp), kp);
  EXPECT_NEAR(p.K, std::log(4.0 / kp), 1e-8);
  EXPECT_NEAR(p.K_minus_E, p.K - 1.0, 1e-8);
}

TEST(Legendre, RelationOnRandomModuli) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const double k = u(rng), kp = std::sqrt(1 - k * k);
    const double lhs = elliptic_E(k) * elliptic_K(kp) + elliptic_E(kp) * elliptic_K(k) -
                       elliptic_K(k) * elliptic_K(kp);
    EXPECT_NEAR(lhs, kPi / 2, 1e-10) << "k=" << k;
  }
}

TEST(EllipticK, DerivativeFormula) {
  for (double k : {0.2, 0.5, 0.8}) {
    const double h = 1e-5;
    const double fd = (elliptic_K(k + h) - elliptic_K(k - h)) / (2 * h);
    const double exact = elliptic_E(k) / (k * (1 - k * k)) - elliptic_K(k) / k;
    EXPECT_NEAR(fd / exact, 1.0, 1e-6) << "k=" << k;
  }
}

TEST(LambertWm1, BranchPoint) { EXPECT_NEAR(li::specfun::lambert_w_m1(-1.0 / std::numbers::e), -1.0, 1e-7); }

TEST(LambertWm1, BackSubstitution) {
  const double w = li::specfun::lambert_w_m1(-0.1);
  EXPECT_LE(w, -1.0);
  EXPECT_NEAR(w * std::exp(w), -0.1, 1e-13);
  EXPECT_NEAR(w, -3.57715206395729721840939196351, 1e-13);
}

TEST(LambertWm1, ForwardEvaluation) {
  EXPECT_NEAR(li::specfun::lambert_w_m1(-2.0 * std::exp(-2.0)), -2.0, 1e-13);
}

TEST(LambertWm1, ResidualOnGrid) {
  for (int i = 0; i < 50; ++i) {
    const double lo = std::log(1e-8), hi = -1.0;
    const double z = -std::exp(lo + (hi - lo) * (i + 0.5) / 50.0);
    const double w = li::specfun::lambert_w_m1(z);
    EXPECT_LE(std::abs(w * std::exp(w) - z), 1e-12 * std::abs(z)) << "z=" << z;
    EXPECT_LE(w, -1.0);
  }
}

TEST(LambertWm1, Domain) {
  EXPECT_THROW(li::specfun::lambert_w_m1(0.0), li::DomainError);
  EXPECT_THROW(li::specfun::lambert_w_m1(-0.5), li::DomainError);
}

TEST(Gamma, KnownValues) {
  EXPECT_NEAR(li::specfun::gamma_fn(1.0), 1.0, 1e-14);
  EXPECT_NEAR(li::specfun::gamma_fn(0.5), std::sqrt(kPi), 1e-14);
  EXPECT_NEAR(li::specfun::gamma_fn(1.0 / 24) / 23.4624876931833198813857114696, 1.0, 1e-13);
  for (double x : {0.1, 0.7, 2.5, 7.3}) {
    EXPECT_NEAR(li::specfun::gamma_fn(x) / std::tgamma(x), 1.0, 1e-13) << x;
  }
  EXPECT_THROW(li::specfun::gamma_fn(0.0), li::DomainError);
}
