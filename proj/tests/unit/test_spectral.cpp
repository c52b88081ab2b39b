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

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "lattice_interp/constants.hpp"
#include "lattice_interp/greennd.hpp"
#include "lattice_interp/spectral.hpp"

namespace li = lattice_interp;
namespace sp = lattice_interp::spectral;

namespace {

sp::OrthonormalFamily random_family(std::mt19937_64& rng, int dim, int radius, int members) {
  li::LatticeSeq shape(dim, radius);
  const auto n = static_cast<Eigen::Index>(shape.size());
  std::normal_distribution<double> normal;
  Eigen::MatrixXd m(n, members);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = normal(rng);
  const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(m).householderQ() *
                            Eigen::MatrixXd::Identity(n, members);
  sp::OrthonormalFamily fam;
  for (int j = 0; j < members; ++j) {
    li::LatticeSeq u(dim, radius);
    for (Eigen::Index i = 0; i < n; ++i) u[static_cast<std::size_t>(i)] = q(i, j);
    fam.push_back(u);
  }
  return fam;
}

sp::SchrodingerSpec well(int dim, int order, li::LatticeSeq v, int radius) {
  return {dim, order, std::move(v), radius};
}

}  // namespace

TEST(Density, Basics) {
  const auto rho = sp::density({li::LatticeSeq::delta(1, 3)});
  EXPECT_EQ(rho.value_at({0, 0, 0}), 1.0);
  EXPECT_EQ(rho.norm_sq(), 1.0);

  li::LatticeSeq a(1, 3), b(1, 3);
  a.at({-2, 0, 0}) = 0.6;
  a.at({-1, 0, 0}) = 0.8;
  b.at({2, 0, 0}) = 1.0;
  const auto r2 = sp::density({a, b});
  EXPECT_NEAR(r2.value_at({-1, 0, 0}), 0.64, 1e-15);
  EXPECT_NEAR(r2.value_at({2, 0, 0}), 1.0, 1e-15);

  std::mt19937_64 rng(1);
  const auto fam = random_family(rng, 2, 4, 6);
  const auto rho6 = sp::density(fam);
  double total = 0.0;
  for (double v : rho6.values()) total += v;
  EXPECT_NEAR(total, 6.0, 1e-12);

  li::LatticeSeq bad = li::LatticeSeq::delta(1, 3);
  bad.at({0, 0, 0}) = 1.1;
  EXPECT_THROW(sp::density({bad}), li::DomainError);
}

TEST(OrthFamily, Cases) {
  const auto d = sp::orth_family_check({li::LatticeSeq::delta(1, 3)}, 0.5, 1);
  EXPECT_NEAR(d.lhs, 1.0, 1e-15);
  EXPECT_NEAR(d.rhs, 2.0, 1e-15);
  std::mt19937_64 rng(2);
  const auto s1 = sp::orth_family_check(random_family(rng, 1, 20, 5), 0.5, 1);
  EXPECT_LE(s1.lhs, s1.rhs);
  for (int i = 0; i < 3; ++i) {
    const auto s3 = sp::orth_family_check(random_family(rng, 3, 3, 3), 0.0, 1);
    EXPECT_LE(s3.lhs, s3.rhs);
  }
  EXPECT_THROW(sp::orth_family_check({li::LatticeSeq::delta(1, 3)}, 1.0, 1), li::DomainError);
}

TEST(CorollaryLq, Cases) {
  const auto d = sp::corollary_lq_check(li::LatticeSeq::delta(1, 3), 0.5, 1);
  EXPECT_NEAR(d.lhs, 1.0, 1e-15);
  EXPECT_NEAR(d.rhs, std::pow(2.0, 1.0 / 6.0), 1e-14);
  // the constant in front is K^{1/(2(2 - theta))}
  EXPECT_NEAR(std::pow(li::sharp_constant(1, 2, 0.75).constant, 1.0 / 2.5), std::pow(2.0, -0.2), 1e-14);
  EXPECT_NEAR(std::pow(li::sharp_constant(3, 1, 0.0).constant, 0.25),
              std::pow(li::greennd::Kd0(3), 0.25), 1e-12);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  for (int i = 0; i < 20; ++i) {
    li::LatticeSeq u(1, 15);
    for (auto& v : u.values()) v = normal(rng);
    const auto s = sp::corollary_lq_check(u, 0.75, 2);
    EXPECT_LE(s.lhs, s.rhs);
  }
  EXPECT_THROW(sp::corollary_lq_check(li::LatticeSeq::delta(1, 3), 0.7, 2), li::DomainError);
}

TEST(LiebThirringConstant, WorkedExamples) {
  EXPECT_NEAR(sp::lieb_thirring_constant(1, 1, 0.5), 2.0 / (3.0 * std::sqrt(3.0)), 1e-14);
  EXPECT_NEAR(sp::lieb_thirring_constant(1, 2, 0.75), 2.0 * std::sqrt(2.0) / std::pow(5.0, 1.25), 1e-14);
  EXPECT_NEAR(sp::lieb_thirring_constant(3, 1, 0.0), li::greennd::Kd0(3) / 4, 1e-14);
  EXPECT_NEAR(sp::lieb_thirring_constant(3, 1, 0.0), 0.0631, 1e-4);
}

TEST(NegativeSpectrum, FreeOperatorHasNone) {
  EXPECT_TRUE(sp::negative_spectrum(well(1, 1, li::LatticeSeq(1, 0), 40)).values.empty());
  EXPECT_TRUE(sp::negative_spectrum(well(2, 1, li::LatticeSeq(2, 0), 12)).values.empty());
}

TEST(NegativeSpectrum, DeltaWell) {
  li::LatticeSeq v(1, 0);
  v.at({0, 0, 0}) = 2.0;
  const auto a = sp::negative_spectrum(well(1, 1, v, 40));
  const auto b = sp::negative_spectrum(well(1, 1, v, 80));
  ASSERT_EQ(a.values.size(), 1u);
  ASSERT_EQ(b.values.size(), 1u);
  EXPECT_NEAR(a.values[0], b.values[0], 1e-8);
  // bound state of -Delta - c delta on Z: E = 2 - sqrt(4 + c^2)
  EXPECT_NEAR(b.values[0], 2.0 - std::sqrt(8.0), 1e-10);
}

TEST(NegativeSpectrum, DeepWellCountStable) {
  const auto v = sp::box_well(1, 10.0, 2);
  const auto a = sp::negative_spectrum(well(1, 1, v, 40));
  const auto b = sp::negative_spectrum(well(1, 1, v, 80));
  EXPECT_GE(a.values.size(), 3u);
  EXPECT_EQ(a.values.size(), b.values.size());
  for (std::size_t j = 0; j < a.values.size(); ++j) EXPECT_NEAR(a.values[j], b.values[j], 1e-8);
}

TEST(NegativeSpectrum, SparseMatchesDense) {
  li::LatticeSeq v(2, 2);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 6.0);
  for (auto& x : v.values()) x = u(rng);
  const auto spec = well(2, 1, v, 14);  // 841 sites, sparse path
  const auto sparse = sp::negative_spectrum(spec);
  const auto dense = li::eigensolvers::dense_below(Eigen::MatrixXd(sp::hamiltonian(spec)), 0.0);
  ASSERT_EQ(sparse.values.size(), dense.values.size());
  for (std::size_t j = 0; j < dense.values.size(); ++j) EXPECT_NEAR(sparse.values[j], dense.values[j], 1e-10);
}

TEST(NegativeSpectrum, ZeroDiagonalWell) {
  // depth 4 in 2D zeroes the diagonal inside the well
  const auto spec = well(2, 1, sp::box_well(2, 4.0, 1), 12);
  const auto sparse = sp::negative_spectrum(spec);
  const auto dense = li::eigensolvers::dense_below(Eigen::MatrixXd(sp::hamiltonian(spec)), 0.0);
  ASSERT_EQ(sparse.values.size(), dense.values.size());
  for (std::size_t j = 0; j < dense.values.size(); ++j) EXPECT_NEAR(sparse.values[j], dense.values[j], 1e-10);
}

TEST(LiebThirring, RandomPotentials) {
  struct Case { int dim, order; double theta; int support, radius; double vmax; };
  std::mt19937_64 rng(5);
  for (const Case c : {Case{1, 1, 0.5, 3, 60, 10}, Case{1, 2, 0.75, 3, 60, 20},
                       Case{2, 1, 0.5, 2, 12, 10}, Case{3, 1, 0.0, 1, 8, 12}}) {
    std::uniform_real_distribution<double> u(0.0, c.vmax);
    for (int i = 0; i < 5; ++i) {
      li::LatticeSeq v(c.dim, c.support);
      for (auto& x : v.values()) x = u(rng);
      const auto r = sp::lieb_thirring_check(well(c.dim, c.order, v, c.radius), c.theta);
      EXPECT_LE(r.trace, r.bound) << c.dim << " " << c.order;
      EXPECT_LE(std::abs(r.rayleigh_residual), 1e-8);
    }
  }
}

TEST(LiebThirring, DoublingPotentialIncreasesTrace) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  for (int i = 0; i < 10; ++i) {
    li::LatticeSeq v(1, 3);
    for (auto& x : v.values()) x = u(rng);
    li::LatticeSeq v2 = v;
    for (auto& x : v2.values()) x *= 2.0;
    const auto a = sp::lieb_thirring_check(well(1, 1, v, 40), 0.5);
    const auto b = sp::lieb_thirring_check(well(1, 1, v2, 40), 0.5);
    EXPECT_GE(b.trace, a.trace);
  }
}

TEST(LiebThirring, ThetaOneRejected) {
  EXPECT_THROW(sp::lieb_thirring_check(well(1, 1, sp::box_well(1, 1.0, 1), 20), 1.0), li::DomainError);
}

TEST(Schrodinger, Validation) {
  li::LatticeSeq neg(1, 1);
  neg.at({0, 0, 0}) = -1.0;
  EXPECT_THROW(sp::negative_spectrum(well(1, 1, neg, 10)), li::DomainError);
  EXPECT_THROW(sp::negative_spectrum(well(1, 1, sp::box_well(1, 1.0, 5), 3)), li::DomainError);
  EXPECT_THROW(sp::negative_spectrum(well(2, 2, sp::box_well(2, 1.0, 1), 5)), li::DomainError);
}
