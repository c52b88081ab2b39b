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

#include "lattice_interp/curves.hpp"
#include "lattice_interp/green1d.hpp"
#include "lattice_interp/green2d.hpp"
#include "lattice_interp/higher_order.hpp"

namespace li = lattice_interp;
namespace cv = lattice_interp::curves;

TEST(Curves, RegistryNames) {
  const char* names[] = {"k1_theta", "c11_per", "k2_theta", "d_lambda_2d", "lambda_d_2d", "v_d_1d",
                         "v0_vs_v_2d", "k3_theta", "k12_theta", "g_16_3", "v_d_order2"};
  EXPECT_EQ(cv::registry().size(), std::size(names));
  for (const char* n : names) EXPECT_NO_THROW(cv::find(n)) << n;
  EXPECT_THROW(cv::find("nope"), li::DomainError);
}

TEST(Curves, K1Values) {
  const auto s = cv::sample_curve("k1_theta", {0.5, 0.75, 1.0});
  ASSERT_EQ(s.rows.size(), 3u);
  EXPECT_EQ(s.rows[0][1], 1.0);
  EXPECT_NEAR(s.rows[1][1], 0.877382675301661640546145934531, 1e-15);
  EXPECT_EQ(s.rows[2][1], 1.0);
  EXPECT_FALSE(s.provenance.at("paper_ref").empty());
}

TEST(Curves, G16Over3Oscillates) {
  std::vector<double> grid;
  for (int n = 0; n <= 12; ++n) grid.push_back(n);
  const auto s = cv::sample_curve("g_16_3", grid);
  int changes = 0;
  for (std::size_t i = 1; i < s.rows.size(); ++i) {
    if (s.rows[i][1] * s.rows[i - 1][1] < 0) ++changes;
    EXPECT_LT(std::abs(s.rows[i][1]), std::abs(s.rows[0][1]));
  }
  EXPECT_GT(changes, 0);
  EXPECT_EQ(s.rows[0][1], li::higher_order::green12_n(16.0 / 3.0, 0));
  EXPECT_THROW(cv::sample_curve("g_16_3", {1.5}), li::DomainError);
}

TEST(Curves, OrderTwoEndpoint) {
  const auto s = cv::sample_curve("v_d_order2", {6.0});
  EXPECT_EQ(s.rows[0][1], 1.0);
}

TEST(Curves, EndpointsMatchOwningModules) {
  EXPECT_EQ(cv::sample_curve("k2_theta", {1.0}).rows[0][1], li::green2d::K2_theta(1.0).constant);
  EXPECT_EQ(cv::sample_curve("k12_theta", {0.75}).rows[0][1], li::higher_order::K12_theta(0.75).constant);
  EXPECT_EQ(cv::sample_curve("v_d_1d", {2.0}).rows[0][1], 1.0);
  EXPECT_EQ(cv::sample_curve("c11_per", {0.5}).rows[0][1], li::higher_order::periodic_C11(0.5));
}

TEST(Curves, OutOfDomainReportsValue) {
  try {
    cv::sample_curve("k1_theta", {0.7, 0.25});
    FAIL() << "expected DomainError";
  } catch (const li::DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("0.25"), std::string::npos) << e.what();
  }
}

TEST(Curves, DefaultGridsAreFiniteAndMonotone) {
  for (const auto& def : cv::registry()) {
    if (def.name == "k3_theta") continue;  // slow; covered by the acceptance run
    const auto s = cv::sample_curve(def.name);
    ASSERT_FALSE(s.rows.empty()) << def.name;
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
      EXPECT_EQ(s.rows[i].size(), s.columns.size()) << def.name;
      for (double v : s.rows[i]) EXPECT_TRUE(std::isfinite(v)) << def.name;
      if (i > 0) EXPECT_GT(s.rows[i][0], s.rows[i - 1][0]) << def.name;
    }
  }
}

TEST(Curves, V0MarginNonNegative) {
  const auto s = cv::sample_curve("v0_vs_v_2d");
  for (const auto& r : s.rows) EXPECT_GE(r[3], 0.0) << r[0];
}

TEST(Curves, VdMatchesClosedForm) {
  std::vector<double> grid;
  for (int i = 1; i <= 39; ++i) grid.push_back(0.1 * i);
  const auto s = cv::sample_curve("v_d_1d", grid);
  for (const auto& r : s.rows) EXPECT_NEAR(r[1], 0.5 * std::sqrt(r[0] * (4.0 - r[0])), 1e-15);
}
