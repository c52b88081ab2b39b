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

#include "lattice_interp/verify.hpp"

namespace vf = lattice_interp::verify;

class VerifySuite : public ::testing::TestWithParam<std::string> {};

TEST_P(VerifySuite, PassesWithDefaultSeed) {
  const auto report = vf::run_suite(GetParam());
  ASSERT_FALSE(report.checks.empty());
  for (const auto& c : report.checks) {
    EXPECT_TRUE(c.pass) << c.name << " discrepancy " << c.discrepancy << " tol " << c.tolerance << " "
                        << c.note;
  }
}

TEST_P(VerifySuite, FaultInjectionIsCaught) {
  vf::Options opts;
  opts.inject_fault = true;
  EXPECT_FALSE(vf::run_suite(GetParam(), opts).all_pass());
}

INSTANTIATE_TEST_SUITE_P(All, VerifySuite, ::testing::ValuesIn(vf::suite_names()),
                         [](const auto& info) { return info.param; });

TEST(VerifyDeterminism, SameSeedSameDiscrepancies) {
  vf::Options opts;
  opts.seed = 777;
  const auto a = vf::run_suite("green2d", opts);
  const auto b = vf::run_suite("green2d", opts);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].name, b.checks[i].name);
    EXPECT_EQ(a.checks[i].discrepancy, b.checks[i].discrepancy);
  }
}

TEST(VerifyDeterminism, OtherSeedStillPasses) {
  vf::Options opts;
  opts.seed = 424242;
  EXPECT_TRUE(vf::run_suite("green1d", opts).all_pass());
  EXPECT_TRUE(vf::run_suite("higher_order", opts).all_pass());
}

TEST(VerifySuites, UnknownSuiteRejected) {
  EXPECT_THROW(vf::run_suite("nope"), lattice_interp::DomainError);
}
