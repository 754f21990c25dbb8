#include <gtest/gtest.h>

#include "ratcat/verify.hpp"

using namespace ratcat;

TEST(Verify, AllChecksPass) {
  const VerifyReport report = verify(VerifyOptions{});
  EXPECT_TRUE(report.ok());
  EXPECT_GE(report.checks.size(), 14u);
  for (const auto& c : report.checks) {
    EXPECT_EQ(c.failed, 0u) << c.name << ": " << c.first_counterexample;
    EXPECT_GT(c.passed, 0u) << c.name;
  }
}

TEST(Verify, TinyRangeTriviallyPasses) {
  VerifyOptions opt;
  opt.max_n = 2;
  opt.max_mn = 2;
  EXPECT_TRUE(verify(opt).ok());
}

TEST(Verify, PerturbedDinvIsCaught) {
  VerifyOptions opt;
  opt.max_n = 10;
  opt.max_mn = 8;
  // Off by one only on paths with a nonempty shape.
  opt.dinv_of = [](const DyckPath& p) { return dinv(p) + (cells_above(p).size() > 0 ? 1 : 0); };
  const VerifyReport report = verify(opt);
  EXPECT_FALSE(report.ok());
  bool sum_identity_failed = false;
  for (const auto& c : report.checks) {
    if (c.name == "sum-identity") {
      sum_identity_failed = c.failed > 0;
      EXPECT_FALSE(c.first_counterexample.empty());
    }
  }
  EXPECT_TRUE(sum_identity_failed);
}

TEST(Verify, PerturbedSkipsIsCaught) {
  VerifyOptions opt;
  opt.max_n = 10;
  opt.max_mn = 4;
  opt.skips_of = [](const DyckPath&) { return 0; };
  EXPECT_FALSE(verify(opt).ok());
}
