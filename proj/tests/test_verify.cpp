#include <gtest/gtest.h>

#include "hodgerees/verify.hpp"

using namespace hodgerees;

namespace {

VerifyOptions small(size_t cases) {
  VerifyOptions opt;
  opt.cases = cases;
  return opt;
}

TEST(Verify, SmallRunPasses) {
  for (const SuiteResult& r : verify_all(small(8))) {
    EXPECT_TRUE(r.ok()) << format_result(r);
    EXPECT_GT(r.checks, 0u) << r.name;
  }
}

TEST(Verify, ZeroCasesIsVacuous) {
  for (const SuiteResult& r : verify_all(small(0))) {
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.checks, 0u);
  }
}

TEST(Verify, IndependentOfWorkerCount) {
  VerifyOptions one = small(12), three = small(12);
  three.workers = 3;
  const SuiteResult a = verify_superadditivity(one), b = verify_superadditivity(three);
  EXPECT_EQ(a.checks, b.checks);
  EXPECT_EQ(case_rng(5, "x", 3)(), case_rng(5, "x", 3)());
  EXPECT_NE(case_rng(5, "x", 3)(), case_rng(5, "x", 4)());
  EXPECT_NE(case_rng(5, "x", 3)(), case_rng(5, "y", 3)());
}

TEST(Verify, SignFlippedAlphaIsCaught) {
  VerifyOptions opt = small(40);
  opt.alpha = [](const MixedHodgeStructure<Exact>& h) { return -alpha(h); };
  const SuiteResult r = verify_superadditivity(opt);
  ASSERT_FALSE(r.ok());
  const std::string& detail = r.failures.front().detail;
  EXPECT_NE(detail.find("alpha(H) ="), std::string::npos);
  // the counterexample dump is a replayable document
  EXPECT_NE(detail.find("\"weight_filtration\""), std::string::npos);
  EXPECT_NE(format_result(r).find("--case"), std::string::npos);
}

TEST(Verify, ReplaySingleCase) {
  VerifyOptions opt = small(40);
  opt.alpha = [](const MixedHodgeStructure<Exact>& h) { return -alpha(h); };
  const SuiteResult all = verify_superadditivity(opt);
  ASSERT_FALSE(all.ok());
  opt.only_case = all.failures.front().index;
  const SuiteResult one = verify_superadditivity(opt);
  ASSERT_EQ(one.failures.size(), 1u);
  EXPECT_EQ(one.failures.front().detail, all.failures.front().detail);
}

}  // namespace
