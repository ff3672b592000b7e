#include <gtest/gtest.h>

#include <supercong/harness.hpp>

using namespace supercong;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

VerificationRecord congruence(CaseKind kind, long p, long param = 0) {
  return verify_congruence_case({kind, param}, p);
}

void expect_record(const VerificationRecord& rec, Rational lhs, Rational rhs, long achieved) {
  EXPECT_TRUE(rec.error.empty()) << rec.error;
  EXPECT_EQ(rec.lhs, lhs) << rec.case_name();
  EXPECT_EQ(rec.rhs, rhs) << rec.case_name();
  ASSERT_TRUE(rec.achieved.has_value());
  EXPECT_EQ(*rec.achieved, Valuation::finite(achieved)) << rec.case_name();
  EXPECT_EQ(padic_valuation(lhs - rhs, rec.p), Valuation::finite(achieved));
  EXPECT_TRUE(rec.pass) << rec.case_name();
}

}  // namespace

TEST(Registry, NamesRoundTrip) {
  for (const auto& info : kCases) {
    auto kind = case_from_name(info.name);
    ASSERT_TRUE(kind.has_value()) << info.name;
    EXPECT_EQ(*kind, info.kind);
    EXPECT_EQ(&case_info(info.kind), &info);
  }
  EXPECT_EQ(case_from_name("eq0"), CaseKind::Eq0);
  EXPECT_EQ(case_from_name("nope"), std::nullopt);
  EXPECT_TRUE(case_info(CaseKind::Conj1).conjectural);
  EXPECT_TRUE(case_info(CaseKind::Thm4Strong).conjectural);
  EXPECT_TRUE(case_info(CaseKind::ComConj2).conjectural);
  EXPECT_FALSE(case_info(CaseKind::Thm4).conjectural);
}

TEST(CongruenceCases, PrimeFiveExamples) {
  expect_record(congruence(CaseKind::Eq0, 5), R(435, 512), R(5), 3);
  expect_record(congruence(CaseKind::Thm1, 5, 1), R(6105, 4096), R(5), 4);
  expect_record(congruence(CaseKind::Thm2, 5), R(289185, 262144), R(-10), 4);
  expect_record(congruence(CaseKind::Thm3, 5), R(10335, 8192), R(5), 4);
  expect_record(congruence(CaseKind::Thm4, 5), R(29535, 32768), R(-5), 3);
  expect_record(congruence(CaseKind::Kilbourn, 5), R(4433, 4096), R(-2), 3);
  expect_record(congruence(CaseKind::Cai, 5, 1), R(6), R(9, 64), 3);
}

TEST(CongruenceCases, DifferencesFactorAsExpected) {
  EXPECT_EQ(R(435, 512) - R(5), R(-125 * 17, 512));
  EXPECT_EQ(R(6105, 4096) - R(5), R(-625 * 23, 4096));
  EXPECT_EQ(R(289185, 262144) + R(10), R(625 * 4657, 262144));
  EXPECT_EQ(R(10335, 8192) - R(5), R(-625 * 49, 8192));
  EXPECT_EQ(R(29535, 32768) + R(5), R(125 * 1547, 32768));
  EXPECT_EQ(R(4433, 4096) + R(2), R(125 * 101, 4096));
  EXPECT_EQ(R(6) - R(9, 64), R(3 * 125, 64));
}

TEST(CongruenceCases, PrimeSevenValues) {
  expect_record(congruence(CaseKind::Eq0, 7), R(1855, 4096), R(-7), 3);
  expect_record(congruence(CaseKind::Thm1, 7, 1), R(105805, 65536), R(7), 6);
  expect_record(congruence(CaseKind::Thm2, 7), R(18710965, 16777216), R(7 * 24), 5);
  expect_record(congruence(CaseKind::Kilbourn, 7), R(71553, 65536), R(24), 3);
  expect_record(congruence(CaseKind::Thm3, 7), R(333095, 262144), R(-7), 5);
  expect_record(congruence(CaseKind::Thm4, 7), R(1887865, 2097152), R(-7), 3);
}

TEST(CongruenceCases, ThmKey) {
  VerificationRecord rec = congruence(CaseKind::ThmKey, 5, 1);
  EXPECT_EQ(rec.lhs, R(4725, 9216));
  EXPECT_EQ(*rec.achieved, Valuation::finite(2));
  EXPECT_TRUE(rec.pass);
  EXPECT_EQ(congruence(CaseKind::ThmKey, 7, 1).lhs, R(24269, 36864));
}

TEST(CongruenceCases, KilbournAtThree) {
  VerificationRecord rec = congruence(CaseKind::Kilbourn, 3);
  EXPECT_EQ(rec.lhs, R(17, 16));
  EXPECT_EQ(rec.rhs, R(-4));
  EXPECT_EQ(*rec.achieved, Valuation::finite(4));
  EXPECT_EQ(R(17, 16) + R(4), R(81, 16));
  EXPECT_TRUE(rec.pass);
}

TEST(CongruenceCases, SecondPowers) {
  expect_record(congruence(CaseKind::Thm1, 5, 2), congruence(CaseKind::Thm1, 5, 2).lhs, R(25), 5);
  VerificationRecord conj = congruence(CaseKind::Conj1, 5, 2);
  EXPECT_EQ(conj.rhs, R(25 * -121));
  EXPECT_EQ(*conj.achieved, Valuation::finite(5));
  EXPECT_TRUE(conj.conjectural);
  EXPECT_EQ(*congruence(CaseKind::Cai, 7, 2).achieved, Valuation::finite(3));
}

TEST(CongruenceCases, Conj1AtFirstPowerMatchesThm2) {
  for (long p : {5L, 7L, 11L, 13L}) {
    VerificationRecord c = congruence(CaseKind::Conj1, p, 1);
    VerificationRecord t = congruence(CaseKind::Thm2, p);
    EXPECT_EQ(c.lhs, t.lhs);
    EXPECT_EQ(c.rhs, t.rhs);
  }
}

TEST(CongruenceCases, RejectsSmallOrCompositePrimes) {
  EXPECT_THROW(congruence(CaseKind::Eq0, 3), Error);
  EXPECT_THROW(congruence(CaseKind::Eq0, 9), Error);
  EXPECT_THROW(congruence(CaseKind::Thm1, 5, 0), Error);
}

TEST(ExactCases, Examples) {
  VerificationRecord c0 = verify_exact_case({CaseKind::ComIden0}, 2);
  EXPECT_EQ(c0.lhs, R(1));
  EXPECT_TRUE(c0.pass);
  EXPECT_EQ(R(5) * (R(1) - R(2) + R(6, 5)), R(1));
  VerificationRecord c1 = verify_exact_case({CaseKind::ComIden1}, 5);
  EXPECT_EQ(c1.lhs, R(5));
  EXPECT_EQ(c1.rhs, R(5));
  EXPECT_EQ((R(5, 16) * R(3, 4)) / (R(-1, 4) * R(-3, 16)), R(5));
  VerificationRecord c2 = verify_exact_case({CaseKind::ComIden2}, 5);
  EXPECT_EQ(c2.lhs, R(-5));
  EXPECT_EQ(c2.rhs, R(-5));
  VerificationRecord l10 = verify_exact_case({CaseKind::Lemma10}, 5);
  EXPECT_EQ(l10.lhs, R(5));
  EXPECT_EQ(l10.rhs, R(5));
  EXPECT_TRUE(l10.pass);
  EXPECT_EQ(l10.achieved_str(), "equal");
  EXPECT_THROW(verify_exact_case({CaseKind::ComIden0}, 1), Error);
  EXPECT_THROW(verify_exact_case({CaseKind::ComIden1}, 4), Error);
  EXPECT_THROW(verify_exact_case({CaseKind::Eq0}, 5), Error);
}

TEST(ExactCases, IdentityDrawRecord) {
  VerificationRecord rec = verify_exact_case({CaseKind::Whipple7F6}, 3);
  EXPECT_EQ(rec.kind, CaseKind::Whipple7F6);
  EXPECT_EQ(rec.param, 3);
  EXPECT_TRUE(rec.pass);
}

TEST(SeriesCases, Examples) {
  VerificationRecord eq10 = verify_series_case(CaseKind::Eq10A2, 5);
  EXPECT_TRUE(eq10.pass);
  EXPECT_GE(*eq10.achieved, Valuation::finite(1));
  VerificationRecord quotient = verify_series_case(CaseKind::Thm3QuotientX2, 7);
  EXPECT_TRUE(quotient.pass);
  EXPECT_GE(*quotient.achieved, Valuation::finite(1));
  EXPECT_TRUE(verify_series_case(CaseKind::SixFFiveCoeffs, 5).pass);
  EXPECT_TRUE(verify_series_case(CaseKind::LemThm1B2k, 5).pass);
}

// (3/4)_2 (5/4)_2 / (2!)^2 = (21/16)(45/16)/4 = 945/1024.
TEST(SeriesCases, ExactDivisibility) {
  VerificationRecord rec = verify_series_case(CaseKind::ExactDivP, 5);
  EXPECT_EQ(rec.lhs, R(945, 1024));
  EXPECT_EQ(R(21, 16) * R(45, 16) / R(4), R(945, 1024));
  EXPECT_EQ(*rec.achieved, Valuation::finite(1));
  EXPECT_EQ(rec.required.str(), "v==1");
  EXPECT_TRUE(rec.pass);
}

TEST(RunSuite, SmallRangeAllPass) {
  SuiteConfig config;
  config.pmin = 5;
  config.pmax = 7;
  auto records = run_suite(config);
  ASSERT_FALSE(records.empty());
  for (const auto& r : records) {
    EXPECT_TRUE(r.pass) << r.case_name() << " p=" << r.p << " " << r.achieved_str();
  }
  EXPECT_TRUE(all_required_pass(records));
}

TEST(RunSuite, EmptyRange) {
  SuiteConfig config;
  config.pmin = 8;
  config.pmax = 10;
  EXPECT_TRUE(run_suite(config).empty());
  config.pmin = 7;
  config.pmax = 5;
  EXPECT_TRUE(run_suite(config).empty());
}

TEST(RunSuite, PrimeThreeOnlyRunsKilbourn) {
  SuiteConfig config;
  config.pmin = 3;
  config.pmax = 3;
  auto records = run_suite(config);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].kind, CaseKind::Kilbourn);
  EXPECT_EQ(*records[0].achieved, Valuation::finite(4));
}

TEST(RunSuite, BudgetOverrunBecomesFailedRecord) {
  SuiteConfig config;
  config.pmin = 11;
  config.pmax = 11;
  config.rs = {2};
  config.budget = 100;
  config.cases = {CaseKind::Conj1};
  auto records = run_suite(config);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_FALSE(records[0].pass);
  EXPECT_FALSE(records[0].error.empty());
  EXPECT_TRUE(records[0].conjectural);
  EXPECT_TRUE(all_required_pass(records));
}

TEST(RunSuite, FailingRequiredRecordFailsSuite) {
  VerificationRecord bad;
  bad.kind = CaseKind::Eq0;
  bad.pass = false;
  EXPECT_FALSE(all_required_pass({bad}));
  bad.conjectural = true;
  EXPECT_TRUE(all_required_pass({bad}));
}
