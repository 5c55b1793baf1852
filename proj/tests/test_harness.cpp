#include <gtest/gtest.h>

#include <cmath>

#include "symell/harness.hpp"
#include "symell/report.hpp"

using namespace symell;

TEST(Sampling, Uniform01) {
  EXPECT_EQ(uniform01(0), 0.0);
  EXPECT_LT(uniform01(~0ull), 1.0);
  EXPECT_EQ(uniform01(1ull << 63), 0.5);
}

TEST(Sampling, RatioIsPinned) {
  for (CaseId id : kAllCases)
    for (const auto& v : sample_case(id, 1e-4, 20, 3)) {
      const double r = regime_ratio(id, v);
      EXPECT_NEAR(r, 1e-4, 1e-4 * 1e-12) << to_string(id);
    }
}

TEST(Sampling, Reproducible) {
  const auto a = sample_case(CaseId::J2a, 1e-3, 10, 99);
  const auto b = sample_case(CaseId::J2a, 1e-3, 10, 99);
  const auto c = sample_case(CaseId::J2a, 1e-3, 10, 100);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  // The first samples of a longer run are the same tuples.
  const auto d = sample_case(CaseId::J2a, 1e-3, 20, 99);
  EXPECT_TRUE(std::equal(a.begin(), a.end(), d.begin()));
}

TEST(Containment, ReproducibleAcrossThreadCounts) {
  Campaign c{CaseId::F1a, {1e-2, 1e-4}, 40, 5, 1};
  const CampaignReport one = run_containment(c);
  c.threads = 4;
  const CampaignReport four = run_containment(c);
  EXPECT_EQ(one.violations, 0);
  EXPECT_EQ(four.violations, 0);
  ASSERT_EQ(one.per_ratio.size(), four.per_ratio.size());
  for (size_t i = 0; i < one.per_ratio.size(); ++i)
    EXPECT_EQ(one.per_ratio[i].max_rel_width, four.per_ratio[i].max_rel_width);
  EXPECT_EQ(one.theta.inside, four.theta.inside);
}

TEST(Containment, DegenerateC1) {
  Campaign c{CaseId::C1, {1e-2}, 20, 1, 2, true};
  const CampaignReport r = run_containment(c);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.violations, 0);
  EXPECT_EQ(r.theta.outside, 0);
  EXPECT_EQ(r.theta.endpoint, 20);
}

TEST(Containment, G1aGatedWhenUpperEndpointDoesNotApply) {
  Campaign c{CaseId::G1a, {0.5, 0.9}, 30, 8, 2};
  const CampaignReport r = run_containment(c);
  EXPECT_EQ(r.violations, 0);
  for (const auto& pr : r.per_ratio) EXPECT_EQ(pr.gated, pr.samples);
}

TEST(Containment, SmallRunAllCases) {
  for (CaseId id : kAllCases) {
    Campaign c{id, {1e-2, 1e-3, 1e-4, 1e-5, 1e-6}, 20, 17, 0};
    const CampaignReport r = run_containment(c);
    EXPECT_EQ(r.violations, 0) << to_string(id);
    EXPECT_EQ(r.theta.outside, 0) << to_string(id);
  }
}

TEST(OrderFit, GridValidation) {
  EXPECT_THROW(run_order_fit(CaseId::F1a, {1e-3, 1e-4, 1e-5}, 1), GridError);
  EXPECT_THROW(run_order_fit(CaseId::F1a, {1e-3, 2e-3, 5e-3, 8e-3}, 1), GridError);
  const CampaignReport r =
      run_order_fit(CaseId::F1a, {1e-3, 1e-4, 1e-5, 1e-6, 1e-7}, 1, 16);
  ASSERT_TRUE(r.slope.has_value());
  ASSERT_TRUE(r.slope_ok.has_value());
  EXPECT_TRUE(*r.slope_ok) << *r.slope;
}

TEST(OrderFit, LogLogSlope) {
  const std::vector<double> x = {1, 10, 100, 1000};
  std::vector<double> y;
  for (double v : x) y.push_back(3 * std::pow(v, 1.5));
  EXPECT_NEAR(log_log_slope(x, y), 1.5, 1e-12);
}

TEST(ExpectedOrders, Table) {
  const ExpectedOrders& t = expected_orders();
  EXPECT_EQ(t.slack, 0.15);
  EXPECT_EQ(t.exponent.size(), kAllCases.size());
  EXPECT_THROW(parse_expected_orders(R"({"orders": {"Q9": {"exponent": 1}}})"),
               std::invalid_argument);
  const auto p = parse_expected_orders(
      R"({"slack": 0.2, "orders": {"F1a": {"exponent": 1}}})");
  EXPECT_EQ(p.slack, 0.2);
  EXPECT_EQ(p.exponent.at(CaseId::F1a), 1.0);
}

TEST(Sharpening, SmallRun) {
  for (const auto& r : run_sharpening({1e-3, 1e-5}, 50, 3))
    EXPECT_EQ(r.failures, 0) << to_string(r.sharper) << "/" << to_string(r.coarser);
}

TEST(Suites, Identities) {
  const SuiteReport r = run_identities(4, 300, 2);
  for (const auto& c : r.results)
    EXPECT_EQ(c.failures, 0) << c.id << " max " << c.max_error;
  EXPECT_GE(r.results.size(), 12u);
}

TEST(Suites, DualOracle) {
  const SuiteReport r = run_dual_oracle(4, 40, 1e-9, 2);
  for (const auto& c : r.results)
    EXPECT_EQ(c.failures, 0) << c.id << " max " << c.max_error;
}

TEST(Suites, Inequalities) {
  const std::vector<IneqId> ids(kAllIneqs.begin(), kAllIneqs.end());
  const SuiteReport r = run_inequalities(ids, 4, 2000);
  for (const auto& c : r.results)
    EXPECT_EQ(c.failures, 0) << c.id << " max " << c.max_error;
}

TEST(Suites, Dispatch) {
  const SuiteReport r = run_dispatch(4, 200, {1e-3, 1e-9}, 2);
  for (const auto& c : r.results)
    EXPECT_EQ(c.failures, 0) << c.id << " max " << c.max_error;
}

TEST(Suites, ReportIsDeterministic) {
  const SuiteReport a = run_identities(9, 50, 1);
  const SuiteReport b = run_identities(9, 50, 3);
  SuiteReport a2 = a, b2 = b;
  a2.wall_seconds = b2.wall_seconds = 0;
  EXPECT_EQ(to_json(a2), to_json(b2));
}

TEST(Truth, Request) {
  const Truth t = request_truth(EvalRequest{Kind::RJ, {1, 2, 3, -0.5}, 1e-9});
  EXPECT_NEAR(static_cast<double>(t.value), 0.20722001115871859006, 1e-12);
  const Truth k = request_truth(EvalRequest{Kind::RF, {0, 1, 2}, 1e-9});
  EXPECT_NEAR(static_cast<double>(k.value), 1.3110287771460599052, 1e-14);
}
