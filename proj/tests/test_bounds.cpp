#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "symell/bounds.hpp"
#include "symell/errors.hpp"
#include "symell/fp.hpp"

using namespace symell;

namespace {
Bracket br(IneqId id, std::vector<double> v) { return bracket(id, v); }
double th(IneqId id, std::vector<double> v) { return theta_of(id, v); }
}  // namespace

TEST(Ineq, Names) {
  for (IneqId id : kAllIneqs) {
    const auto back = ineq_from_string(to_string(id));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, id);
  }
  EXPECT_FALSE(ineq_from_string("A11").has_value());
}

TEST(A5, EqualityAtXEqualsY) {
  const Bracket b = br(IneqId::A5, {1, 4, 4});
  EXPECT_EQ(th(IneqId::A5, {1, 4, 4}), 4.0);
  EXPECT_TRUE(fp::within_band(b.lo, b.mid, 2));
  EXPECT_TRUE(fp::within_band(b.mid, b.hi, 2));
  EXPECT_TRUE(equality_configuration(IneqId::A5, std::vector<double>{1, 4, 4}));
}

TEST(A5, SymbolTendsToArithmeticMean) {
  const double t = th(IneqId::A5, {1e12, 1, 9});
  EXPECT_NEAR(t, 5.0, 1e-10);
  const double t0 = th(IneqId::A5, {1e-12, 1, 9});
  EXPECT_NEAR(t0, 3.0, 1e-10);
}

TEST(A3, Symbol) {
  EXPECT_NEAR(th(IneqId::A3, {1, 1}), 1.2928932188134524, 1e-15);
  const Bracket b = br(IneqId::A3, {1, 1});
  EXPECT_LT(b.lo, b.mid);
  EXPECT_LT(b.mid, b.hi);
}

TEST(AX, Values) {
  const Bracket b = br(IneqId::AX, {0, 1, 4});
  EXPECT_EQ(b.lo, 2.0);
  EXPECT_EQ(b.mid, 2.0);
  EXPECT_EQ(b.hi, 2.5);
}

TEST(A9, UnitArguments) {
  const Bracket b = br(IneqId::A9, {1, 1, 1, 1});
  // 1 - 2^{-3/2}
  EXPECT_NEAR(b.mid, 1 - 1 / std::sqrt(8.0), 1e-15);
  EXPECT_LT(b.lo, b.mid);
  EXPECT_LT(b.mid, b.hi);
}

TEST(A6a, EqualityGivesOne) {
  EXPECT_EQ(th(IneqId::A6a, {2, 3, 3}), 1.0);
  const Bracket b = br(IneqId::A6a, {2, 3, 3});
  EXPECT_TRUE(fp::within_band(b.lo, b.hi, 2));
}

TEST(A8, Example) {
  const std::vector<double> v = {1, 1, 4, 2};
  const Bracket b = bracket(IneqId::A8, v);
  EXPECT_LT(b.lo, b.mid);
  EXPECT_LT(b.mid, b.hi);
  const auto [lo, hi] = theta_range(IneqId::A8, v);
  const double t = theta_of(IneqId::A8, v);
  EXPECT_GT(t, lo);
  EXPECT_LT(t, hi);
}

TEST(Ineq, Domain) {
  EXPECT_THROW(br(IneqId::A1, {0, 1}), DomainError);
  EXPECT_THROW(br(IneqId::A1, {1}), DomainError);
  EXPECT_THROW(br(IneqId::A9, {1, 1, -1, 1}), DomainError);
  EXPECT_THROW(br(IneqId::AX, {1, NAN, 1}), DomainError);
  EXPECT_NO_THROW(br(IneqId::AZ, {0, 1, 2, 3}));
  EXPECT_THROW(th(IneqId::A1, {1, 1}), DomainError);
  EXPECT_THROW(theta_range(IneqId::A9, std::vector<double>{1, 1, 1, 1}),
               DomainError);
}

// Every bracket holds, with a 4-ulp band, over a wide log-uniform range.
TEST(Ineq, FuzzedChainsHold) {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> lu(std::log(1e-6), std::log(1e6));
  for (IneqId id : kAllIneqs) {
    const IneqInfo& info = ineq_info(id);
    for (int i = 0; i < 2000; ++i) {
      std::vector<double> v(info.arity);
      for (double& a : v) a = std::exp(lu(gen));
      const Bracket b = bracket(id, v);
      ASSERT_TRUE(fp::le_band(b.lo, b.mid, 4)) << to_string(id) << " " << i;
      ASSERT_TRUE(fp::le_band(b.mid, b.hi, 4)) << to_string(id) << " " << i;
      if (info.has_theta) {
        const auto [lo, hi] = theta_range(id, v);
        const double t = theta_of(id, v);
        ASSERT_GE(t, lo * (1 - 1e-14)) << to_string(id);
        ASSERT_LE(t, hi * (1 + 1e-14)) << to_string(id);
      }
    }
  }
}

TEST(A3, SymbolIncreasesWithT) {
  double prev = 0;
  for (int i = 0; i <= 120; ++i) {
    const double t = std::pow(10.0, -6 + i * 0.1);
    const double s = th(IneqId::A3, {t, 1});
    EXPECT_GE(s, prev);
    prev = s;
  }
}
