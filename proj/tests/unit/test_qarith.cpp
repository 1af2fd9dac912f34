#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qdef/qarith.hpp"

using namespace qdef;

TEST(QContext, RejectsParametersOutsideDomain) {
  EXPECT_THROW(QContext(0.0), InvalidArgument);
  EXPECT_THROW(QContext(1.0), InvalidArgument);
  EXPECT_THROW(QContext(-0.5), InvalidArgument);
  EXPECT_THROW(QContext(1.5), InvalidArgument);
  EXPECT_THROW(QContext(std::nan("")), InvalidArgument);
  EXPECT_THROW(QContext(0.5, -1.0), InvalidArgument);
  EXPECT_THROW(QContext(0.5, std::nullopt, 0.0), InvalidArgument);
  EXPECT_NO_THROW(QContext(0.5, 0.7));
}

TEST(QContext, ToleranceScalesWithOperand) {
  const QContext ctx(0.5);
  EXPECT_DOUBLE_EQ(ctx.tolerance(0.0), 1e-10);
  EXPECT_DOUBLE_EQ(ctx.tolerance(1e3), 1e-6);
  EXPECT_DOUBLE_EQ(ctx.fixed_point(), -2.0);
}

TEST(QNumber, KnownValues) {
  EXPECT_DOUBLE_EQ(q_number(0, QContext(0.5)), 0.0);
  EXPECT_NEAR(q_number(2, QContext(0.5)), 2.5, 1e-14);
  EXPECT_NEAR(q_number(3, QContext(0.999)), 3.0, 0.01);
}

TEST(QNumber, OddAndMatchesDefinition) {
  for (double q : {0.3, 0.5, 0.9}) {
    const QContext ctx(q);
    for (double x = -4.0; x <= 4.0; x += 0.25) {
      EXPECT_NEAR(q_number(-x, ctx), -q_number(x, ctx), ctx.tol_abs());
      EXPECT_NEAR(q_number(x, ctx), oracle::qnum(x, q),
                  1e-12 * std::max(1.0, std::abs(oracle::qnum(x, q))));
    }
  }
}

TEST(QFactorial, KnownValues) {
  EXPECT_DOUBLE_EQ(q_factorial(0, QContext(0.3)), 1.0);
  EXPECT_NEAR(q_factorial(3, QContext(0.5)), 13.125, 1e-12);
  EXPECT_THROW(q_factorial(-1, QContext(0.5)), InvalidArgument);
}

TEST(QFactorial, ClassicalLimit) {
  const QContext ctx(0.999);
  for (int n = 0; n <= 5; ++n) {
    const double classical = std::tgamma(n + 1.0);
    EXPECT_NEAR(q_factorial(n, ctx), classical, 0.01 * classical) << n;
  }
}

TEST(LadderMaps, RaiseChainFromZero) {
  const QContext ctx(0.5);
  double m = 0.0;
  const double expected[] = {2.0, 6.0, 14.0};
  for (double e : expected) {
    m = raise_map(m, ctx);
    EXPECT_DOUBLE_EQ(m, e);
  }
}

TEST(LadderMaps, FixedPointIsExact) {
  for (double q : {0.1, 0.3, 0.5, 0.7, 0.9, 0.999}) {
    const QContext ctx(q);
    EXPECT_EQ(raise_map(ctx.fixed_point(), ctx), ctx.fixed_point());
    EXPECT_EQ(lower_map(ctx.fixed_point(), ctx), ctx.fixed_point());
  }
}

TEST(LadderMaps, InversePairAndClosedForm) {
  for (double q : {0.3, 0.5, 0.9}) {
    const QContext ctx(q);
    EXPECT_NEAR(lower_map(raise_map(0.37, ctx), ctx), 0.37, 1e-14);
    EXPECT_NEAR(raise_map(lower_map(-1.7, ctx), ctx), -1.7, 1e-14);
    for (double m0 : {-3.0, 0.0, 0.37, 2.5}) {
      double up = m0, down = m0;
      for (int n = 1; n <= 12; ++n) {
        up = raise_map(up, ctx);
        down = lower_map(down, ctx);
        // Direct form of the n-step raise: m q^-n - (1 - q^-n)/(1 - q).
        const double qn = std::pow(q, -n);
        const double direct = m0 * qn - (1.0 - qn) / (1.0 - q);
        EXPECT_NEAR(raise_closed_form(m0, n, ctx), direct,
                    1e-12 * std::max(1.0, std::abs(direct)));
        EXPECT_NEAR(up, direct, 1e-10 * std::max(1.0, std::abs(direct)));
        EXPECT_NEAR(down, lower_closed_form(m0, n, ctx),
                    1e-12 * std::max(1.0, std::abs(down)));
      }
    }
  }
}
