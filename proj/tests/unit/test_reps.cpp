#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qdef/reps.hpp"

using namespace qdef;

namespace {
const ColourLabel kPlus = ColourLabel::plus();
const ColourLabel kMinus = ColourLabel::minus();
} // namespace

TEST(Aq1Unirrep, TrivialPlus) {
  const Unirrep r = build_aq1_unirrep(0, kPlus, QContext(0.5));
  EXPECT_EQ(r.dim(), 1);
  EXPECT_EQ(r.j0(0), 0.0);
  EXPECT_EQ(r.Jp(0, 0), 0.0);
  EXPECT_EQ(r.Jm(0, 0), 0.0);
  EXPECT_NEAR(r.casimir, 0.0, 1e-15);
}

TEST(Aq1Unirrep, TrivialMinusSitsAtTwiceFixedPoint) {
  const QContext ctx(0.3);
  const Unirrep r = build_aq1_unirrep(0, kMinus, ctx);
  EXPECT_NEAR(r.j0(0), 2.0 / (0.3 - 1.0), 1e-14);
}

TEST(Aq1Unirrep, DoubletAtQuarter) {
  const Unirrep r = build_aq1_unirrep(1, kPlus, QContext(0.25));
  EXPECT_NEAR(r.j0(0), 4.0 / 3.0, 1e-14);
  EXPECT_NEAR(r.j0(1), -2.0 / 3.0, 1e-14);
  EXPECT_NEAR(r.Jm(1, 0), 1.0, 1e-14);
  EXPECT_NEAR(r.Jp(0, 1), 1.0, 1e-14);
  EXPECT_NEAR(r.labels(0), 0.5, 0.0);
  EXPECT_NEAR(r.labels(1), -0.5, 0.0);
}

TEST(Aq1Unirrep, LoweringEntriesSymmetric) {
  const QContext ctx(0.7);
  const Unirrep r = build_aq1_unirrep(2, kMinus, ctx);
  const double expected = std::sqrt(oracle::qnum(1, 0.7) * oracle::qnum(2, 0.7));
  EXPECT_NEAR(r.Jm(1, 0), expected, 1e-14);
  EXPECT_NEAR(r.Jm(2, 1), expected, 1e-14);
  EXPECT_NEAR(max_abs(r.Jm - r.Jp.transpose()), 0.0, 0.0);
}

TEST(Aq1Unirrep, SpectraLieOnOppositeSidesOfBoundary) {
  for (double q : {0.3, 0.5, 0.9}) {
    const QContext ctx(q);
    for (int N = 0; N <= 6; ++N) {
      const Unirrep p = build_aq1_unirrep(N, kPlus, ctx);
      const Unirrep m = build_aq1_unirrep(N, kMinus, ctx);
      EXPECT_GT(p.j0.minCoeff(), ctx.fixed_point());
      EXPECT_LT(m.j0.maxCoeff(), ctx.fixed_point());
    }
  }
}

TEST(Aq1Unirrep, RejectsNegativeN) {
  EXPECT_THROW(build_aq1_unirrep(-1, kPlus, QContext(0.5)), InvalidArgument);
  EXPECT_THROW(build_suq2_unirrep(-2, QContext(0.5)), InvalidArgument);
}

TEST(SuQ2Unirrep, CasimirAndClassicalLimit) {
  const Unirrep r = build_suq2_unirrep(1, QContext(0.5));
  EXPECT_NEAR(r.casimir, oracle::qnum(0.5, 0.5) * oracle::qnum(1.5, 0.5),
              1e-14);
  EXPECT_NEAR(r.casimir, 0.7778, 1e-4);
  const Unirrep zero = build_suq2_unirrep(0, QContext(0.5));
  EXPECT_EQ(zero.j0(0), 0.0);
  const Unirrep c = build_suq2_unirrep(2, QContext(0.999));
  EXPECT_NEAR(c.j0(0), 1.0, 1e-15);
  EXPECT_NEAR(c.j0(1), 0.0, 1e-15);
  EXPECT_NEAR(c.j0(2), -1.0, 1e-15);
  EXPECT_NEAR(c.Jp(0, 1), std::sqrt(2.0), 0.01);
  EXPECT_NEAR(c.Jp(1, 2), std::sqrt(2.0), 0.01);
}

TEST(MapPDelta, ReproducesAq1Unirreps) {
  const QContext ctx(0.25);
  const Unirrep mapped = apply_map_p_delta(build_suq2_unirrep(1, ctx), kPlus);
  EXPECT_NEAR(mapped.j0(0), 4.0 / 3.0, 1e-14);
  EXPECT_NEAR(mapped.j0(1), -2.0 / 3.0, 1e-14);
  const Unirrep trivial = apply_map_p_delta(build_suq2_unirrep(0, ctx), kMinus);
  EXPECT_NEAR(trivial.j0(0), 2.0 / (0.25 - 1.0), 1e-14);
  for (double q : {0.3, 0.5, 0.9})
    for (int N = 0; N <= 6; ++N)
      for (ColourLabel d : kColours) {
        const QContext c(q);
        const Unirrep a = apply_map_p_delta(build_suq2_unirrep(N, c), d);
        const Unirrep b = build_aq1_unirrep(N, d, c);
        EXPECT_LE(max_abs(a.J0() - b.J0()), 1e-10);
        EXPECT_LE(max_abs(a.Jp - b.Jp), 1e-10);
        for (int n = 0; n <= N; ++n)
          EXPECT_NEAR(map_g(b.j0(n), c), N / 2.0 - n, 1e-12);
      }
  EXPECT_THROW(apply_map_p_delta(build_aq1_unirrep(1, kPlus, ctx), kPlus),
               InvalidArgument);
}

TEST(Commutation, ResidualsSmallOnGrid) {
  for (double q : {0.3, 0.5, 0.9})
    for (int N = 0; N <= 8; ++N)
      for (ColourLabel d : kColours) {
        const auto r = commutation_residuals(build_aq1_unirrep(N, d, QContext(q)));
        EXPECT_LE(r.max(), 1e-9) << "q=" << q << " N=" << N << " d=" << d.str();
      }
}

TEST(Casimir, QuarterAndHalfExamples) {
  const auto r = check_casimir(build_aq1_unirrep(1, kPlus, QContext(0.5)));
  EXPECT_NEAR(r.value, 7.0 / 9.0, 1e-12);
  EXPECT_TRUE(r.pass);
  const auto z = check_casimir(build_aq1_unirrep(0, kPlus, QContext(0.5)));
  EXPECT_NEAR(z.value, 0.0, 1e-15);
}

TEST(Casimir, ValueMatchesQNumberProduct) {
  for (double q : {0.3, 0.5, 0.9})
    for (int N = 0; N <= 6; ++N)
      for (ColourLabel d : kColours) {
        const auto rep = build_aq1_unirrep(N, d, QContext(q));
        const auto r = check_casimir(rep);
        const double oracle_value =
            oracle::qnum(N / 2.0, q) * oracle::qnum(N / 2.0 + 1, q);
        EXPECT_NEAR(r.value, oracle_value, 1e-9);
        EXPECT_LE(r.off_scalar, 1e-9);
        EXPECT_LE(r.alt_form_residual, 1e-9);
        EXPECT_NEAR(rep.casimir, oracle_value, 1e-9);
      }
}

TEST(Ladder, ExponentialChainViaGenericEngine) {
  const QContext ctx(0.5);
  const auto r = ladder_spectrum(make_catalog_algebra("aq1", ctx), 0.0, 3);
  ASSERT_GE(r.raise_chain.size(), 3u);
  EXPECT_NEAR(r.raise_chain[0], 2.0, 1e-14);
  EXPECT_NEAR(r.raise_chain[1], 6.0, 1e-13);
  EXPECT_NEAR(r.raise_chain[2], 14.0, 1e-13);
  EXPECT_NEAR(r.lower_chain[0], -1.0, 1e-14);
  EXPECT_EQ(r.side, SpectrumSide::Above);
}

TEST(Ladder, FixedPoint) {
  const QContext ctx(0.5);
  const auto r =
      ladder_spectrum(make_catalog_algebra("aq1", ctx), ctx.fixed_point(), 4);
  EXPECT_EQ(r.classification, LadderClass::FixedPoint);
  EXPECT_EQ(r.side, SpectrumSide::FixedPoint);
  for (double m : r.raise_chain)
    EXPECT_EQ(m, ctx.fixed_point());
  for (double m : r.lower_chain)
    EXPECT_EQ(m, ctx.fixed_point());
  EXPECT_EQ(to_string(LadderClass::FixedPoint), "fixed-point");
}

TEST(Ladder, LinearForPra) {
  const auto r = ladder_spectrum(make_catalog_algebra("suq2", QContext(0.5)), 0.0, 3);
  EXPECT_EQ(r.raise_chain, (std::vector<double>{1.0, 2.0, 3.0}));
  EXPECT_EQ(r.lower_chain, (std::vector<double>{-1.0, -2.0, -3.0}));
}

TEST(Ladder, TerminatesAtUnirrepCasimir) {
  for (double q : {0.3, 0.5, 0.9})
    for (int N = 0; N <= 6; ++N)
      for (ColourLabel d : kColours) {
        const QContext ctx(q);
        const auto rep = build_aq1_unirrep(N, d, ctx);
        for (int n = 0; n <= N; ++n) {
          const auto r = ladder_spectrum(rep.algebra, rep.j0(n), N + 1, rep.casimir);
          EXPECT_TRUE(r.raise_terminated && r.lower_terminated)
              << "q=" << q << " N=" << N << " n=" << n;
          EXPECT_EQ(r.classification, LadderClass::FiniteCandidate);
          EXPECT_LE(r.raise_steps + r.lower_steps, N);
          EXPECT_FALSE(r.unitarity_violated);
        }
      }
}

TEST(Ladder, RejectsBadSteps) {
  EXPECT_THROW(ladder_spectrum(make_catalog_algebra("aq1", QContext(0.5)), 0.0, 0),
               InvalidArgument);
}

TEST(Transmutation, DoubletExampleAndGrid) {
  const QContext ctx(0.25);
  const Unirrep plus = build_aq1_unirrep(1, kPlus, ctx);
  const Unirrep minus = build_aq1_unirrep(1, kMinus, ctx);
  for (int n = 0; n < 2; ++n)
    EXPECT_NEAR(2.0 / (0.25 - 1.0) - minus.j0(n), plus.j0(n), 1e-14);
  EXPECT_TRUE(transmute_check(plus, minus).pass);
  for (double q : {0.3, 0.5, 0.9})
    for (int N = 0; N <= 6; ++N) {
      const QContext c(q);
      const auto p = build_aq1_unirrep(N, kPlus, c);
      const auto m = build_aq1_unirrep(N, kMinus, c);
      EXPECT_LE(transmute_check(p, m).max(), 1e-10);
      EXPECT_LE(transmute_check(m, p).max(), 1e-10);
      EXPECT_EQ(max_abs(p.Jp - m.Jp), 0.0);
    }
  EXPECT_THROW(transmute_check(plus, plus), InvalidArgument);
  EXPECT_THROW(transmute_check(plus, build_aq1_unirrep(2, kMinus, ctx)),
               InvalidArgument);
}
