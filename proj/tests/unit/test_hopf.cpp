#include <algorithm>
#include <cmath>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>
#include <gtest/gtest.h>

#include "qdef/hopf.hpp"

using namespace qdef;
using Eigen::kroneckerProduct;

namespace {
const ColourLabel kPlus = ColourLabel::plus();
const ColourLabel kMinus = ColourLabel::minus();

Matrix eye(int n) { return Matrix::Identity(n, n); }

// Permutation taking V1 (x) V3 (x) V2 to V1 (x) V2 (x) V3.
Matrix swap_last_two(int d1, int d2, int d3) {
  const int D = d1 * d2 * d3;
  Matrix P = Matrix::Zero(D, D);
  for (int a = 0; a < d1; ++a)
    for (int b = 0; b < d2; ++b)
      for (int c = 0; c < d3; ++c)
        P(a * d2 * d3 + b * d3 + c, a * d3 * d2 + c * d2 + b) = 1.0;
  return P;
}

// Flip on V1 (x) V2: v (x) w -> w (x) v.
Matrix flip(int d1, int d2) {
  Matrix P = Matrix::Zero(d1 * d2, d1 * d2);
  for (int a = 0; a < d1; ++a)
    for (int b = 0; b < d2; ++b)
      P(b * d1 + a, a * d2 + b) = 1.0;
  return P;
}

double ybe_residual(const Unirrep& r1, const Unirrep& r2, const Unirrep& r3) {
  const int d1 = r1.dim(), d2 = r2.dim(), d3 = r3.dim();
  const Matrix R12 = kroneckerProduct(r_matrix(r1, r2), eye(d3)).eval();
  const Matrix R23 = kroneckerProduct(eye(d1), r_matrix(r2, r3)).eval();
  const Matrix P = swap_last_two(d1, d2, d3);
  const Matrix R13 =
      P * kroneckerProduct(r_matrix(r1, r3), eye(d2)).eval() * P.transpose();
  return max_abs(R12 * R13 * R23 - R23 * R13 * R12);
}
} // namespace

TEST(Sigma, InvolutionAndAffineImage) {
  const QContext ctx(0.5);
  for (int N = 0; N <= 3; ++N)
    for (ColourLabel d : kColours) {
      const Realization V = realize(build_aq1_unirrep(N, d, ctx));
      const Realization s = sigma_realization(V, kMinus);
      const Realization ss = sigma_realization(s, kMinus);
      for (Generator g : kGenerators)
        EXPECT_LE(max_abs(ss.eval(g) - V.eval(g)), 1e-14);
      const Matrix G = V.eval(Factor{Factor::Kind::G, kPlus});
      const Matrix sG = s.eval(Factor{Factor::Kind::G, kPlus});
      EXPECT_LE(max_abs(sG + G), 1e-14);
      EXPECT_LE(max_abs(sigma_realization(V, kPlus).eval(Generator::J0) -
                        V.eval(Generator::J0)),
                0.0);
    }
}

TEST(Sigma, DoubletMatrixAtQuarter) {
  const QContext ctx(0.25);
  const Realization V = realize(build_aq1_unirrep(1, kPlus, ctx));
  const Matrix sj0 = sigma_realization(V, kMinus).eval(Generator::J0);
  EXPECT_NEAR(sj0(0, 0), -4.0, 1e-14);
  EXPECT_NEAR(sj0(1, 1), -2.0, 1e-14);
  const Unirrep partner = build_aq1_unirrep(1, kMinus, ctx);
  EXPECT_LE(max_abs(sj0 - partner.J0()), 1e-14);
}

TEST(Counit, Values) {
  const QContext ctx(0.3);
  EXPECT_EQ(counit(Generator::J0, kPlus, ctx), 0.0);
  EXPECT_NEAR(counit(Generator::J0, kMinus, ctx), 2.0 / (0.3 - 1.0), 1e-15);
  for (ColourLabel d : kColours) {
    EXPECT_EQ(counit(Generator::Jplus, d, ctx), 0.0);
    EXPECT_EQ(counit(Generator::Jminus, d, ctx), 0.0);
  }
}

TEST(Coproduct, TrivialTensorTrivial) {
  const QContext ctx(0.5);
  const Unirrep t = build_aq1_unirrep(0, kPlus, ctx);
  const Matrix d = coproduct_matrix(Generator::J0, t, t, kPlus);
  ASSERT_EQ(d.rows(), 1);
  EXPECT_NEAR(d(0, 0), 0.0, 1e-15);
}

TEST(Coproduct, SingleColourForm) {
  const QContext ctx(0.5);
  for (ColourLabel d : kColours) {
    const Unirrep r1 = build_aq1_unirrep(1, d, ctx);
    const Unirrep r2 = build_aq1_unirrep(2, d, ctx);
    for (Generator g : {Generator::Jplus, Generator::Jminus}) {
      const Matrix A1 = g == Generator::Jplus ? r1.Jp : r1.Jm;
      const Matrix A2 = g == Generator::Jplus ? r2.Jp : r2.Jm;
      const Matrix expected =
          d.value() * (kroneckerProduct(A1, r2.Ginv()).eval() +
                       kroneckerProduct(r1.G(), A2).eval());
      EXPECT_LE(max_abs(coproduct_matrix(g, r1, r2, d) - expected), 1e-13);
    }
  }
}

TEST(Coproduct, DoubletSquaredSpectrum) {
  const QContext ctx(0.5);
  const Unirrep r = build_aq1_unirrep(1, kPlus, ctx);
  const Matrix d0 = coproduct_matrix(Generator::J0, r, r, kPlus);
  Eigen::SelfAdjointEigenSolver<Matrix> es(d0);
  std::vector<double> got(es.eigenvalues().data(), es.eigenvalues().data() + 4);
  std::vector<double> want;
  for (int N : {2, 0}) {
    const Unirrep b = build_aq1_unirrep(N, kPlus, ctx);
    want.insert(want.end(), b.j0.data(), b.j0.data() + b.dim());
  }
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  for (int i = 0; i < 4; ++i)
    EXPECT_NEAR(got[i], want[i], 1e-12);
}

TEST(Coproduct, ColourMismatchRejected) {
  const QContext ctx(0.5);
  const Unirrep r1 = build_aq1_unirrep(1, kPlus, ctx);
  const Unirrep r2 = build_aq1_unirrep(1, kMinus, ctx);
  EXPECT_THROW(coproduct_matrix(Generator::J0, r1, r2, kPlus, kPlus, kPlus),
               ColourMismatch);
  EXPECT_NO_THROW(coproduct_matrix(Generator::J0, r1, r2, kPlus, kMinus, kPlus));
}

TEST(Coproduct, HomomorphismOnAllColours) {
  for (double q : {0.3, 0.5, 0.9})
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b) {
        const auto rep = check_coproduct_homomorphism(a, b, QContext(q));
        EXPECT_TRUE(rep.all_pass());
        EXPECT_EQ(rep.count("coproduct.homomorphism"), 8u);
      }
}

TEST(Antipode, GeneratorImages) {
  const QContext ctx(0.5);
  for (int N = 0; N <= 4; ++N)
    for (ColourLabel d : kColours) {
      const Unirrep r = build_aq1_unirrep(N, d, ctx);
      for (ColourLabel z : kColours) {
        EXPECT_LE(max_abs(antipode_matrix(Generator::Jplus, r, z, d) +
                          0.5 * r.Jp),
                  1e-15);
        EXPECT_LE(max_abs(antipode_matrix(Generator::Jminus, r, z, d) +
                          2.0 * r.Jm),
                  1e-15);
      }
      // zeta*delta = +1 collapses to -J0 G^-1.
      EXPECT_LE(max_abs(antipode_matrix(Generator::J0, r, d, d) +
                        r.J0() * r.Ginv()),
                1e-12);
    }
  const Unirrep t = build_aq1_unirrep(0, kPlus, ctx);
  EXPECT_NEAR(antipode_matrix(Generator::J0, t, kPlus, kPlus)(0, 0), 0.0, 1e-15);
}

TEST(Antipode, InverseComposesToIdentity) {
  const QContext ctx(0.3);
  for (ColourLabel mu : kColours)
    for (ColourLabel eta : kColours) {
      const Realization V = realize(build_aq1_unirrep(2, mu * eta, ctx));
      const Realization SoSi =
          antipode_realization(antipode_inverse_realization(V, mu, eta), mu, eta);
      for (Generator g : kGenerators)
        EXPECT_LE(max_abs(SoSi.eval(g) - V.eval(g)), 1e-12) << to_string(g);
    }
}

TEST(HopfAxioms, FullColourSweepTriplet) {
  const auto rep = check_hopf_axioms({1, 1, 1}, QContext(0.5));
  EXPECT_TRUE(rep.all_pass());
  EXPECT_EQ(rep.count("coassociativity"), 64u);
  EXPECT_LE(rep.max_residual(), 1e-9);
  EXPECT_GT(rep.count("counit.left"), 0u);
  EXPECT_GT(rep.count("antipode.right"), 0u);
}

TEST(HopfAxioms, AntipodeOnRaisingIsZero) {
  const QContext ctx(0.5);
  const Realization V = realize(build_aq1_unirrep(2, kPlus, ctx));
  const TensorElement D = coproduct(Generator::Jplus, kPlus, kPlus, kPlus, ctx);
  const Matrix lhs = eval_product(D, antipode_realization(V, kPlus, kPlus), V);
  EXPECT_LE(max_abs(lhs), 1e-13);
}

TEST(SigmaLaws, AllAssignments) {
  for (double q : {0.3, 0.5, 0.9}) {
    const auto rep = check_sigma_laws(1, 2, QContext(q));
    EXPECT_TRUE(rep.all_pass());
    EXPECT_EQ(rep.count("sigma.coproduct"), 64u);
  }
}

TEST(RMatrix, TrivialIsIdentity) {
  const QContext ctx(0.5);
  for (ColourLabel z : kColours)
    for (ColourLabel e : kColours) {
      const Matrix R =
          r_matrix(build_aq1_unirrep(0, z, ctx), build_aq1_unirrep(0, e, ctx));
      ASSERT_EQ(R.rows(), 1);
      EXPECT_NEAR(R(0, 0), 1.0, 1e-15);
    }
}

TEST(RMatrix, IntertwinesCoproductAndFlip) {
  const QContext ctx(0.5);
  for (ColourLabel z : kColours)
    for (ColourLabel e : kColours) {
      const Unirrep r1 = build_aq1_unirrep(1, z, ctx);
      const Unirrep r2 = build_aq1_unirrep(2, e, ctx);
      const Matrix R = r_matrix(r1, r2);
      const Matrix P = flip(r2.dim(), r1.dim());
      for (ColourLabel d : kColours)
        for (Generator g : kGenerators) {
          const Matrix lhs = P * coproduct_matrix(g, r2, r1, d) * P.transpose();
          const Matrix rhs = R * coproduct_matrix(g, r1, r2, d) * R.inverse();
          EXPECT_LE(max_abs(lhs - rhs), 1e-9);
        }
    }
}

TEST(RMatrix, ChecksPassForAllPairs) {
  for (double q : {0.3, 0.5, 0.9})
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b) {
        const auto rep = check_r_matrix(a, b, QContext(q));
        EXPECT_TRUE(rep.all_pass()) << rep.first_failure()->identity;
        EXPECT_GT(rep.count("r.sigma_covariance"), 0u);
        EXPECT_GT(rep.count("r.antipode"), 0u);
      }
}

TEST(RMatrix, SeriesTerminatesOnFiniteReps) {
  const QContext ctx(0.5);
  const Unirrep r = build_aq1_unirrep(2, kPlus, ctx);
  const auto s = evaluate_series(make_r_series(kPlus, kPlus, ctx), realize(r),
                                 realize(r));
  EXPECT_EQ(s.terms, 3);
  EXPECT_EQ(s.truncation_residual, 0.0);
  EXPECT_LE(max_abs(s.value - r_matrix(r, r)), 1e-15);
}

TEST(YBE, IndependentTripleProductAllColours) {
  for (double q : {0.3, 0.5, 0.9})
    for (ColourLabel z : kColours)
      for (ColourLabel e : kColours)
        for (ColourLabel m : kColours) {
          const QContext ctx(q);
          const double r = ybe_residual(build_aq1_unirrep(1, z, ctx),
                                        build_aq1_unirrep(2, e, ctx),
                                        build_aq1_unirrep(1, m, ctx));
          EXPECT_LE(r, 1e-8);
        }
}

TEST(YBE, TrivialSlotReducesToPair) {
  const QContext ctx(0.5);
  const Unirrep a = build_aq1_unirrep(2, kPlus, ctx);
  const Unirrep t = build_aq1_unirrep(0, kMinus, ctx);
  const Unirrep c = build_aq1_unirrep(1, kMinus, ctx);
  EXPECT_LE(max_abs(r_matrix(a, t) - eye(3)), 1e-15);
  EXPECT_LE(ybe_residual(a, t, c), 1e-12);
}

TEST(YBE, LibrarySweepMatches) {
  const auto rep = check_coloured_ybe({1, 1, 1}, QContext(0.5));
  EXPECT_EQ(rep.count("ybe"), 8u);
  EXPECT_TRUE(rep.all_pass());
  EXPECT_LE(rep.max_residual(), 1e-8);
}

TEST(Quasitriangularity, FissionBothSides) {
  const auto rep = check_quasitriangularity({1, 2, 1}, QContext(0.5));
  EXPECT_TRUE(rep.all_pass());
  EXPECT_GT(rep.count("r.fission_left"), 0u);
  EXPECT_GT(rep.count("r.fission_right"), 0u);
}
