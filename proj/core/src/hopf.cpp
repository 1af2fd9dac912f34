#include "qdef/hopf.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qdef {

std::string_view to_string(Generator g) {
  switch (g) {
  case Generator::J0:
    return "J0";
  case Generator::Jplus:
    return "J+";
  case Generator::Jminus:
    return "J-";
  }
  return "?";
}

Factor Factor::of(Generator g) {
  switch (g) {
  case Generator::J0:
    return {Kind::J0};
  case Generator::Jplus:
    return {Kind::Jplus};
  case Generator::Jminus:
    return {Kind::Jminus};
  }
  return {Kind::J0};
}

TensorElement TensorElement::flipped() const {
  TensorElement out;
  out.terms.reserve(terms.size());
  for (const auto& t : terms)
    out.terms.push_back({t.coef, t.right, t.left});
  return out;
}

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double fixed_point(double q) { return 1.0 / (q - 1.0); }

} // namespace

Vector Realization::g_diag() const {
  return (Vector::Ones(dim()) + (1.0 - q) * j0).eval();
}

Matrix Realization::eval(const Factor& f) const {
  using K = Factor::Kind;
  switch (f.kind) {
  case K::J0:
    return j0.asDiagonal();
  case K::Jplus:
    return jp;
  case K::Jminus:
    return jm;
  case K::G:
    return g_diag().asDiagonal();
  case K::Ginv: {
    const Vector g = g_diag();
    for (Eigen::Index i = 0; i < g.size(); ++i)
      if (g(i) == 0.0)
        throw ColourMismatch("G(J0) is singular on this carrier space");
    return g.cwiseInverse().asDiagonal();
  }
  case K::LogQ: {
    const Vector g = f.colour.sign() * g_diag();
    Vector out(g.size());
    for (Eigen::Index i = 0; i < g.size(); ++i) {
      if (!(g(i) > 0.0)) {
        std::ostringstream os;
        os << "log_q(" << f.colour.str() << " G(J0)) meets eigenvalue " << g(i)
           << ": carrier colour does not match";
        throw ColourMismatch(os.str());
      }
      out(i) = std::log(g(i)) / std::log(q);
    }
    return out.asDiagonal();
  }
  }
  return {};
}

Matrix Realization::eval(const GeneratorWord& w) const {
  Matrix out = w.scalar * identity();
  if (anti) {
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
      out = out * eval(*it);
  } else {
    for (const auto& f : w.factors)
      out = out * eval(f);
  }
  return out;
}

Matrix Realization::eval(const Element& e) const {
  Matrix out = Matrix::Zero(dim(), dim());
  for (const auto& w : e.terms)
    out += eval(w);
  return out;
}

Realization realize(const Unirrep& rep) {
  if (rep.algebra.catalog() != CatalogName::Aq1)
    throw InvalidArgument("Hopf maps are defined for A+_q(1) unirreps, got '" +
                          rep.algebra.name() + "'");
  return Realization{rep.j0, rep.Jp, rep.Jm, false, rep.ctx().q()};
}

Realization sigma_realization(const Realization& base, ColourLabel c) {
  if (c == ColourLabel::plus())
    return base;
  Realization out = base;
  out.j0 = (2.0 * fixed_point(base.q) * Vector::Ones(base.dim()) - base.j0)
               .eval();
  return out;
}

Realization counit_realization(ColourLabel c, const QContext& ctx) {
  Realization out;
  out.q = ctx.q();
  out.j0 = Vector::Constant(1, counit(Generator::J0, c, ctx));
  out.jp = Matrix::Zero(1, 1);
  out.jm = Matrix::Zero(1, 1);
  return out;
}

namespace {

Realization antipode_like(const Realization& base, double colour_sign,
                          double jp_factor, double jm_factor) {
  Realization out = base;
  const Vector g = base.g_diag();
  for (Eigen::Index i = 0; i < g.size(); ++i)
    if (g(i) == 0.0)
      throw ColourMismatch("antipode: G(J0) is singular on this carrier");
  out.j0 = ((Vector::Ones(base.dim()) - colour_sign * g.cwiseInverse()) *
            fixed_point(base.q))
               .eval();
  out.jp = jp_factor * base.jp;
  out.jm = jm_factor * base.jm;
  out.anti = !base.anti;
  return out;
}

} // namespace

Realization antipode_realization(const Realization& base, ColourLabel zeta,
                                 ColourLabel delta) {
  return antipode_like(base, (zeta * delta).sign(), -base.q, -1.0 / base.q);
}

Realization antipode_inverse_realization(const Realization& base,
                                         ColourLabel mu, ColourLabel eta) {
  return antipode_like(base, (mu * eta).sign(), -1.0 / base.q, -base.q);
}

Realization coproduct_realization(const Realization& X, const Realization& Y,
                                  ColourLabel zeta, ColourLabel eta,
                                  ColourLabel delta) {
  if (X.anti || Y.anti)
    throw InvalidArgument("coproduct_realization needs homomorphic slots");
  const QContext ctx(X.q);
  Realization out;
  out.q = X.q;
  const Matrix j0 =
      eval_tensor(coproduct(Generator::J0, zeta, eta, delta, ctx), X, Y);
  out.j0 = j0.diagonal();
  out.jp = eval_tensor(coproduct(Generator::Jplus, zeta, eta, delta, ctx), X, Y);
  out.jm =
      eval_tensor(coproduct(Generator::Jminus, zeta, eta, delta, ctx), X, Y);
  return out;
}

Element sigma_apply(Generator g, ColourLabel c, const QContext& ctx) {
  if (c == ColourLabel::plus() || g != Generator::J0)
    return Element{{GeneratorWord::of(g)}};
  return Element{{GeneratorWord::unit(2.0 * ctx.fixed_point()),
                  GeneratorWord::of(Generator::J0, -1.0)}};
}

TensorElement coproduct(Generator g, ColourLabel zeta, ColourLabel eta,
                        ColourLabel delta, const QContext& ctx) {
  using K = Factor::Kind;
  const double fp = ctx.fixed_point();
  switch (g) {
  case Generator::J0:
    return TensorElement{
        {{fp, GeneratorWord::unit(), GeneratorWord::unit()},
         {-(delta * zeta * eta).sign() * fp, GeneratorWord{1.0, {{K::G}}},
          GeneratorWord{1.0, {{K::G}}}}}};
  case Generator::Jplus:
  case Generator::Jminus:
    return TensorElement{
        {{eta.sign(), GeneratorWord::of(g), GeneratorWord{1.0, {{K::Ginv}}}},
         {zeta.sign(), GeneratorWord{1.0, {{K::G}}}, GeneratorWord::of(g)}}};
  }
  return {};
}

double counit(Generator g, ColourLabel delta, const QContext& ctx) {
  if (g != Generator::J0)
    return 0.0;
  return (1.0 - delta.sign()) * ctx.fixed_point();
}

Element antipode(Generator g, ColourLabel zeta, ColourLabel delta,
                 const QContext& ctx) {
  using K = Factor::Kind;
  switch (g) {
  case Generator::J0:
    return Element{{GeneratorWord::unit(ctx.fixed_point()),
                    GeneratorWord{-(zeta * delta).sign() * ctx.fixed_point(),
                                  {{K::Ginv}}}}};
  case Generator::Jplus:
    return Element{{GeneratorWord::of(g, -ctx.q())}};
  case Generator::Jminus:
    return Element{{GeneratorWord::of(g, -1.0 / ctx.q())}};
  }
  return {};
}

Matrix eval_tensor(const TensorElement& t, const Realization& X,
                   const Realization& Y) {
  Matrix out = Matrix::Zero(X.dim() * Y.dim(), X.dim() * Y.dim());
  for (const auto& term : t.terms)
    out += term.coef * kron(X.eval(term.left), Y.eval(term.right));
  return out;
}

Matrix eval_product(const TensorElement& t, const Realization& X,
                    const Realization& Y) {
  if (X.dim() != Y.dim())
    throw InvalidArgument("eval_product: slots act on different spaces");
  Matrix out = Matrix::Zero(X.dim(), X.dim());
  for (const auto& term : t.terms)
    out += term.coef * X.eval(term.left) * Y.eval(term.right);
  return out;
}

namespace {

void require_colour(const Unirrep& rep, ColourLabel c, const char* slot) {
  if (rep.delta != c)
    throw ColourMismatch(std::string(slot) + " carries colour " +
                         rep.delta.str() + " but the map expects " + c.str());
}

} // namespace

Matrix coproduct_matrix(Generator g, const Unirrep& rep1, const Unirrep& rep2,
                        ColourLabel zeta, ColourLabel eta, ColourLabel delta) {
  require_colour(rep1, zeta, "first factor");
  require_colour(rep2, eta, "second factor");
  return eval_tensor(coproduct(g, zeta, eta, delta, rep1.ctx()), realize(rep1),
                     realize(rep2));
}

Matrix coproduct_matrix(Generator g, const Unirrep& rep1, const Unirrep& rep2,
                        ColourLabel delta) {
  return coproduct_matrix(g, rep1, rep2, rep1.delta, rep2.delta, delta);
}

Matrix antipode_matrix(Generator g, const Unirrep& rep, ColourLabel zeta,
                       ColourLabel delta) {
  return antipode_realization(realize(rep), zeta, delta).eval(g);
}

double RSeries::coefficient(int n) const {
  const QContext ctx(q);
  return std::pow(1.0 - 1.0 / (q * q), n) * std::pow(q, n * (n - 1) / 2.0) /
         q_factorial(n, ctx);
}

GeneratorWord RSeries::left_word() const {
  return GeneratorWord{zeta.sign(),
                       {{Factor::Kind::Ginv}, {Factor::Kind::Jplus}}};
}

GeneratorWord RSeries::right_word() const {
  return GeneratorWord{eta.sign(), {{Factor::Kind::G}, {Factor::Kind::Jminus}}};
}

RSeries make_r_series(ColourLabel zeta, ColourLabel eta, const QContext& ctx) {
  return RSeries{zeta, eta, ctx.q()};
}

SeriesEvaluation evaluate_series(const RSeries& rs, const Realization& X,
                                 const Realization& Y) {
  const int dx = X.dim();
  const int dy = Y.dim();
  const Vector a = X.eval(rs.left_log()).diagonal();
  const Vector b = Y.eval(rs.right_log()).diagonal();

  Vector prefactor(dx * dy);
  const double lnq = std::log(rs.q);
  for (int i = 0; i < dx; ++i)
    for (int j = 0; j < dy; ++j)
      prefactor(i * dy + j) = std::exp(2.0 * lnq * a(i) * b(j));

  const Matrix A1 = X.eval(rs.left_word());
  const Matrix B1 = Y.eval(rs.right_word());
  const Matrix Ix = X.identity();
  const Matrix Iy = Y.identity();

  // Each slot contributes word^n after the prefactor when it is a
  // homomorphism and before it when it reverses products.
  auto term = [&](const Matrix& An, const Matrix& Bn) -> Matrix {
    const Matrix left = kron(X.anti ? An : Ix, Y.anti ? Bn : Iy);
    const Matrix right = kron(X.anti ? Ix : An, Y.anti ? Iy : Bn);
    return left * prefactor.asDiagonal() * right;
  };

  SeriesEvaluation out;
  out.terms = std::min(dx, dy);
  out.value = Matrix::Zero(dx * dy, dx * dy);
  Matrix An = Ix;
  Matrix Bn = Iy;
  for (int n = 0; n < out.terms; ++n) {
    out.value += rs.coefficient(n) * term(An, Bn);
    An = (An * A1).eval();
    Bn = (Bn * B1).eval();
  }
  out.truncation_residual =
      max_abs(rs.coefficient(out.terms) * term(An, Bn));
  return out;
}

Matrix r_matrix(const Unirrep& rep1, const Unirrep& rep2) {
  return evaluate_series(make_r_series(rep1.delta, rep2.delta, rep1.ctx()),
                         realize(rep1), realize(rep2))
      .value;
}

Matrix embed_pair(const Matrix& m, int a, int b, std::array<int, 3> dims) {
  if (!(0 <= a && a < b && b <= 2))
    throw InvalidArgument("embed_pair: slots must satisfy 0 <= a < b <= 2");
  const int spectator = 3 - a - b;
  const int total = dims[0] * dims[1] * dims[2];
  if (m.rows() != dims[a] * dims[b] || m.cols() != dims[a] * dims[b])
    throw InvalidArgument("embed_pair: operator size does not match slots");

  auto split = [&](int idx) {
    std::array<int, 3> out{};
    out[2] = idx % dims[2];
    idx /= dims[2];
    out[1] = idx % dims[1];
    out[0] = idx / dims[1];
    return out;
  };

  Matrix out = Matrix::Zero(total, total);
  for (int r = 0; r < total; ++r) {
    const auto ri = split(r);
    for (int c = 0; c < total; ++c) {
      const auto ci = split(c);
      if (ri[spectator] != ci[spectator])
        continue;
      out(r, c) =
          m(ri[a] * dims[b] + ri[b], ci[a] * dims[b] + ci[b]);
    }
  }
  return out;
}

RelationResiduals relation_residuals(const Realization& r) {
  if (r.anti)
    throw InvalidArgument("relation_residuals needs a homomorphism");
  const double q = r.q;
  const Vector g = r.g_diag();
  Vector f(g.size());
  for (Eigen::Index i = 0; i < g.size(); ++i) {
    const double g2 = g(i) * g(i);
    f(i) = -(g2 - 1.0 / g2) / (q - 1.0 / q);
  }
  const Matrix J0 = r.j0.asDiagonal();
  const Matrix G = g.asDiagonal();
  const Matrix F = f.asDiagonal();
  RelationResiduals out;
  out.raise = max_abs(J0 * r.jp - r.jp * J0 - G * r.jp);
  out.lower = max_abs(J0 * r.jm - r.jm * J0 + r.jm * G);
  out.cross = max_abs(r.jp * r.jm - r.jm * r.jp - F);
  out.scale = std::max({max_abs(J0), max_abs(r.jp), max_abs(F),
                        max_abs(r.jp * r.jm)});
  return out;
}

// ---------------------------------------------------------------------------
// Identity sweeps

namespace {

struct Diff {
  double residual = 0.0;
  double scale = 0.0;

  void take(const Matrix& lhs, const Matrix& rhs) {
    residual = std::max(residual, max_abs(lhs - rhs));
    scale = std::max({scale, max_abs(lhs), max_abs(rhs)});
  }
};

IdentityRecord make_record(std::string name,
                           std::initializer_list<ColourLabel> colours,
                           std::vector<int> dims, const QContext& ctx,
                           const Diff& d) {
  IdentityRecord r;
  r.identity = std::move(name);
  for (ColourLabel c : colours)
    r.colours.push_back(c.value());
  r.dims = std::move(dims);
  r.q = ctx.q();
  r.residual = d.residual;
  r.scale = d.scale;
  r.pass = std::isfinite(d.residual) && ctx.within(d.residual, d.scale);
  return r;
}

Realization rep_of(int N, ColourLabel c, const QContext& ctx) {
  return realize(build_aq1_unirrep(N, c, ctx));
}

Matrix inverse(const Matrix& m) { return m.fullPivLu().inverse(); }

} // namespace

VerificationReport check_coproduct_homomorphism(int N1, int N2,
                                                const QContext& ctx) {
  VerificationReport report;
  for (ColourLabel zeta : kColours)
    for (ColourLabel eta : kColours)
      for (ColourLabel delta : kColours) {
        const Realization D = coproduct_realization(
            rep_of(N1, zeta, ctx), rep_of(N2, eta, ctx), zeta, eta, delta);
        const RelationResiduals rr = relation_residuals(D);
        Diff d{rr.max(), rr.scale};
        report.records.push_back(make_record("coproduct.homomorphism",
                                             {zeta, eta, delta}, {N1, N2},
                                             ctx, d));
      }
  return report;
}

VerificationReport check_hopf_axioms(std::array<int, 3> Ns,
                                     const QContext& ctx) {
  VerificationReport report;
  const std::vector<int> dims(Ns.begin(), Ns.end());

  for (ColourLabel zeta : kColours)
    for (ColourLabel eta : kColours)
      for (ColourLabel nu : kColours) {
        const Realization V1 = rep_of(Ns[0], zeta, ctx);
        const Realization V2 = rep_of(Ns[1], eta, ctx);
        const Realization V3 = rep_of(Ns[2], nu, ctx);
        for (ColourLabel mu : kColours)
          for (ColourLabel rho : kColours)
            for (ColourLabel delta : kColours) {
              const Realization left12 =
                  coproduct_realization(V1, V2, zeta, eta, mu);
              const Realization right23 =
                  coproduct_realization(V2, V3, eta, nu, rho);
              Diff d;
              for (Generator A : kGenerators)
                d.take(eval_tensor(coproduct(A, mu, nu, delta, ctx), left12,
                                   V3),
                       eval_tensor(coproduct(A, zeta, rho, delta, ctx), V1,
                                   right23));
              report.records.push_back(
                  make_record("coassociativity",
                              {zeta, eta, nu, mu, rho, delta}, dims, ctx, d));
            }
      }

  std::vector<int> singles;
  for (int N : Ns)
    if (std::find(singles.begin(), singles.end(), N) == singles.end())
      singles.push_back(N);

  for (int N : singles) {
    for (ColourLabel zeta : kColours)
      for (ColourLabel eta : kColours)
        for (ColourLabel delta : kColours) {
          const Realization V = rep_of(N, delta, ctx);
          Diff left, right;
          for (Generator A : kGenerators) {
            const TensorElement D = coproduct(A, zeta, eta, delta, ctx);
            const Matrix expect = V.eval(A);
            left.take(eval_tensor(D, counit_realization(zeta, ctx),
                                  sigma_realization(V, eta * delta)),
                      expect);
            right.take(eval_tensor(D, sigma_realization(V, zeta * delta),
                                   counit_realization(eta, ctx)),
                       expect);
          }
          report.records.push_back(
              make_record("counit.left", {zeta, eta, delta}, {N}, ctx, left));
          report.records.push_back(make_record(
              "counit.right", {zeta, eta, delta}, {N}, ctx, right));
        }

    for (ColourLabel zeta : kColours)
      for (ColourLabel eta : kColours)
        for (ColourLabel delta : kColours)
          for (ColourLabel mu : kColours) {
            const Realization V = rep_of(N, mu, ctx);
            Diff left, right;
            for (Generator A : kGenerators) {
              const TensorElement D = coproduct(A, zeta, eta, delta, ctx);
              const Matrix expect = counit(A, delta, ctx) * V.identity();
              left.take(eval_product(D, antipode_realization(V, mu, zeta),
                                     sigma_realization(V, mu * eta)),
                        expect);
              right.take(eval_product(D, sigma_realization(V, mu * zeta),
                                      antipode_realization(V, mu, eta)),
                         expect);
            }
            report.records.push_back(make_record(
                "antipode.left", {zeta, eta, delta, mu}, {N}, ctx, left));
            report.records.push_back(make_record(
                "antipode.right", {zeta, eta, delta, mu}, {N}, ctx, right));
          }
  }
  return report;
}

VerificationReport check_sigma_laws(int N1, int N2, const QContext& ctx) {
  VerificationReport report;

  for (ColourLabel mu : kColours)
    for (ColourLabel nu : kColours) {
      const Realization V1 = rep_of(N1, mu, ctx);
      const Realization V2 = rep_of(N2, nu, ctx);
      for (ColourLabel zeta : kColours)
        for (ColourLabel eta : kColours)
          for (ColourLabel delta : kColours)
            for (ColourLabel rho : kColours) {
              const Realization rhs_real = sigma_realization(
                  coproduct_realization(V1, V2, mu, nu, rho), rho * delta);
              Diff d;
              for (Generator A : kGenerators)
                d.take(eval_tensor(coproduct(A, zeta, eta, delta, ctx),
                                   sigma_realization(V1, mu * zeta),
                                   sigma_realization(V2, nu * eta)),
                       rhs_real.eval(A));
              report.records.push_back(
                  make_record("sigma.coproduct",
                              {zeta, eta, delta, mu, nu, rho}, {N1, N2}, ctx,
                              d));
            }
    }

  for (ColourLabel delta : kColours)
    for (ColourLabel zeta : kColours) {
      const Realization lhs =
          sigma_realization(counit_realization(delta, ctx), delta * zeta);
      const Realization rhs = counit_realization(zeta, ctx);
      Diff d;
      for (Generator A : kGenerators)
        d.take(lhs.eval(A), rhs.eval(A));
      report.records.push_back(
          make_record("sigma.counit", {delta, zeta}, {}, ctx, d));
    }

  for (int N : {N1, N2}) {
    for (ColourLabel kappa : kColours) {
      const Realization V = rep_of(N, kappa, ctx);
      for (ColourLabel zeta : kColours)
        for (ColourLabel eta : kColours)
          for (ColourLabel delta : kColours)
            for (ColourLabel mu : kColours) {
              const Realization lhs = antipode_realization(
                  sigma_realization(V, zeta * eta), eta, delta);
              const Realization rhs = sigma_realization(
                  antipode_realization(V, zeta, mu), mu * delta);
              Diff d;
              for (Generator A : kGenerators)
                d.take(lhs.eval(A), rhs.eval(A));
              report.records.push_back(
                  make_record("sigma.antipode",
                              {zeta, eta, delta, mu, kappa}, {N}, ctx, d));
            }
    }
    if (N1 == N2)
      break;
  }
  return report;
}

VerificationReport check_r_matrix(int N1, int N2, const QContext& ctx) {
  VerificationReport report;
  const std::vector<int> dims{N1, N2};

  for (ColourLabel zeta : kColours)
    for (ColourLabel eta : kColours) {
      const Realization V1 = rep_of(N1, zeta, ctx);
      const Realization V2 = rep_of(N2, eta, ctx);
      const SeriesEvaluation R =
          evaluate_series(make_r_series(zeta, eta, ctx), V1, V2);
      const Matrix Rinv = inverse(R.value);
      const Matrix I = Matrix::Identity(R.value.rows(), R.value.cols());

      {
        Diff d;
        d.take(R.value * Rinv, I);
        const Eigen::JacobiSVD<Matrix> svd(R.value);
        const auto& s = svd.singularValues();
        const double cond = s(0) / s(s.size() - 1);
        IdentityRecord rec =
            make_record("r.invertible", {zeta, eta}, dims, ctx, d);
        rec.pass = rec.pass && std::isfinite(cond);
        report.records.push_back(rec);
      }
      {
        Diff d{R.truncation_residual, max_abs(R.value)};
        report.records.push_back(
            make_record("r.truncation", {zeta, eta}, dims, ctx, d));
      }
      for (ColourLabel delta : kColours) {
        Diff d;
        for (Generator A : kGenerators) {
          const Matrix flipped = eval_tensor(
              coproduct(A, eta, zeta, delta, ctx).flipped(), V1, V2);
          const Matrix conj =
              R.value * eval_tensor(coproduct(A, zeta, eta, delta, ctx), V1,
                                    V2) *
              Rinv;
          d.take(flipped, conj);
        }
        report.records.push_back(make_record(
            "r.intertwining", {zeta, eta, delta}, dims, ctx, d));
      }
      {
        Diff left, right;
        left.take(evaluate_series(make_r_series(zeta, eta, ctx),
                                  counit_realization(zeta, ctx), V2)
                      .value,
                  V2.identity());
        right.take(evaluate_series(make_r_series(zeta, eta, ctx), V1,
                                   counit_realization(eta, ctx))
                       .value,
                   V1.identity());
        report.records.push_back(
            make_record("r.counit.left", {zeta, eta}, dims, ctx, left));
        report.records.push_back(
            make_record("r.counit.right", {zeta, eta}, dims, ctx, right));
      }
      {
        // (sigma_{zeta d} (x) sigma_{eta d})(R^{d,d}) for both d.
        const SeriesEvaluation from_plus = evaluate_series(
            make_r_series(ColourLabel::plus(), ColourLabel::plus(), ctx),
            sigma_realization(V1, zeta), sigma_realization(V2, eta));
        const SeriesEvaluation from_minus = evaluate_series(
            make_r_series(ColourLabel::minus(), ColourLabel::minus(), ctx),
            sigma_realization(V1, -zeta), sigma_realization(V2, -eta));
        Diff d;
        d.take(from_plus.value, from_minus.value);
        d.take(from_plus.value, R.value);
        report.records.push_back(
            make_record("r.delta_independence", {zeta, eta}, dims, ctx, d));
      }
    }

  // Colour-changing identities: the result lives on V1^mu (x) V2^nu (or
  // V1^lambda (x) V2^mu); the series is R^{zeta,eta} for every zeta, eta.
  for (ColourLabel c1 : kColours)
    for (ColourLabel c2 : kColours) {
      const Realization V1 = rep_of(N1, c1, ctx);
      const Realization V2 = rep_of(N2, c2, ctx);
      const Matrix target = evaluate_series(make_r_series(c1, c2, ctx), V1, V2)
                                .value;
      const Matrix target_inv = inverse(target);
      for (ColourLabel zeta : kColours)
        for (ColourLabel eta : kColours) {
          const RSeries rs = make_r_series(zeta, eta, ctx);
          Diff cov;
          cov.take(evaluate_series(rs, sigma_realization(V1, c1 * zeta),
                                   sigma_realization(V2, c2 * eta))
                       .value,
                   target);
          report.records.push_back(make_record(
              "r.sigma_covariance", {zeta, eta, c1, c2}, dims, ctx, cov));

          Diff anti;
          anti.take(evaluate_series(rs, antipode_realization(V1, c1, zeta),
                                    sigma_realization(V2, c2 * eta))
                        .value,
                    target_inv);
          report.records.push_back(make_record(
              "r.antipode", {zeta, eta, c1, c2}, dims, ctx, anti));

          Diff anti_inv;
          anti_inv.take(
              evaluate_series(rs, sigma_realization(V1, c1 * zeta),
                              antipode_inverse_realization(V2, c2, eta))
                  .value,
              target_inv);
          report.records.push_back(make_record(
              "r.antipode_inverse", {zeta, eta, c1, c2}, dims, ctx,
              anti_inv));
        }
    }
  return report;
}

VerificationReport check_quasitriangularity(std::array<int, 3> Ns,
                                            const QContext& ctx) {
  VerificationReport report;
  const std::vector<int> dims(Ns.begin(), Ns.end());
  const std::array<int, 3> sizes{Ns[0] + 1, Ns[1] + 1, Ns[2] + 1};

  for (ColourLabel lambda : kColours)
    for (ColourLabel mu : kColours)
      for (ColourLabel nu : kColours) {
        const Unirrep U1 = build_aq1_unirrep(Ns[0], lambda, ctx);
        const Unirrep U2 = build_aq1_unirrep(Ns[1], mu, ctx);
        const Unirrep U3 = build_aq1_unirrep(Ns[2], nu, ctx);
        const Realization V1 = realize(U1), V2 = realize(U2),
                          V3 = realize(U3);
        const Matrix R12 = embed_pair(r_matrix(U1, U2), 0, 1, sizes);
        const Matrix R13 = embed_pair(r_matrix(U1, U3), 0, 2, sizes);
        const Matrix R23 = embed_pair(r_matrix(U2, U3), 1, 2, sizes);

        for (ColourLabel zeta : kColours)
          for (ColourLabel eta : kColours) {
            const RSeries rs = make_r_series(zeta, eta, ctx);
            Diff left;
            left.take(
                evaluate_series(rs,
                                coproduct_realization(V1, V2, lambda, mu, zeta),
                                sigma_realization(V3, nu * eta))
                    .value,
                R13 * R23);
            report.records.push_back(
                make_record("r.fission_left", {lambda, mu, nu, zeta, eta},
                            dims, ctx, left));
            Diff right;
            right.take(
                evaluate_series(rs, sigma_realization(V1, lambda * zeta),
                                coproduct_realization(V2, V3, mu, nu, eta))
                    .value,
                R13 * R12);
            report.records.push_back(
                make_record("r.fission_right", {lambda, mu, nu, zeta, eta},
                            dims, ctx, right));
          }
      }
  return report;
}

VerificationReport check_coloured_ybe(std::array<int, 3> Ns,
                                      const QContext& ctx) {
  VerificationReport report;
  const std::vector<int> dims(Ns.begin(), Ns.end());
  const std::array<int, 3> sizes{Ns[0] + 1, Ns[1] + 1, Ns[2] + 1};
  for (ColourLabel zeta : kColours)
    for (ColourLabel eta : kColours)
      for (ColourLabel mu : kColours) {
        const Unirrep U1 = build_aq1_unirrep(Ns[0], zeta, ctx);
        const Unirrep U2 = build_aq1_unirrep(Ns[1], eta, ctx);
        const Unirrep U3 = build_aq1_unirrep(Ns[2], mu, ctx);
        const Matrix R12 = embed_pair(r_matrix(U1, U2), 0, 1, sizes);
        const Matrix R13 = embed_pair(r_matrix(U1, U3), 0, 2, sizes);
        const Matrix R23 = embed_pair(r_matrix(U2, U3), 1, 2, sizes);
        Diff d;
        d.take(R12 * R13 * R23, R23 * R13 * R12);
        report.records.push_back(
            make_record("ybe", {zeta, eta, mu}, dims, ctx, d));
      }
  return report;
}

} // namespace qdef
