#include "qdef/reps.hpp"

#include <cmath>

namespace qdef {

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Matrix Unirrep::G() const {
  return diag_apply(j0, [this](double z) { return algebra.G(z); });
}

Matrix Unirrep::Ginv() const {
  return diag_apply(j0, [this](double z) { return 1.0 / algebra.G(z); });
}

namespace {

// Ladder matrices shared by su_q(2) and A+_q(1); they do not depend on the
// colour or on which of the two algebras is being represented.
void fill_ladder(Unirrep& rep) {
  const int N = rep.N;
  const QContext& ctx = rep.ctx();
  rep.Jp = Matrix::Zero(N + 1, N + 1);
  for (int n = 1; n <= N; ++n)
    rep.Jp(n - 1, n) = std::sqrt(q_number(n, ctx) * q_number(N - n + 1, ctx));
  rep.Jm = rep.Jp.transpose();
}

Vector weight_labels(int N) {
  Vector labels(N + 1);
  for (int n = 0; n <= N; ++n)
    labels(n) = N / 2.0 - n;
  return labels;
}

void check_dim(int N) {
  if (N < 0)
    throw InvalidArgument("representation label N must be >= 0, got " +
                          std::to_string(N));
}

} // namespace

Unirrep build_aq1_unirrep(int N, ColourLabel delta, const QContext& ctx) {
  check_dim(N);
  Unirrep rep{make_catalog_algebra(CatalogName::Aq1, ctx), N, delta, {}, {},
              {}, {}, 0.0};
  const double q = ctx.q();
  rep.labels = weight_labels(N);
  rep.j0.resize(N + 1);
  for (int n = 0; n <= N; ++n)
    rep.j0(n) = (1.0 - delta.sign() * std::pow(q, -(N - 2.0 * n) / 2.0)) /
                (q - 1.0);
  fill_ladder(rep);
  const double gamma = (1.0 - delta.sign() * std::pow(q, -N / 2.0)) / (q - 1.0);
  rep.casimir = rep.algebra.H(gamma);
  return rep;
}

Unirrep build_suq2_unirrep(int N, const QContext& ctx) {
  check_dim(N);
  Unirrep rep{make_catalog_algebra(CatalogName::SuQ2, ctx),
              N,
              ColourLabel::plus(),
              {},
              {},
              {},
              {},
              0.0};
  rep.labels = weight_labels(N);
  rep.j0 = rep.labels;
  fill_ladder(rep);
  rep.casimir = rep.algebra.H(N / 2.0);
  return rep;
}

Unirrep apply_map_p_delta(const Unirrep& suq2_rep, ColourLabel delta) {
  if (suq2_rep.algebra.catalog() != CatalogName::SuQ2)
    throw InvalidArgument("apply_map_p_delta expects an su_q(2) unirrep, got '" +
                          suq2_rep.algebra.name() + "'");
  const QContext& ctx = suq2_rep.ctx();
  Unirrep rep = suq2_rep;
  rep.algebra = make_catalog_algebra(CatalogName::Aq1, ctx);
  rep.delta = delta;
  for (Eigen::Index n = 0; n < rep.j0.size(); ++n)
    rep.j0(n) = map_p_delta(suq2_rep.j0(n), delta, ctx);
  rep.casimir = rep.algebra.H(map_p_delta(suq2_rep.N / 2.0, delta, ctx));
  return rep;
}

CommutationResiduals commutation_residuals(const Unirrep& rep) {
  const Matrix J0 = rep.J0();
  const Matrix G = rep.G();
  const Matrix F =
      diag_apply(rep.j0, [&](double z) { return rep.algebra.F(z); });
  CommutationResiduals r;
  r.raise = max_abs(J0 * rep.Jp - rep.Jp * J0 - G * rep.Jp);
  r.lower = max_abs(J0 * rep.Jm - rep.Jm * J0 + rep.Jm * G);
  r.cross = max_abs(rep.Jp * rep.Jm - rep.Jm * rep.Jp - F);
  r.scale = std::max({max_abs(J0), max_abs(rep.Jp), max_abs(F),
                      max_abs(rep.Jp * rep.Jm)});
  return r;
}

Matrix casimir_matrix(const Unirrep& rep) {
  return rep.Jm * rep.Jp +
         diag_apply(rep.j0, [&](double z) { return rep.algebra.H(z); });
}

CasimirReport check_casimir(const Unirrep& rep) {
  const Matrix C = casimir_matrix(rep);
  const Matrix Hd =
      diag_apply(rep.j0, [&](double z) { return rep.algebra.H(z); });
  const Matrix Fd =
      diag_apply(rep.j0, [&](double z) { return rep.algebra.F(z); });
  const Matrix alt = rep.Jp * rep.Jm + Hd - Fd;

  CasimirReport report;
  report.value = C.diagonal().mean();
  report.off_scalar =
      max_abs(C - report.value * Matrix::Identity(rep.dim(), rep.dim()));
  report.expected_residual = std::abs(report.value - rep.casimir);
  report.alt_form_residual = max_abs(C - alt);
  report.scale = std::max({max_abs(C), max_abs(Hd), max_abs(Fd)});
  const QContext& ctx = rep.ctx();
  report.pass = ctx.within(report.off_scalar, report.scale) &&
                ctx.within(report.expected_residual, report.scale) &&
                ctx.within(report.alt_form_residual, report.scale);
  return report;
}

std::string_view to_string(SpectrumSide side) {
  switch (side) {
  case SpectrumSide::Above:
    return "above";
  case SpectrumSide::Below:
    return "below";
  case SpectrumSide::FixedPoint:
    return "fixed-point";
  }
  return "?";
}

std::string_view to_string(LadderClass c) {
  switch (c) {
  case LadderClass::BoundedBelow:
    return "bounded-below";
  case LadderClass::BoundedAbove:
    return "bounded-above";
  case LadderClass::Unbounded:
    return "unbounded";
  case LadderClass::FiniteCandidate:
    return "finite-candidate";
  case LadderClass::FixedPoint:
    return "fixed-point";
  }
  return "?";
}

LadderResult ladder_spectrum(const AlgebraSpec& spec, double m0,
                             int max_steps, std::optional<double> casimir) {
  if (max_steps < 1)
    throw InvalidArgument("ladder_spectrum: max_steps must be >= 1");
  const auto affine = spec.affine_G();
  if (!affine)
    throw InvalidArgument("ladder_spectrum: G of '" + spec.name() +
                          "' is not affine");
  if (affine->g1 == 1.0)
    throw InvalidArgument("ladder_spectrum: G(z) = g0 + z has no J+ step");

  const QContext& ctx = spec.ctx();
  const double g_m0 = spec.G(m0);
  LadderResult result;

  if (std::abs(g_m0) <= ctx.tolerance(std::abs(m0))) {
    result.side = SpectrumSide::FixedPoint;
    result.classification = LadderClass::FixedPoint;
    result.raise_chain.assign(max_steps, m0);
    result.lower_chain.assign(max_steps, m0);
    return result;
  }
  result.side = g_m0 > 0.0 ? SpectrumSide::Above : SpectrumSide::Below;

  // J+ : m' - G(m') = m  =>  m' = (m + g0) / (1 - g1).
  auto raise = [&](double m) { return (m + affine->g0) / (1.0 - affine->g1); };
  auto lower = [&](double m) { return m - spec.G(m); };

  // Squared norm of the next ladder vector; nullopt when no Casimir value
  // was supplied and no termination test is possible.
  auto walk = [&](auto&& step, auto&& norm2, std::vector<double>& chain,
                  bool& terminated, int& steps) {
    double m = m0;
    for (int k = 0; k < max_steps; ++k) {
      if (casimir) {
        const double h = norm2(m);
        const double tol = ctx.tolerance(std::max(std::abs(*casimir),
                                                  std::abs(*casimir - h)));
        // A negative norm ends the walk without counting as termination.
        if (h < -tol) {
          result.unitarity_violated = true;
          return;
        }
        if (std::abs(h) <= tol) {
          terminated = true;
          return;
        }
      }
      m = step(m);
      chain.push_back(m);
      ++steps;
    }
  };

  walk(raise, [&](double m) { return *casimir - spec.H(m); },
       result.raise_chain, result.raise_terminated, result.raise_steps);
  walk(lower, [&](double m) { return *casimir - spec.H(lower(m)); },
       result.lower_chain, result.lower_terminated, result.lower_steps);

  // J+ increases the eigenvalue where G > 0 and decreases it where G < 0.
  const bool raise_goes_up = g_m0 > 0.0;
  const bool bounded_above =
      raise_goes_up ? result.raise_terminated : result.lower_terminated;
  const bool bounded_below =
      raise_goes_up ? result.lower_terminated : result.raise_terminated;
  if (bounded_above && bounded_below)
    result.classification = LadderClass::FiniteCandidate;
  else if (bounded_above)
    result.classification = LadderClass::BoundedAbove;
  else if (bounded_below)
    result.classification = LadderClass::BoundedBelow;
  else
    result.classification = LadderClass::Unbounded;
  return result;
}

TransmuteReport transmute_check(const Unirrep& rep, const Unirrep& partner) {
  if (rep.dim() != partner.dim())
    throw InvalidArgument("transmute_check: dimension mismatch (" +
                          std::to_string(rep.dim()) + " vs " +
                          std::to_string(partner.dim()) + ")");
  if (rep.delta == partner.delta)
    throw InvalidArgument("transmute_check: partner must carry the opposite "
                          "colour");
  const QContext& ctx = rep.ctx();
  const Matrix sigma_j0 =
      2.0 * ctx.fixed_point() * Matrix::Identity(rep.dim(), rep.dim()) -
      partner.J0();
  TransmuteReport report;
  report.j0 = max_abs(rep.J0() - sigma_j0);
  report.jp = max_abs(rep.Jp - partner.Jp);
  report.jm = max_abs(rep.Jm - partner.Jm);
  const double scale = std::max(max_abs(rep.J0()), max_abs(partner.J0()));
  report.pass = ctx.within(report.max(), scale);
  return report;
}

} // namespace qdef
