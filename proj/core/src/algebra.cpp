#include "qdef/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace qdef {

std::string_view to_string(AlgebraKind kind) {
  return kind == AlgebraKind::PRA ? "PRA" : "DQA";
}

std::string_view to_string(CatalogName name) {
  switch (name) {
  case CatalogName::SuQ2:
    return "suq2";
  case CatalogName::Witten21:
    return "witten21";
  case CatalogName::A3pq1:
    return "a3pq1";
  case CatalogName::Aq1:
    return "aq1";
  }
  return "?";
}

CatalogName parse_catalog_name(std::string_view name) {
  for (CatalogName c : catalog_names())
    if (to_string(c) == name)
      return c;
  throw InvalidArgument("unknown catalog algebra '" + std::string(name) +
                        "' (expected suq2, witten21, a3pq1 or aq1)");
}

std::vector<CatalogName> catalog_names() {
  return {CatalogName::SuQ2, CatalogName::Witten21, CatalogName::A3pq1,
          CatalogName::Aq1};
}

AlgebraSpec::AlgebraSpec(std::string name, AlgebraKind kind, RealFunction F,
                         RealFunction G, RealFunction H, QContext ctx,
                         Descriptor descriptor)
    : name_(std::move(name)), kind_(kind), F_(std::move(F)), G_(std::move(G)),
      H_(std::move(H)), ctx_(ctx), descriptor_(std::move(descriptor)) {
  if (!F_ || !G_ || !H_)
    throw InvalidArgument("AlgebraSpec '" + name_ +
                          "': F, G and H must all be callable");
}

std::optional<AffineCoefficients> AlgebraSpec::affine_G() const {
  const double g0 = G_(0.0);
  const double g1 = G_(1.0) - g0;
  for (double z : {-2.5, 0.5, 3.75}) {
    const double expect = g0 + g1 * z;
    if (std::abs(G_(z) - expect) > ctx_.tolerance(std::abs(expect)))
      return std::nullopt;
  }
  return AffineCoefficients{g0, g1};
}

AlgebraSpec AlgebraSpec::with_context(const QContext& ctx) const {
  if (catalog_)
    return make_catalog_algebra(*catalog_, ctx);
  AlgebraSpec copy = *this;
  copy.ctx_ = ctx;
  return copy;
}

namespace {

std::string fmt_num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

} // namespace

AlgebraSpec make_catalog_algebra(CatalogName name, const QContext& ctx) {
  const double q = ctx.q();
  auto G_affine = [q](double z) { return 1.0 + (1.0 - q) * z; };

  switch (name) {
  case CatalogName::SuQ2: {
    AlgebraSpec spec(
        "suq2", AlgebraKind::PRA,
        [ctx](double z) { return q_number(2.0 * z, ctx); },
        [](double) { return 1.0; },
        [ctx](double z) { return q_number(z, ctx) * q_number(z + 1.0, ctx); },
        ctx,
        {"[2z]_q", "1", "[z]_q [z+1]_q",
         "quantum algebra su_q(2); linear J0 spectrum"});
    spec.catalog_ = name;
    return spec;
  }
  case CatalogName::Witten21: {
    AlgebraSpec spec(
        "witten21", AlgebraKind::DQA,
        [q](double z) { return 2.0 * z * (1.0 + (1.0 - q) * z); }, G_affine,
        [q](double z) { return 2.0 / (1.0 + q) * z * (z + 1.0); }, ctx,
        {"2z(1+(1-q)z)", "1+(1-q)z", "2(1+q)^{-1} z(z+1)",
         "A+_q(2,1); equivalent to Witten's first deformation of su(2)"});
    spec.catalog_ = name;
    return spec;
  }
  case CatalogName::A3pq1: {
    if (!ctx.p())
      throw InvalidArgument("a3pq1 requires the second parameter p");
    const double p = *ctx.p();
    AlgebraSpec spec(
        "a3pq1", AlgebraKind::DQA,
        [q, p](double z) {
          return 2.0 * z * (1.0 + (1.0 - q) * z) * (1.0 - (1.0 - p) * z);
        },
        G_affine,
        [q, p](double z) {
          const double norm = 2.0 / ((1.0 + q) * (1.0 + q + q * q));
          return norm * z * (z + 1.0) *
                 (1.0 + (p + q) * q - (1.0 - p) * (1.0 + q) * z);
        },
        ctx,
        {"2z(1+(1-q)z)(1-(1-p)z)", "1+(1-q)z",
         "2((1+q)(1+q+q^2))^{-1} z(z+1)(1+(p+q)q-(1-p)(1+q)z)",
         "A+_{p,q}(3,1); cubic structure functions, p = " + fmt_num(p)});
    spec.catalog_ = name;
    return spec;
  }
  case CatalogName::Aq1: {
    const double qq = q - 1.0 / q;
    AlgebraSpec spec(
        "aq1", AlgebraKind::DQA,
        [G_affine, qq](double z) {
          const double g2 = G_affine(z) * G_affine(z);
          return -(g2 - 1.0 / g2) / qq;
        },
        G_affine,
        [G_affine, q, qq](double z) {
          const double g2 = G_affine(z) * G_affine(z);
          return (g2 / q + q / g2 - q - 1.0 / q) / (qq * qq);
        },
        ctx,
        {"-(G^2 - G^{-2})/(q - q^{-1})", "1+(1-q)z",
         "(q^{-1} G^2 + q G^{-2} - q - q^{-1})/(q - q^{-1})^2",
         "A+_q(1); two families of (N+1)-dim unirreps, colour +1/-1"});
    spec.catalog_ = name;
    return spec;
  }
  }
  throw InvalidArgument("unknown catalog algebra");
}

AlgebraSpec make_catalog_algebra(std::string_view name, const QContext& ctx) {
  return make_catalog_algebra(parse_catalog_name(name), ctx);
}

ConsistencyReport check_consistency(const AlgebraSpec& spec,
                                    std::span<const double> samples) {
  ConsistencyReport report;
  for (double z : samples) {
    const double hz = spec.H(z);
    const double hs = spec.H(z - spec.G(z));
    const double fz = spec.F(z);
    const double residual = std::abs(hz - hs - fz);
    if (std::isnan(residual)) {
      report.pass = false;
      if (!report.nan_at)
        report.nan_at = z;
      continue;
    }
    const double scale = std::max({std::abs(hz), std::abs(hs), std::abs(fz)});
    report.scale = std::max(report.scale, scale);
    if (residual > report.max_residual) {
      report.max_residual = residual;
      report.worst_z = z;
    }
    if (!spec.ctx().within(residual, scale))
      report.pass = false;
  }
  return report;
}

double Polynomial::operator()(double z) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * z + *it;
  return acc;
}

int Polynomial::degree() const {
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
    if (coeffs[k] != 0.0)
      return k;
  return 0;
}

Polynomial solve_h_polynomial(const Polynomial& f) {
  // h(z) = sum_{k>=1} c_k z^k. The z^j coefficient of h(z) - h(z-1) is
  //   sum_{k>j} c_k binom(k, j) (-1)^{k-j+1},
  // which is triangular in c: solve from the top degree down.
  const int d = static_cast<int>(f.coeffs.size()) - 1;
  if (d < 0)
    return Polynomial{{0.0}};

  std::vector<std::vector<double>> binom(d + 2, std::vector<double>(d + 2));
  for (int n = 0; n <= d + 1; ++n) {
    binom[n][0] = binom[n][n] = 1.0;
    for (int k = 1; k < n; ++k)
      binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
  }

  std::vector<double> c(d + 2, 0.0);
  for (int j = d; j >= 0; --j) {
    double rhs = f.coeffs[j];
    for (int k = j + 2; k <= d + 1; ++k) {
      const double sign = ((k - j + 1) % 2 == 0) ? 1.0 : -1.0;
      rhs -= c[k] * binom[k][j] * sign;
    }
    c[j + 1] = rhs / binom[j + 1][j];
  }
  return Polynomial{std::move(c)};
}

double map_p_delta(double z, ColourLabel delta, const QContext& ctx) {
  const double q = ctx.q();
  return (1.0 - delta.sign() * std::pow(q, -z)) / (q - 1.0);
}

double map_g(double z, const QContext& ctx) {
  const double q = ctx.q();
  const double g = 1.0 + (1.0 - q) * z;
  if (std::abs(g) < ctx.tol_abs())
    throw SingularPoint("map_g: z = " + fmt_num(z) +
                        " is at the singular point (q-1)^{-1}");
  return std::log(g * g) / std::log(1.0 / (q * q));
}

} // namespace qdef
