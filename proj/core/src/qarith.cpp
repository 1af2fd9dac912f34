#include "qdef/qarith.hpp"

#include <algorithm>
#include <cmath>

namespace qdef {

QContext::QContext(double q, std::optional<double> p, double tol_abs,
                   double tol_rel)
    : q_(q), p_(p), tol_abs_(tol_abs), tol_rel_(tol_rel) {
  if (!(q > 0.0 && q < 1.0))
    throw InvalidArgument("q must lie in the open interval (0, 1), got " +
                          std::to_string(q));
  if (p && !(*p > 0.0))
    throw InvalidArgument("p must be positive, got " + std::to_string(*p));
  if (!(tol_abs > 0.0) || !(tol_rel > 0.0))
    throw InvalidArgument("tolerances must be positive");
}

double QContext::tolerance(double scale) const {
  return std::max(tol_abs_, tol_rel_ * std::abs(scale));
}

double q_number(double x, const QContext& ctx) {
  const double q = ctx.q();
  return (std::pow(q, x) - std::pow(q, -x)) / (q - 1.0 / q);
}

double q_factorial(int n, const QContext& ctx) {
  if (n < 0)
    throw InvalidArgument("q_factorial: negative argument " +
                          std::to_string(n));
  double result = 1.0;
  for (int k = 2; k <= n; ++k)
    result *= q_number(k, ctx);
  return result;
}

// All four maps are written as displacements from the fixed point (q-1)^-1,
// which they then leave unchanged bit for bit.
double raise_map(double m, const QContext& ctx) {
  const double q = ctx.q();
  return m + (1.0 - q) / q * (m - ctx.fixed_point());
}

double lower_map(double m, const QContext& ctx) {
  return m - (1.0 - ctx.q()) * (m - ctx.fixed_point());
}

double raise_closed_form(double m, int n, const QContext& ctx) {
  const double fp = ctx.fixed_point();
  return fp + (m - fp) * std::pow(ctx.q(), -n);
}

double lower_closed_form(double m, int n, const QContext& ctx) {
  const double fp = ctx.fixed_point();
  return fp + (m - fp) * std::pow(ctx.q(), n);
}

} // namespace qdef
