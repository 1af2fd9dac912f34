#pragma once

// q-deformed arithmetic and the exponential ladder maps of the affine-G
// deformations. Everything here is a pure function of its arguments.

#include <optional>
#include <stdexcept>
#include <string>

namespace qdef {

/// Thrown when a parameter set violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Deformation parameters plus the tolerances used by every identity check.
///
/// Only 0 < q < 1 is accepted: q -> 1/q is an automorphism of the algebras
/// handled here, and q = 1 (the undeformed point) makes [x]_q singular.
class QContext {
public:
  static constexpr double kDefaultTolAbs = 1e-10;
  static constexpr double kDefaultTolRel = 1e-9;

  explicit QContext(double q, std::optional<double> p = std::nullopt,
                    double tol_abs = kDefaultTolAbs,
                    double tol_rel = kDefaultTolRel);

  double q() const { return q_; }
  const std::optional<double>& p() const { return p_; }
  double tol_abs() const { return tol_abs_; }
  double tol_rel() const { return tol_rel_; }

  /// max(tol_abs, tol_rel * scale): the acceptance threshold for a residual
  /// measured against operands of magnitude `scale`.
  double tolerance(double scale) const;
  bool within(double residual, double scale) const {
    return residual <= tolerance(scale);
  }

  /// The singular point (q-1)^{-1} separating the two colour families.
  double fixed_point() const { return 1.0 / (q_ - 1.0); }

  QContext with_tolerances(double tol_abs, double tol_rel) const {
    return QContext(q_, p_, tol_abs, tol_rel);
  }

private:
  double q_;
  std::optional<double> p_;
  double tol_abs_;
  double tol_rel_;
};

/// [x]_q = (q^x - q^{-x}) / (q - q^{-1}).
double q_number(double x, const QContext& ctx);

/// [n]_q! with [0]_q! = 1. Throws InvalidArgument for n < 0.
double q_factorial(int n, const QContext& ctx);

/// One J+ step on the J0 spectrum: m -> q^{-1}(m + 1).
double raise_map(double m, const QContext& ctx);
/// One J- step on the J0 spectrum: m -> q m - 1.
double lower_map(double m, const QContext& ctx);

/// n-fold raise_map in closed form: m q^{-n} - (1 - q^{-n}) / (1 - q).
double raise_closed_form(double m, int n, const QContext& ctx);
/// n-fold lower_map in closed form: m q^{n} - (1 - q^{n}) / (1 - q).
double lower_closed_form(double m, int n, const QContext& ctx);

} // namespace qdef
