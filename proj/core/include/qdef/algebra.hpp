#pragma once

// Structure functions of the nonlinear deformations of su(2).
//
// A deformation is described by three real functions (F, G, H):
//   [J0, J+] = G(J0) J+,  [J0, J-] = -J- G(J0),  [J+, J-] = F(J0),
// with Casimir C = J- J+ + H(J0). The Casimir exists iff
//   H(z) - H(z - G(z)) = F(z).
// The single-function (Polychronakos-Rocek) case is G = 1, F = f, H = h.

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qdef/colour.hpp"
#include "qdef/qarith.hpp"

namespace qdef {

enum class AlgebraKind { PRA, DQA };

std::string_view to_string(AlgebraKind kind);

/// The catalog entries that can be rebuilt from their name alone.
enum class CatalogName { SuQ2, Witten21, A3pq1, Aq1 };

std::string_view to_string(CatalogName name);
/// Throws InvalidArgument on an unknown name.
CatalogName parse_catalog_name(std::string_view name);

using RealFunction = std::function<double(double)>;

/// G(z) = g0 + g1 z.
struct AffineCoefficients {
  double g0 = 1.0;
  double g1 = 0.0;
};

class AlgebraSpec {
public:
  struct Descriptor {
    std::string F;
    std::string G;
    std::string H;
    std::string note;
  };

  /// User-supplied algebra. Not serializable.
  AlgebraSpec(std::string name, AlgebraKind kind, RealFunction F,
              RealFunction G, RealFunction H, QContext ctx,
              Descriptor descriptor = {});

  const std::string& name() const { return name_; }
  AlgebraKind kind() const { return kind_; }
  const QContext& ctx() const { return ctx_; }
  const Descriptor& descriptor() const { return descriptor_; }
  std::optional<CatalogName> catalog() const { return catalog_; }
  bool serializable() const { return catalog_.has_value(); }

  double F(double z) const { return F_(z); }
  double G(double z) const { return G_(z); }
  double H(double z) const { return H_(z); }

  /// Coefficients of G when it is affine (checked by sampling), else empty.
  std::optional<AffineCoefficients> affine_G() const;

  AlgebraSpec with_context(const QContext& ctx) const;

private:
  friend AlgebraSpec make_catalog_algebra(CatalogName, const QContext&);

  std::string name_;
  AlgebraKind kind_;
  RealFunction F_;
  RealFunction G_;
  RealFunction H_;
  QContext ctx_;
  Descriptor descriptor_;
  std::optional<CatalogName> catalog_;
};

/// su_q(2): f(z)=[2z]_q, h(z)=[z]_q[z+1]_q.
/// witten21, a3pq1: the lambda = 2, 3 polynomial algebras with G = 1+(1-q)z.
/// aq1: the algebra A+_q(1) whose F, H are rational in G = 1+(1-q)z.
/// Throws InvalidArgument if a3pq1 is requested without p.
AlgebraSpec make_catalog_algebra(CatalogName name, const QContext& ctx);
AlgebraSpec make_catalog_algebra(std::string_view name, const QContext& ctx);

std::vector<CatalogName> catalog_names();

struct ConsistencyReport {
  double max_residual = 0.0;
  double worst_z = 0.0;
  /// Largest |operand| seen, used for the relative part of the tolerance.
  double scale = 0.0;
  bool pass = true;
  /// First sample where an evaluation produced NaN.
  std::optional<double> nan_at;
};

/// max over samples of |H(z) - H(z - G(z)) - F(z)|. A sample passes when
/// its residual is within ctx.tolerance(max operand magnitude).
ConsistencyReport check_consistency(const AlgebraSpec& spec,
                                    std::span<const double> samples);

/// Polynomial with coefficients in ascending degree order.
struct Polynomial {
  std::vector<double> coeffs;

  double operator()(double z) const;
  int degree() const;
};

/// The unique h with h(z) - h(z-1) = f(z) and h(0) = 0 (degree deg f + 1).
Polynomial solve_h_polynomial(const Polynomial& f);

class SingularPoint : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// p_delta(z) = (1 - delta q^{-z}) / (q - 1).
double map_p_delta(double z, ColourLabel delta, const QContext& ctx);

/// g(z) = ln(G(z)^2) / ln(q^{-2}), the common inverse of p_{+1}, p_{-1}.
/// Throws SingularPoint at z = (q-1)^{-1}.
double map_g(double z, const QContext& ctx);

} // namespace qdef
