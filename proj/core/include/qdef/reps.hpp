#pragma once

// Finite-dimensional unitary irreducible representations.
//
// Basis convention: index n = 0..N, n = 0 is the highest-weight state
// (annihilated by J+). J+ maps n -> n-1, J- maps n -> n+1, so J- is strictly
// lower triangular and J- = J+^T. All matrix entries are real and the
// off-diagonal coefficients are the positive square roots
//   <n+1|J-|n> = sqrt([n+1]_q [N-n]_q),   <n-1|J+|n> = sqrt([n]_q [N-n+1]_q).

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qdef/algebra.hpp"
#include "qdef/colour.hpp"
#include "qdef/qarith.hpp"

namespace qdef {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// diag(f(d_0), ..., f(d_k)): a function of a diagonal operator.
template <class F> Matrix diag_apply(const Vector& d, F&& f) {
  Vector out(d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i)
    out(i) = f(d(i));
  return out.asDiagonal();
}

/// max |a_ij|, 0 for an empty matrix.
double max_abs(const Matrix& m);

struct Unirrep {
  AlgebraSpec algebra;
  int N = 0;
  ColourLabel delta;
  /// J0 eigenvalues, index n = 0..N.
  Vector j0;
  /// su_q(2) weight labels N/2 - n (the preimage of j0 under p_delta).
  Vector labels;
  Matrix Jp;
  Matrix Jm;
  double casimir = 0.0;

  int dim() const { return N + 1; }
  Matrix J0() const { return j0.asDiagonal(); }
  Matrix G() const;
  Matrix Ginv() const;
  const QContext& ctx() const { return algebra.ctx(); }
};

/// The (N+1)-dimensional unirrep of A+_q(1) of colour delta:
/// j0[n] = (1 - delta q^{-(N-2n)/2}) / (q-1).
Unirrep build_aq1_unirrep(int N, ColourLabel delta, const QContext& ctx);

/// The (N+1)-dimensional unirrep of su_q(2): j0[n] = N/2 - n.
Unirrep build_suq2_unirrep(int N, const QContext& ctx);

/// Push an su_q(2) unirrep through P_delta: J0 -> p_delta(j0), J+- unchanged.
Unirrep apply_map_p_delta(const Unirrep& suq2_rep, ColourLabel delta);

/// Max-norm residuals of the three defining relations.
struct CommutationResiduals {
  double raise = 0.0; ///< |[J0,J+] - G(J0) J+|
  double lower = 0.0; ///< |[J0,J-] + J- G(J0)|
  double cross = 0.0; ///< |[J+,J-] - F(J0)|
  double scale = 0.0; ///< largest operand entry
  double max() const { return std::max({raise, lower, cross}); }
};

CommutationResiduals commutation_residuals(const Unirrep& rep);

/// J- J+ + H(J0).
Matrix casimir_matrix(const Unirrep& rep);

struct CasimirReport {
  double value = 0.0;            ///< mean diagonal
  double off_scalar = 0.0;       ///< |C - value I|
  double expected_residual = 0.0; ///< |value - rep.casimir|
  double alt_form_residual = 0.0; ///< |J- J+ + H - (J+ J- + H - F)|
  double scale = 0.0;
  bool pass = false;
};

CasimirReport check_casimir(const Unirrep& rep);

enum class SpectrumSide { Above, Below, FixedPoint };
enum class LadderClass {
  BoundedBelow,
  BoundedAbove,
  Unbounded,
  FiniteCandidate,
  FixedPoint
};

std::string_view to_string(SpectrumSide side);
std::string_view to_string(LadderClass c);

struct LadderResult {
  /// Successive J+ images of m0 (m0 itself excluded).
  std::vector<double> raise_chain;
  /// Successive J- images of m0 (m0 itself excluded).
  std::vector<double> lower_chain;
  SpectrumSide side = SpectrumSide::Above;
  LadderClass classification = LadderClass::Unbounded;
  bool raise_terminated = false;
  bool lower_terminated = false;
  /// Steps taken before termination in each direction.
  int raise_steps = 0;
  int lower_steps = 0;
  /// Set when some squared norm went negative beyond tolerance: the seed is
  /// not part of a unitary representation with this Casimir value.
  bool unitarity_violated = false;
};

/// Walk the J0 spectrum from m0 under J+ (m -> m' with m' - G(m') = m) and
/// J- (m -> m - G(m)). With a candidate Casimir value c the walk stops in a
/// direction once the squared norm of the next ladder vector vanishes:
///   |J+ v_m|^2 = c - H(m),  |J- v_m|^2 = c - H(m - G(m)).
/// Requires an affine G; throws InvalidArgument otherwise.
LadderResult ladder_spectrum(const AlgebraSpec& spec, double m0,
                             int max_steps,
                             std::optional<double> casimir = std::nullopt);

struct TransmuteReport {
  double j0 = 0.0;
  double jp = 0.0;
  double jm = 0.0;
  double max() const { return std::max({j0, jp, jm}); }
  bool pass = false;
};

/// Phi^{delta}(A) = Phi^{-delta}(sigma(A)) for A = J0, J+, J-, with the
/// transmutation operator equal to the identity in the n-ordered bases.
/// Throws InvalidArgument when the two reps differ in dimension or colour
/// does not flip.
TransmuteReport transmute_check(const Unirrep& rep, const Unirrep& partner);

} // namespace qdef
