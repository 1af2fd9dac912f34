#pragma once

// Two-colour quasitriangular Hopf structure of A+_q(1).
//
// Algebra elements that appear in the structure maps are kept symbolically
// (words in J0, J+, J-, G(J0), G(J0)^{-1}, log_q(c G(J0))) and evaluated on
// a Realization: an assignment of matrices to the generators. Every map used
// here (sigma, the coproducts, counits, antipodes and their composites with
// representations) sends J0 to a diagonal matrix, so functions of J0 are
// evaluated entrywise on that diagonal and no matrix function of a
// non-diagonal operator is ever taken.
//
// Conventions:
//   G(z)              = 1 + (1-q) z
//   sigma(J0)         = 2(q-1)^{-1} - J0,  sigma(J+-) = J+-,  so sigma(G) = -G
//   sigma_{+1} = id,  sigma_{-1} = sigma
//   Delta^{z,e}_d(J0) = (q-1)^{-1} (1 x 1 - d z e G x G)
//   Delta^{z,e}_d(J+-) = e J+- x G^{-1} + z G x J+-
//   eps_d(J0)         = (1-d)(q-1)^{-1},  eps_d(J+-) = 0
//   S^z_d(J0)         = (q-1)^{-1} (1 - z d G^{-1}),  S(J+-) = -q^{+-1} J+-
//   R^{z,e}           = q^{2 log_q(zG) x log_q(eG)}
//                       sum_n (1-q^{-2})^n q^{n(n-1)/2} / [n]_q!
//                             ((zG)^{-1} J+)^n x (e G J-)^n

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdef/colour.hpp"
#include "qdef/qarith.hpp"
#include "qdef/report.hpp"
#include "qdef/reps.hpp"

namespace qdef {

/// A representation whose colour does not match the side of (q-1)^{-1} a map
/// requires (e.g. log_q of a negative G eigenvalue).
class ColourMismatch : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

enum class Generator { J0, Jplus, Jminus };

inline constexpr Generator kGenerators[3] = {Generator::J0, Generator::Jplus,
                                             Generator::Jminus};

std::string_view to_string(Generator g);

struct Factor {
  enum class Kind { J0, Jplus, Jminus, G, Ginv, LogQ };
  Kind kind;
  /// Only used by LogQ: log_q(colour * G(J0)).
  ColourLabel colour = ColourLabel::plus();

  static Factor of(Generator g);
};

struct GeneratorWord {
  double scalar = 1.0;
  std::vector<Factor> factors;

  static GeneratorWord unit(double scalar = 1.0) { return {scalar, {}}; }
  static GeneratorWord of(Generator g, double scalar = 1.0) {
    return {scalar, {Factor::of(g)}};
  }
};

/// A finite linear combination of words.
struct Element {
  std::vector<GeneratorWord> terms;
};

struct TensorTerm {
  double coef = 1.0;
  GeneratorWord left;
  GeneratorWord right;
};

/// A finite sum of elementary tensors in A (x) A.
struct TensorElement {
  std::vector<TensorTerm> terms;

  /// tau: a (x) b -> b (x) a.
  TensorElement flipped() const;
};

/// Matrices assigned to the generators by an algebra (anti)homomorphism.
/// J0 is always diagonal and stored as its diagonal.
struct Realization {
  Vector j0;
  Matrix jp;
  Matrix jm;
  bool anti = false;
  double q = 0.5;

  int dim() const { return static_cast<int>(j0.size()); }
  Matrix identity() const { return Matrix::Identity(dim(), dim()); }
  Vector g_diag() const;

  Matrix eval(const Factor& f) const;
  Matrix eval(const GeneratorWord& w) const;
  Matrix eval(const Element& e) const;
  Matrix eval(Generator g) const { return eval(GeneratorWord::of(g)); }
};

/// The representation itself (homomorphism, identity map).
Realization realize(const Unirrep& rep);

/// base o sigma_c.
Realization sigma_realization(const Realization& base, ColourLabel c);

/// The 1-dimensional realization eps_c.
Realization counit_realization(ColourLabel c, const QContext& ctx);

/// base o S^{zeta}_{delta}. Flips the (anti)homomorphism flag.
Realization antipode_realization(const Realization& base, ColourLabel zeta,
                                 ColourLabel delta);

/// base o (S^{mu}_{eta})^{-1}: J0 -> (q-1)^{-1}(1 - mu eta G^{-1}),
/// J+ -> -q^{-1} J+, J- -> -q J-. Flips the (anti)homomorphism flag.
Realization antipode_inverse_realization(const Realization& base,
                                         ColourLabel mu, ColourLabel eta);

/// (X (x) Y) o Delta^{zeta,eta}_delta. X and Y must be homomorphisms.
Realization coproduct_realization(const Realization& X, const Realization& Y,
                                  ColourLabel zeta, ColourLabel eta,
                                  ColourLabel delta);

// Symbolic structure maps on generators.

/// sigma_c(A); sigma_{-1}(J0) = 2(q-1)^{-1} - J0.
Element sigma_apply(Generator g, ColourLabel c, const QContext& ctx);
inline Element sigma_apply(Generator g, const QContext& ctx) {
  return sigma_apply(g, ColourLabel::minus(), ctx);
}

TensorElement coproduct(Generator g, ColourLabel zeta, ColourLabel eta,
                        ColourLabel delta, const QContext& ctx);

double counit(Generator g, ColourLabel delta, const QContext& ctx);

Element antipode(Generator g, ColourLabel zeta, ColourLabel delta,
                 const QContext& ctx);

/// sum_i coef_i X(a_i) (x) Y(b_i) (Kronecker product, X slot first).
Matrix eval_tensor(const TensorElement& t, const Realization& X,
                   const Realization& Y);

/// m o (X (x) Y): sum_i coef_i X(a_i) Y(b_i). X and Y must act on the same
/// space.
Matrix eval_product(const TensorElement& t, const Realization& X,
                    const Realization& Y);

// Matrix-level structure maps on unirreps.

/// Delta^{zeta,eta}_delta(g) on rep1 (x) rep2. Throws ColourMismatch when
/// rep1 is not of colour zeta or rep2 not of colour eta.
Matrix coproduct_matrix(Generator g, const Unirrep& rep1, const Unirrep& rep2,
                        ColourLabel zeta, ColourLabel eta, ColourLabel delta);
/// Same, with zeta and eta read off the representations.
Matrix coproduct_matrix(Generator g, const Unirrep& rep1, const Unirrep& rep2,
                        ColourLabel delta);

/// S^{zeta}_{delta}(g) on rep.
Matrix antipode_matrix(Generator g, const Unirrep& rep, ColourLabel zeta,
                       ColourLabel delta);

/// Symbolic universal R-matrix R^{zeta,eta}.
struct RSeries {
  ColourLabel zeta;
  ColourLabel eta;
  double q = 0.5;

  /// (1-q^{-2})^n q^{n(n-1)/2} / [n]_q!
  double coefficient(int n) const;
  /// (zeta G)^{-1} J+, raised to the n-th power in term n.
  GeneratorWord left_word() const;
  /// eta G J-, raised to the n-th power in term n.
  GeneratorWord right_word() const;
  /// Factors whose tensor product forms the exponent of the prefactor.
  Factor left_log() const { return {Factor::Kind::LogQ, zeta}; }
  Factor right_log() const { return {Factor::Kind::LogQ, eta}; }
};

RSeries make_r_series(ColourLabel zeta, ColourLabel eta, const QContext& ctx);

struct SeriesEvaluation {
  Matrix value;
  int terms = 0;
  /// max |term n = terms| (the first term beyond the truncation point).
  double truncation_residual = 0.0;
};

/// (X (x) Y)(R). Homomorphic slots keep the factor order (prefactor first);
/// antihomomorphic slots reverse it inside each word and move the word in
/// front of the prefactor. Throws ColourMismatch if log_q meets a
/// nonpositive eigenvalue.
SeriesEvaluation evaluate_series(const RSeries& rs, const Realization& X,
                                 const Realization& Y);

/// R^{zeta,eta} on rep1 (x) rep2, zeta and eta read off the representations.
Matrix r_matrix(const Unirrep& rep1, const Unirrep& rep2);

/// Embed an operator on slots (a, b) of a 3-fold tensor product, a < b.
Matrix embed_pair(const Matrix& m, int a, int b, std::array<int, 3> dims);

/// Max-norm residuals of the defining relations for a realization with
/// A+_q(1) structure functions.
struct RelationResiduals {
  double raise = 0.0;
  double lower = 0.0;
  double cross = 0.0;
  double scale = 0.0;
  double max() const { return std::max({raise, lower, cross}); }
};
RelationResiduals relation_residuals(const Realization& r);

// Identity sweeps. Every sweep enumerates all admissible colour-index
// assignments for the given dimensions (N-labels), builds the matched
// unirreps and records one IdentityRecord per assignment (max over the three
// generators where the identity is stated per generator).

/// Coproduct homomorphism property on V1 (x) V2.
VerificationReport check_coproduct_homomorphism(int N1, int N2,
                                                const QContext& ctx);

/// Generalized coassociativity, counit and antipode axioms.
VerificationReport check_hopf_axioms(std::array<int, 3> Ns,
                                     const QContext& ctx);

/// The three sigma-transformation laws.
VerificationReport check_sigma_laws(int N1, int N2, const QContext& ctx);

/// Invertibility, intertwining, sigma covariance, delta independence,
/// truncation, counit and antipode identities of R on V1 (x) V2.
VerificationReport check_r_matrix(int N1, int N2, const QContext& ctx);

/// Both quasitriangularity (fission) identities on V1 (x) V2 (x) V3.
VerificationReport check_quasitriangularity(std::array<int, 3> Ns,
                                            const QContext& ctx);

/// R12 R13 R23 = R23 R13 R12 for all 8 colour triples.
VerificationReport check_coloured_ybe(std::array<int, 3> Ns,
                                      const QContext& ctx);

} // namespace qdef
