#pragma once

// Coupling of two unirreps through the coloured coproduct.
//
// The coloured coproduct Delta^{zeta,eta}_delta on V1^zeta (x) V2^eta agrees
// with the su_q(2) coproduct
//   Delta(j+-) = j+- (x) q^{j0} + q^{-j0} (x) j+-
// once G is written as zeta q^{-j0} on V^zeta, so the coupling coefficients
// are the su_q(2) ones for every colour assignment; only the J0 labels of
// the coupled states depend on delta.
//
// Sign convention (Condon-Shortley type): in the highest-weight state of
// every block the coefficient with the largest first-factor weight (smallest
// n1) is positive. Lower states in a block are generated by the coupled J-
// with positive normalization, matching the unirrep matrices.

#include <stdexcept>
#include <vector>

#include "qdef/colour.hpp"
#include "qdef/qarith.hpp"
#include "qdef/report.hpp"
#include "qdef/reps.hpp"

namespace qdef {

class DecompositionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct CouplingBlock {
  int N = 0;
  /// Rows: product basis index n1 * (N2+1) + n2. Columns: n = 0..N.
  Matrix coeffs;
};

/// su_q(2) Clebsch-Gordan table. Blocks are ordered by decreasing N.
struct QCGTable {
  int N1 = 0;
  int N2 = 0;
  double q = 0.5;
  std::vector<CouplingBlock> blocks;

  /// <N1/2 N1/2-n1, N2/2 N2/2-n2 | N/2 N/2-n>_q; 0 for an absent block.
  double coefficient(int n1, int n2, int N, int n) const;
  /// Orthogonal change of basis, columns = coupled states block by block.
  Matrix full() const;
};

QCGTable qcg(int N1, int N2, const QContext& ctx);

/// Wigner table for the coupling of J1^zeta and J2^eta into J^delta.
struct WignerTable {
  int N1 = 0;
  int N2 = 0;
  ColourLabel zeta;
  ColourLabel eta;
  ColourLabel delta;
  double q = 0.5;
  std::vector<CouplingBlock> blocks;

  Matrix full() const;
};

struct CoupleResult {
  WignerTable table;
  /// One unirrep of colour delta per block, in table order, read off the
  /// conjugated coproduct matrices.
  std::vector<Unirrep> blocks;
  /// Largest entry of the conjugated coproducts outside the diagonal blocks.
  double off_block = 0.0;
};

/// Decompose rep1 (x) rep2 under Delta^{zeta,eta}_delta, where zeta and eta
/// are the colours of rep1 and rep2. Throws DecompositionError if a block
/// Casimir is not scalar or the conjugated coproducts are not block
/// diagonal.
CoupleResult couple(const Unirrep& rep1, const Unirrep& rep2,
                    ColourLabel delta);

struct CoupledActionReport {
  double residual = 0.0;
  double scale = 0.0;
  bool pass = true;
  /// First entry exceeding tolerance, if any.
  struct Failure {
    const char* generator = "";
    int N = 0;
    int row = 0;
    int col = 0;
    double residual = 0.0;
  };
  std::optional<Failure> failure;
};

/// <coupled| Delta(A) |coupled> against the standard unirrep matrices,
/// block by block, for A = J0, J+, J-.
CoupledActionReport verify_coupled_action(const Unirrep& rep1,
                                          const Unirrep& rep2,
                                          ColourLabel delta);

/// Dimension count, orthogonality, completeness, colour independence,
/// coupled action and block Casimir for every colour assignment.
VerificationReport check_coupling(int N1, int N2, const QContext& ctx);

} // namespace qdef
