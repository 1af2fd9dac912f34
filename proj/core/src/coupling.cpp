#include "qdef/coupling.hpp"

#include <cmath>
#include <string>

#include "qdef/hopf.hpp"

namespace qdef {

namespace {

Matrix concat_blocks(const std::vector<CouplingBlock>& blocks, int dim) {
  Matrix out(dim, dim);
  int col = 0;
  for (const auto& b : blocks) {
    out.middleCols(col, b.coeffs.cols()) = b.coeffs;
    col += static_cast<int>(b.coeffs.cols());
  }
  return out;
}

} // namespace

double QCGTable::coefficient(int n1, int n2, int N, int n) const {
  for (const auto& b : blocks)
    if (b.N == N) {
      if (n1 < 0 || n1 > N1 || n2 < 0 || n2 > N2 || n < 0 || n > N)
        return 0.0;
      return b.coeffs(n1 * (N2 + 1) + n2, n);
    }
  return 0.0;
}

Matrix QCGTable::full() const {
  return concat_blocks(blocks, (N1 + 1) * (N2 + 1));
}

Matrix WignerTable::full() const {
  return concat_blocks(blocks, (N1 + 1) * (N2 + 1));
}

QCGTable qcg(int N1, int N2, const QContext& ctx) {
  if (N1 < 0 || N2 < 0)
    throw InvalidArgument("qcg: N1, N2 must be >= 0");
  const Unirrep u1 = build_suq2_unirrep(N1, ctx);
  const Unirrep u2 = build_suq2_unirrep(N2, ctx);
  const int d2 = N2 + 1;
  const int dim = (N1 + 1) * d2;
  const double q = ctx.q();

  auto qpow = [q](const Vector& j0, double sign) {
    return diag_apply(j0, [q, sign](double x) { return std::pow(q, sign * x); });
  };
  Matrix raise(dim, dim);
  {
    // kron(A, B) for the two-factor space, row index n1 * d2 + n2.
    auto kron = [](const Matrix& a, const Matrix& b) {
      Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
      for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
          out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
              a(i, j) * b;
      return out;
    };
    raise = kron(u1.Jp, qpow(u2.j0, 1.0)) + kron(qpow(u1.j0, -1.0), u2.Jp);
  }
  const Matrix lower = raise.transpose();

  QCGTable table{N1, N2, q, {}};
  // Coupled states found so far, grouped by total weight index n1 + n2.
  std::vector<std::vector<Vector>> by_weight(N1 + N2 + 1);

  auto orthogonalize = [&](Vector v, int weight) {
    for (const Vector& u : by_weight[weight])
      v -= u.dot(v) * u;
    return v;
  };

  const int kmax = std::min(N1, N2);
  for (int k = 0; k <= kmax; ++k) {
    const int N = N1 + N2 - 2 * k;
    std::vector<int> support;
    for (int n1 = std::max(0, k - N2); n1 <= std::min(k, N1); ++n1)
      support.push_back(n1 * d2 + (k - n1));

    Matrix restricted(dim, static_cast<Eigen::Index>(support.size()));
    for (std::size_t s = 0; s < support.size(); ++s)
      restricted.col(static_cast<Eigen::Index>(s)) = raise.col(support[s]);

    Vector hw = Vector::Zero(dim);
    if (k == 0) {
      hw(support.front()) = 1.0;
    } else {
      const Eigen::JacobiSVD<Matrix> svd(restricted, Eigen::ComputeFullV);
      const Vector& sv = svd.singularValues();
      const Eigen::Index m = sv.size();
      // Subspace of weight k has k+1 states, the image has k: a one
      // dimensional kernel, never a multiplicity space.
      const double scale = std::max(1.0, sv(0));
      if (m == static_cast<Eigen::Index>(support.size()) &&
          sv(m - 1) > ctx.tolerance(scale))
        throw DecompositionError("qcg: no highest-weight vector at weight " +
                                 std::to_string(k));
      if (m >= 2 && sv(m - 2) <= ctx.tolerance(scale))
        throw DecompositionError("qcg: degenerate highest-weight space at "
                                 "weight " + std::to_string(k));
      const Vector kernel = svd.matrixV().col(svd.matrixV().cols() - 1);
      for (std::size_t s = 0; s < support.size(); ++s)
        hw(support[s]) = kernel(static_cast<Eigen::Index>(s));
    }
    hw = orthogonalize(hw, k);
    hw.normalize();
    // Smallest n1 first in `support`: make that coefficient positive.
    if (hw(support.front()) < 0.0)
      hw = -hw;

    CouplingBlock block{N, Matrix(dim, N + 1)};
    Vector state = hw;
    for (int n = 0; n <= N; ++n) {
      if (n > 0) {
        state = orthogonalize(lower * state, k + n);
        state.normalize();
      }
      block.coeffs.col(n) = state;
    }
    for (int n = 0; n <= N; ++n)
      by_weight[k + n].push_back(block.coeffs.col(n));
    table.blocks.push_back(std::move(block));
  }
  return table;
}

CoupleResult couple(const Unirrep& rep1, const Unirrep& rep2,
                    ColourLabel delta) {
  const QContext& ctx = rep1.ctx();
  const QCGTable table = qcg(rep1.N, rep2.N, ctx);
  CoupleResult result;
  result.table = WignerTable{rep1.N,  rep2.N,  rep1.delta,  rep2.delta,
                             delta,   ctx.q(), table.blocks};

  const Matrix W = table.full();
  const Matrix J0 = W.transpose() *
                    coproduct_matrix(Generator::J0, rep1, rep2, delta) * W;
  const Matrix Jp = W.transpose() *
                    coproduct_matrix(Generator::Jplus, rep1, rep2, delta) * W;
  const Matrix Jm = W.transpose() *
                    coproduct_matrix(Generator::Jminus, rep1, rep2, delta) * W;

  Matrix block_mask = Matrix::Zero(W.rows(), W.cols());
  int offset = 0;
  for (const auto& b : table.blocks) {
    const int d = b.N + 1;
    block_mask.block(offset, offset, d, d).setOnes();

    Unirrep u = build_aq1_unirrep(b.N, delta, ctx);
    u.j0 = J0.block(offset, offset, d, d).diagonal();
    u.Jp = Jp.block(offset, offset, d, d);
    u.Jm = Jm.block(offset, offset, d, d);
    const CasimirReport cas = check_casimir(u);
    if (!ctx.within(cas.off_scalar, cas.scale) ||
        !ctx.within(cas.expected_residual, cas.scale))
      throw DecompositionError(
          "couple: block N=" + std::to_string(b.N) +
          " has a non-scalar Casimir or wrong Casimir value (off-scalar " +
          std::to_string(cas.off_scalar) + ")");
    result.blocks.push_back(std::move(u));
    offset += d;
  }

  const Matrix outside = Matrix::Ones(W.rows(), W.cols()) - block_mask;
  result.off_block = std::max({max_abs(J0.cwiseProduct(outside)),
                               max_abs(Jp.cwiseProduct(outside)),
                               max_abs(Jm.cwiseProduct(outside))});
  const double scale = std::max({max_abs(J0), max_abs(Jp), 1.0});
  if (!ctx.within(result.off_block, scale))
    throw DecompositionError("couple: coproduct is not block diagonal in the "
                             "coupled basis (off-block " +
                             std::to_string(result.off_block) + ")");
  return result;
}

CoupledActionReport verify_coupled_action(const Unirrep& rep1,
                                          const Unirrep& rep2,
                                          ColourLabel delta) {
  const QContext& ctx = rep1.ctx();
  const Matrix W = qcg(rep1.N, rep2.N, ctx).full();
  const int dim = static_cast<int>(W.rows());

  // Standard block-diagonal images.
  std::array<Matrix, 3> expect;
  for (auto& m : expect)
    m = Matrix::Zero(dim, dim);
  std::vector<std::pair<int, int>> ranges; // (offset, N)
  int offset = 0;
  for (int N = rep1.N + rep2.N; N >= std::abs(rep1.N - rep2.N); N -= 2) {
    const Unirrep u = build_aq1_unirrep(N, delta, ctx);
    expect[0].block(offset, offset, N + 1, N + 1) = u.J0();
    expect[1].block(offset, offset, N + 1, N + 1) = u.Jp;
    expect[2].block(offset, offset, N + 1, N + 1) = u.Jm;
    ranges.emplace_back(offset, N);
    offset += N + 1;
  }

  CoupledActionReport report;
  int g = 0;
  for (Generator A : kGenerators) {
    const Matrix got =
        W.transpose() * coproduct_matrix(A, rep1, rep2, delta) * W;
    const Matrix diff = got - expect[g];
    report.residual = std::max(report.residual, max_abs(diff));
    report.scale = std::max({report.scale, max_abs(got), max_abs(expect[g])});
    ++g;
  }
  report.pass = ctx.within(report.residual, report.scale);
  if (report.pass)
    return report;

  g = 0;
  for (Generator A : kGenerators) {
    const Matrix got =
        W.transpose() * coproduct_matrix(A, rep1, rep2, delta) * W;
    for (int r = 0; r < dim && !report.failure; ++r)
      for (int c = 0; c < dim; ++c) {
        const double d = std::abs(got(r, c) - expect[g](r, c));
        if (!ctx.within(d, report.scale)) {
          int block_N = -1;
          for (auto [off, N] : ranges)
            if (r >= off && r <= off + N)
              block_N = N;
          static constexpr const char* names[] = {"J0", "J+", "J-"};
          report.failure =
              CoupledActionReport::Failure{names[g], block_N, r, c, d};
          break;
        }
      }
    if (report.failure)
      break;
    ++g;
  }
  return report;
}

VerificationReport check_coupling(int N1, int N2, const QContext& ctx) {
  VerificationReport report;
  const QCGTable reference = qcg(N1, N2, ctx);
  const Matrix W = reference.full();
  const int dim = static_cast<int>(W.rows());
  const Matrix I = Matrix::Identity(dim, dim);
  const std::vector<int> dims{N1, N2};

  auto record = [&](std::string name, std::vector<int> colours, double residual,
                    double scale) {
    IdentityRecord r;
    r.identity = std::move(name);
    r.colours = std::move(colours);
    r.dims = dims;
    r.q = ctx.q();
    r.residual = residual;
    r.scale = scale;
    r.pass = std::isfinite(residual) && ctx.within(residual, scale);
    report.records.push_back(std::move(r));
  };

  int total = 0;
  for (const auto& b : reference.blocks)
    total += b.N + 1;
  record("coupling.dimensions", {}, std::abs(total - dim), 1.0);
  record("coupling.orthogonality", {}, max_abs(W.transpose() * W - I), 1.0);
  record("coupling.completeness", {}, max_abs(W * W.transpose() - I), 1.0);

  for (ColourLabel zeta : kColours)
    for (ColourLabel eta : kColours)
      for (ColourLabel delta : kColours) {
        const Unirrep u1 = build_aq1_unirrep(N1, zeta, ctx);
        const Unirrep u2 = build_aq1_unirrep(N2, eta, ctx);
        const std::vector<int> colours{zeta.value(), eta.value(),
                                       delta.value()};

        const CoupleResult res = couple(u1, u2, delta);
        record("coupling.colour_independence", colours,
               max_abs(res.table.full() - W), 1.0);

        double casimir = 0.0, cas_scale = 0.0;
        for (const Unirrep& b : res.blocks) {
          const CasimirReport cr = check_casimir(b);
          casimir = std::max({casimir, cr.off_scalar, cr.expected_residual});
          cas_scale = std::max(cas_scale, cr.scale);
        }
        record("coupling.casimir", colours, casimir, cas_scale);

        const CoupledActionReport act = verify_coupled_action(u1, u2, delta);
        record("coupling.action", colours, act.residual, act.scale);
      }
  return report;
}

} // namespace qdef
