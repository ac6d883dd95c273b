#include "finframe/numerics.hpp"

#include <cmath>

namespace finframe {

namespace {

constexpr double kPhaseEps = 1e-12;

// Eigenvalues of the smaller of M^H M and M M^H, ascending, clamped to >= 0.
// The nonzero spectra of the two products coincide, so either carries the
// singular values of M.
RealVector gram_eigenvalues(const CMatrix& M) {
  if (M.size() == 0) return RealVector(0);
  CMatrix G;
  if (M.rows() <= M.cols()) {
    G = M * M.adjoint();
  } else {
    G = M.adjoint() * M;
  }
  return hermitian_eigs(G).values.cwiseMax(0.0);
}

}  // namespace

void require_valid(const Tolerances& tol) {
  if (!tol.valid()) {
    throw ConfigError("tolerances must lie strictly inside (0, 1): rank_rel=" +
                      std::to_string(tol.rank_rel) +
                      " eq_rel=" + std::to_string(tol.eq_rel));
  }
}

HermitianEigs hermitian_eigs(const CMatrix& H) {
  if (H.rows() != H.cols()) {
    throw DimensionError("hermitian_eigs: matrix is " + std::to_string(H.rows()) +
                         "x" + std::to_string(H.cols()) + ", expected square");
  }
  CMatrix sym = 0.5 * (H + H.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian_eigs: eigendecomposition did not converge");
  }
  return HermitianEigs{solver.eigenvalues(), solver.eigenvectors()};
}

Index numeric_rank(const CMatrix& M, const Tolerances& tol) {
  require_valid(tol);
  const RealVector ev = gram_eigenvalues(M);
  if (ev.size() == 0) return 0;
  const double lambda_max = ev(ev.size() - 1);
  if (lambda_max <= 0.0) return 0;
  // Threshold on the Gram eigenvalue (squared singular value) scale. The
  // Gram route resolves sigma only down to sqrt(eps) * sigma_max, so a
  // sigma-scale cut at rank_rel would misread exact rank deficiency.
  const double threshold = tol.rank_rel * lambda_max;
  Index rank = 0;
  for (Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > threshold) ++rank;
  }
  return rank;
}

CMatrix nullspace_onb(const CMatrix& M, const Tolerances& tol) {
  require_valid(tol);
  const Index n = M.cols();
  const Index k = n - numeric_rank(M, tol);
  if (k == 0) return CMatrix(n, 0);

  const HermitianEigs eig = hermitian_eigs(M.adjoint() * M);
  CMatrix basis = eig.vectors.leftCols(k);

  // Modified Gram-Schmidt in ascending-eigenvalue order; the solver output is
  // already orthonormal, the pass pins the contract-level ordering.
  for (Index j = 0; j < k; ++j) {
    for (Index i = 0; i < j; ++i) {
      basis.col(j) -= basis.col(i).dot(basis.col(j)) * basis.col(i);
    }
    const double norm = basis.col(j).norm();
    if (norm <= 0.0) {
      throw Error("nullspace_onb: degenerate basis column");
    }
    basis.col(j) /= norm;
    // Canonical phase: first nonzero coordinate real and positive.
    for (Index row = 0; row < n; ++row) {
      const double mag = std::abs(basis(row, j));
      if (mag > kPhaseEps) {
        basis.col(j) *= std::conj(basis(row, j)) / mag;
        break;
      }
    }
  }
  return basis;
}

double op_norm_sq(const CMatrix& M) {
  const RealVector ev = gram_eigenvalues(M);
  if (ev.size() == 0) return 0.0;
  return ev(ev.size() - 1);
}

}  // namespace finframe
