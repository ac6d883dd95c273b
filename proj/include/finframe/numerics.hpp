#pragma once

#include "finframe/types.hpp"

namespace finframe {

/// Result of a Hermitian eigendecomposition, H = vectors * diag(values) * vectors^H.
struct HermitianEigs {
  RealVector values;  ///< eigenvalues, ascending
  CMatrix vectors;    ///< orthonormal eigenvector columns, matching order
};

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized as
/// (H + H^H)/2 before decomposition. Throws DimensionError on non-square input.
HermitianEigs hermitian_eigs(const CMatrix& H);

/// Numeric rank: the number of Gram eigenvalues (squared singular values)
/// exceeding rank_rel times the largest one; 0 for the zero matrix.
Index numeric_rank(const CMatrix& M, const Tolerances& tol = {});

/// Orthonormal basis of the right null space of M, returned as the columns of
/// a cols x k matrix, k = cols - numeric_rank(M).
///
/// Deterministic ordering rule: eigenvectors of M^H M with eigenvalues below
/// the rank threshold, ascending eigenvalue then index, re-orthonormalized by
/// a modified Gram-Schmidt pass, each column phased so that its first nonzero
/// coordinate is real and positive.
CMatrix nullspace_onb(const CMatrix& M, const Tolerances& tol = {});

/// Squared operator norm, lambda_max(M^H M) = lambda_max(M M^H).
double op_norm_sq(const CMatrix& M);

}  // namespace finframe
