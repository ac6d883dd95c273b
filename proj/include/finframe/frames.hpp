#pragma once

#include "finframe/numerics.hpp"
#include "finframe/types.hpp"

namespace finframe {

/// A system {f_j} of `count` vectors in `dim`-dimensional complex coordinate
/// space, stored as the columns of a dim x count matrix (the synthesis matrix:
/// the map c -> sum_j c(j) f_j).
///
/// Invariants: dim >= 1, count >= 1, all entries finite. Enforced at
/// construction; violation raises DimensionError. Zero vectors are legal.
class VectorSystem {
public:
  explicit VectorSystem(CMatrix mat);

  Index dim() const { return mat_.rows(); }
  Index count() const { return mat_.cols(); }
  const CMatrix& mat() const { return mat_; }

private:
  CMatrix mat_;
};

/// Optimal constants of a two-sided quadratic inequality, lower <= upper.
struct Bounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Computed bounds, rank and classification flags of a vector system.
struct SystemAnalysis {
  double frame_lower = 0.0;  ///< optimal A, lambda_min of the frame operator
  double frame_upper = 0.0;  ///< optimal B (the Bessel constant)
  double riesz_lower = 0.0;  ///< lambda_min of the Gram matrix
  double riesz_upper = 0.0;  ///< lambda_max of the Gram matrix
  Index rank = 0;
  bool is_complete = false;
  bool is_frame = false;
  bool is_tight = false;
  bool is_riesz_basis = false;
  bool is_omega_independent = false;
};

/// Frame operator S = F F^H (dim x dim, Hermitian PSD); <S f, f> equals
/// sum_k |<f, f_k>|^2.
CMatrix frame_operator(const VectorSystem& sys);

/// Gram matrix G = F^H F (count x count, Hermitian PSD); c^H G c equals
/// the squared norm of sum_k c(k) f_k.
CMatrix gram(const VectorSystem& sys);

/// Optimal frame bounds: extremal eigenvalues of the frame operator.
Bounds frame_bounds(const VectorSystem& sys);

/// Optimal Riesz bounds: extremal eigenvalues of the Gram matrix.
Bounds riesz_bounds(const VectorSystem& sys);

/// Optimal upper (Bessel) constant, the squared operator norm of the
/// synthesis matrix.
double bessel_bound(const VectorSystem& sys);

/// True iff the columns span the whole dim-dimensional space.
bool is_complete(const VectorSystem& sys, const Tolerances& tol = {});

/// True iff the synthesis map is injective: sum_k c(k) f_k = 0 forces c = 0.
bool is_omega_independent(const VectorSystem& sys, const Tolerances& tol = {});

/// The row system {v_i}: dim vectors in count-dimensional space with
/// v_i(j) = f_j(i). Plain entrywise transpose, no conjugation; an involution.
VectorSystem r_dual(const VectorSystem& sys);

/// Full classification under the given tolerances.
SystemAnalysis classify(const VectorSystem& sys, const Tolerances& tol = {});

}  // namespace finframe
