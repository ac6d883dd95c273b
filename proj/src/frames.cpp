#include "finframe/frames.hpp"

#include <string>
#include <utility>

namespace finframe {

VectorSystem::VectorSystem(CMatrix mat) : mat_(std::move(mat)) {
  if (mat_.rows() < 1 || mat_.cols() < 1) {
    throw DimensionError("VectorSystem: matrix is " + std::to_string(mat_.rows()) +
                         "x" + std::to_string(mat_.cols()) +
                         ", need at least one row and one column");
  }
  if (!mat_.allFinite()) {
    throw DimensionError("VectorSystem: matrix contains non-finite entries");
  }
}

CMatrix frame_operator(const VectorSystem& sys) {
  return sys.mat() * sys.mat().adjoint();
}

CMatrix gram(const VectorSystem& sys) {
  return sys.mat().adjoint() * sys.mat();
}

namespace {

Bounds extremal_eigenvalues(const CMatrix& hermitian) {
  const RealVector ev = hermitian_eigs(hermitian).values.cwiseMax(0.0);
  return Bounds{ev(0), ev(ev.size() - 1)};
}

}  // namespace

Bounds frame_bounds(const VectorSystem& sys) {
  return extremal_eigenvalues(frame_operator(sys));
}

Bounds riesz_bounds(const VectorSystem& sys) {
  return extremal_eigenvalues(gram(sys));
}

double bessel_bound(const VectorSystem& sys) { return op_norm_sq(sys.mat()); }

bool is_complete(const VectorSystem& sys, const Tolerances& tol) {
  return numeric_rank(sys.mat(), tol) == sys.dim();
}

bool is_omega_independent(const VectorSystem& sys, const Tolerances& tol) {
  return numeric_rank(sys.mat(), tol) == sys.count();
}

VectorSystem r_dual(const VectorSystem& sys) {
  return VectorSystem(sys.mat().transpose());
}

SystemAnalysis classify(const VectorSystem& sys, const Tolerances& tol) {
  require_valid(tol);
  SystemAnalysis out;

  const Bounds fb = frame_bounds(sys);
  const Bounds rb = riesz_bounds(sys);
  out.frame_lower = fb.lower;
  out.frame_upper = fb.upper;
  out.riesz_lower = rb.lower;
  out.riesz_upper = rb.upper;

  out.rank = numeric_rank(sys.mat(), tol);
  out.is_complete = out.rank == sys.dim();
  out.is_omega_independent = out.rank == sys.count();

  // In finite dimension completeness and the frame property coincide; the
  // rank decision is better conditioned than thresholding lambda_min.
  out.is_frame = out.is_complete;
  out.is_tight =
      out.is_frame && (out.frame_upper - out.frame_lower) <= tol.eq_rel * out.frame_upper;
  out.is_riesz_basis =
      out.is_complete && out.riesz_lower > tol.rank_rel * out.riesz_upper;

  return out;
}

}  // namespace finframe
