#include "finframe/dilation.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace finframe {

const char* to_string(DilationMode mode) {
  switch (mode) {
    case DilationMode::Tight: return "tight";
    case DilationMode::Frame: return "frame";
    case DilationMode::CompleteBessel: return "complete-bessel";
    case DilationMode::Bessel: return "bessel";
  }
  return "unknown";
}

std::optional<DilationMode> mode_from_string(std::string_view name) {
  if (name == "tight") return DilationMode::Tight;
  if (name == "frame") return DilationMode::Frame;
  if (name == "complete-bessel") return DilationMode::CompleteBessel;
  if (name == "bessel") return DilationMode::Bessel;
  return std::nullopt;
}

void validate(const Dilation& dil) {
  if (dil.original_dim < 1 || dil.original_dim > dil.ambient_dim) {
    throw DimensionError("Dilation: original_dim " + std::to_string(dil.original_dim) +
                         " must lie in [1, ambient_dim=" +
                         std::to_string(dil.ambient_dim) + "]");
  }
  if (dil.system.dim() != dil.ambient_dim) {
    throw DimensionError("Dilation: ambient system has " +
                         std::to_string(dil.system.dim()) + " rows, expected ambient_dim=" +
                         std::to_string(dil.ambient_dim));
  }
  if (dil.ambient_dim != dil.original_dim + dil.complement_rows) {
    throw DimensionError("Dilation: ambient_dim != original_dim + complement_rows");
  }
  if (!(dil.scale >= 0.0) || !std::isfinite(dil.scale)) {
    throw DimensionError("Dilation: scale must be finite and nonnegative");
  }
}

namespace {

// Stacks the input synthesis matrix on scale times the conjugate transposes
// of a null-space ONB, so that E^H E = F^H F + scale^2 * P_null. The appended
// rows are an orthogonal basis, each of squared norm scale^2, of the
// orthogonal complement of the row span.
Dilation stack_on_complement(DilationMode mode, const VectorSystem& sys, double scale,
                             Bounds constants, const Tolerances& tol) {
  const CMatrix basis = nullspace_onb(sys.mat(), tol);  // count x k
  const Index k = basis.cols();
  CMatrix ambient(sys.dim() + k, sys.count());
  ambient.topRows(sys.dim()) = sys.mat();
  if (k > 0) {
    ambient.bottomRows(k) = scale * basis.adjoint();
  }
  Dilation out{mode,
               sys.dim(),
               sys.dim() + k,
               VectorSystem(std::move(ambient)),
               k,
               scale,
               constants};
  validate(out);
  return out;
}

void require_complete(const VectorSystem& sys, const Tolerances& tol,
                      PreconditionError::Kind kind) {
  if (!is_complete(sys, tol)) {
    throw PreconditionError(kind, std::string("system is not complete (rank ") +
                                      std::to_string(numeric_rank(sys.mat(), tol)) +
                                      " < dim " + std::to_string(sys.dim()) + ")");
  }
}

}  // namespace

Dilation dilate_tight(const VectorSystem& sys, const Tolerances& tol) {
  require_valid(tol);
  require_complete(sys, tol, PreconditionError::Kind::NotFrame);
  const Bounds fb = frame_bounds(sys);
  if (fb.upper - fb.lower > tol.eq_rel * fb.upper) {
    throw PreconditionError(PreconditionError::Kind::NotTight,
                            "system is not a tight frame: bounds " +
                                std::to_string(fb.lower) + " < " +
                                std::to_string(fb.upper));
  }
  return stack_on_complement(DilationMode::Tight, sys, std::sqrt(fb.lower), fb, tol);
}

Dilation dilate_frame(const VectorSystem& sys, const Tolerances& tol) {
  require_valid(tol);
  require_complete(sys, tol, PreconditionError::Kind::NotFrame);
  const Bounds fb = frame_bounds(sys);
  // Any scale c with A <= c^2 <= B dilates to a Riesz basis; c = sqrt(A)
  // preserves both optimal constants verbatim.
  return stack_on_complement(DilationMode::Frame, sys, std::sqrt(fb.lower), fb, tol);
}

Dilation dilate_complete_bessel(const VectorSystem& sys, const Tolerances& tol) {
  require_valid(tol);
  require_complete(sys, tol, PreconditionError::Kind::NotComplete);
  const Bounds fb = frame_bounds(sys);
  return stack_on_complement(DilationMode::CompleteBessel, sys, 1.0, fb, tol);
}

Dilation dilate_bessel(const VectorSystem& sys, const Tolerances& tol) {
  require_valid(tol);
  const Bounds fb = frame_bounds(sys);
  // Zero system: B = 0, appended rows are scaled by 0 and the output is the
  // zero system of ambient dimension dim + count.
  return stack_on_complement(DilationMode::Bessel, sys, std::sqrt(bessel_bound(sys)),
                             fb, tol);
}

VectorSystem project(const Dilation& dil) {
  validate(dil);
  return project(dil.system, dil.original_dim);
}

VectorSystem project(const VectorSystem& ambient, Index original_dim) {
  if (original_dim < 1 || original_dim > ambient.dim()) {
    throw DimensionError("project: original_dim " + std::to_string(original_dim) +
                         " must lie in [1, " + std::to_string(ambient.dim()) + "]");
  }
  return VectorSystem(ambient.mat().topRows(original_dim));
}

}  // namespace finframe
