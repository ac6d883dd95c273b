#pragma once

#include "finframe/frames.hpp"
#include "finframe/types.hpp"

#include <optional>
#include <string_view>

namespace finframe {

/// Which property the ambient system is built to carry.
enum class DilationMode { Tight, Frame, CompleteBessel, Bessel };

const char* to_string(DilationMode mode);
std::optional<DilationMode> mode_from_string(std::string_view name);

/// An ambient-space system {e_j} whose leading-coordinate projection recovers
/// the original system: the first original_dim rows of system.mat equal the
/// input synthesis matrix entrywise (rows are copied, never recomputed).
///
/// The remaining complement_rows rows are scale times the conjugate
/// transposes of an orthonormal basis of the null space of the input, so that
/// E^H E = F^H F + scale^2 * P_null.
struct Dilation {
  DilationMode mode = DilationMode::Bessel;
  Index original_dim = 0;      ///< d
  Index ambient_dim = 0;       ///< m = d + complement_rows = system.dim()
  VectorSystem system;         ///< the ambient system, m x count
  Index complement_rows = 0;   ///< number of appended rows
  double scale = 0.0;          ///< factor applied to appended rows
  Bounds constants;            ///< (A, B) recorded from the input analysis
};

/// Throws DimensionError unless the Dilation's shape invariants hold.
void validate(const Dilation& dil);

/// Tight-frame dilation: ambient system is sqrt(A) times a unitary basis of
/// the count-dimensional space (orthogonal columns with squared norm A).
/// Throws PreconditionError(NotFrame) on incomplete input,
/// PreconditionError(NotTight) when upper - lower > eq_rel * upper.
Dilation dilate_tight(const VectorSystem& sys, const Tolerances& tol = {});

/// Frame dilation: ambient system is a Riesz basis of the count-dimensional
/// space with the same optimal constants A <= B as the input frame.
/// Throws PreconditionError(NotFrame) on incomplete input.
Dilation dilate_frame(const VectorSystem& sys, const Tolerances& tol = {});

/// Complete-Bessel dilation: ambient system is square, complete and
/// omega-linearly independent (an invertible matrix); complement rows are
/// unscaled. Throws PreconditionError(NotComplete) on incomplete input.
Dilation dilate_complete_bessel(const VectorSystem& sys, const Tolerances& tol = {});

/// Bessel dilation: ambient system satisfies the upper Riesz inequality with
/// the same optimal constant B; ambient_dim = dim + (count - rank). Accepts
/// any input, including rank-deficient and zero systems; the zero system
/// yields a valid dilation with scale 0.
Dilation dilate_bessel(const VectorSystem& sys, const Tolerances& tol = {});

/// Leading-coordinate projection: the system of the first original_dim
/// coordinates of each ambient vector (row truncation).
VectorSystem project(const Dilation& dil);

/// Row truncation of an arbitrary ambient system onto its leading
/// original_dim coordinates.
VectorSystem project(const VectorSystem& ambient, Index original_dim);

}  // namespace finframe
