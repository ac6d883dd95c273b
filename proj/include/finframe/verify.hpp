#pragma once

#include "finframe/dilation.hpp"
#include "finframe/frames.hpp"

#include <string>
#include <vector>

namespace finframe {

/// One verification clause. `residual` is the measured quantity (always
/// nonnegative) and `threshold` the decision boundary. For residual-style
/// checks the clause passes when residual <= threshold; for the
/// `sigma_min_ratio` check the measured ratio must exceed the threshold.
struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double threshold = 0.0;
};

/// Per-clause verification outcome for a (system, dilation) pair.
struct VerificationReport {
  DilationMode mode = DilationMode::Bessel;
  std::vector<CheckResult> checks;
  bool overall = false;  ///< conjunction of all passed flags
};

/// Independent numerical verification that `dil` delivers what its mode
/// promises for the original system `sys`: exact leading-row projection plus
/// the mode's spectral clauses. All spectra are recomputed from scratch;
/// nothing from the construction is reused.
///
/// The projection clause compares the leading rows entrywise against
/// `projection_abs_tol` (0 demands bit-exact equality, the guarantee of the
/// library's own constructions; file interchange relaxes it to 1e-12).
///
/// Throws DimensionError on shape mismatch between sys and dil.
VerificationReport verify_dilation(const VectorSystem& sys, const Dilation& dil,
                                   const Tolerances& tol = {},
                                   double projection_abs_tol = 0.0);

/// The two sides of the row/column duality: the Bessel constant of the
/// columns and the upper Riesz constant of the rows, computed through
/// different operator products, with their relative difference.
struct DualityCheck {
  double bessel_of_columns = 0.0;
  double upper_riesz_of_rows = 0.0;
  double residual = 0.0;
};

DualityCheck check_duality(const VectorSystem& sys);

}  // namespace finframe
