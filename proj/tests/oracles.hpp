#pragma once

#include "finframe/frames.hpp"

namespace fftest {

// Independent brute-force bounds on the Rayleigh quotient
// sum_k |<f, f_k>|^2 over unit vectors f, by a dense angular grid scan at
// base_step (radians) followed by local grid refinement around each
// extremum. Sums the inner products directly from the vectors; never forms
// the frame operator or touches the eigensolver.
//
// Supported: real-valued systems with dim <= 3 (unit sphere angles) and
// complex systems with dim <= 2 (projective parametrization
// (cos t, sin t e^{i p})). Throws finframe::DimensionError otherwise.
finframe::Bounds rayleigh_grid_bounds(const finframe::VectorSystem& sys,
                                      double base_step);

}  // namespace fftest
