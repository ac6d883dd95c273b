#include "finframe/verify.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <string>

namespace finframe {

namespace {

double relative_floor(double value) { return std::max(value, DBL_MIN); }

CheckResult residual_check(std::string name, double residual, double threshold) {
  return CheckResult{std::move(name), residual <= threshold, residual, threshold};
}

// Extremal singular values of the ambient matrix via the smaller Gram.
Bounds singular_value_bounds_sq(const VectorSystem& sys) {
  return sys.dim() <= sys.count() ? frame_bounds(sys) : riesz_bounds(sys);
}

}  // namespace

VerificationReport verify_dilation(const VectorSystem& sys, const Dilation& dil,
                                   const Tolerances& tol, double projection_abs_tol) {
  require_valid(tol);
  validate(dil);
  if (sys.count() != dil.system.count()) {
    throw DimensionError("verify_dilation: original has " + std::to_string(sys.count()) +
                         " vectors, dilation has " + std::to_string(dil.system.count()));
  }
  if (sys.dim() != dil.original_dim) {
    throw DimensionError("verify_dilation: original dim " + std::to_string(sys.dim()) +
                         " does not match dilation original_dim " +
                         std::to_string(dil.original_dim));
  }

  VerificationReport report;
  report.mode = dil.mode;

  const CMatrix& ambient = dil.system.mat();
  const double projection_residual =
      (ambient.topRows(sys.dim()) - sys.mat()).cwiseAbs().maxCoeff();
  report.checks.push_back(
      residual_check("projection", projection_residual, projection_abs_tol));

  const Bounds input_bounds = frame_bounds(sys);
  const Bounds ambient_riesz = riesz_bounds(dil.system);
  const Index ambient_rank = numeric_rank(ambient, tol);

  switch (dil.mode) {
    case DilationMode::Tight: {
      const double a = input_bounds.lower;
      const CMatrix g = ambient.adjoint() * ambient;
      const CMatrix target = a * CMatrix::Identity(g.rows(), g.cols());
      report.checks.push_back(residual_check("gram_scaled_identity",
                                             (g - target).cwiseAbs().maxCoeff(),
                                             tol.eq_rel * relative_floor(a)));
      report.checks.push_back(residual_check(
          "ambient_complete", static_cast<double>(dil.ambient_dim - ambient_rank), 0.0));
      break;
    }
    case DilationMode::Frame: {
      report.checks.push_back(residual_check(
          "riesz_lower_match", std::abs(ambient_riesz.lower - input_bounds.lower),
          tol.eq_rel * relative_floor(input_bounds.lower)));
      report.checks.push_back(residual_check(
          "riesz_upper_match", std::abs(ambient_riesz.upper - input_bounds.upper),
          tol.eq_rel * relative_floor(input_bounds.upper)));
      report.checks.push_back(residual_check(
          "ambient_complete", static_cast<double>(dil.ambient_dim - ambient_rank), 0.0));
      break;
    }
    case DilationMode::CompleteBessel: {
      const Bounds sv = singular_value_bounds_sq(dil.system);
      const double ratio =
          sv.upper > 0.0 ? std::sqrt(sv.lower / sv.upper) : 0.0;
      CheckResult sigma{"sigma_min_ratio", ratio > tol.rank_rel, ratio, tol.rank_rel};
      report.checks.push_back(sigma);
      report.checks.push_back(residual_check(
          "ambient_complete", static_cast<double>(dil.ambient_dim - ambient_rank), 0.0));
      break;
    }
    case DilationMode::Bessel: {
      const double b = bessel_bound(sys);
      report.checks.push_back(residual_check("upper_riesz_match",
                                             std::abs(ambient_riesz.upper - b),
                                             tol.eq_rel * relative_floor(b)));
      break;
    }
  }

  report.overall = std::all_of(report.checks.begin(), report.checks.end(),
                               [](const CheckResult& c) { return c.passed; });
  return report;
}

DualityCheck check_duality(const VectorSystem& sys) {
  DualityCheck out;
  // Column route: lambda_max of the dim x dim frame operator F F^H.
  out.bessel_of_columns = frame_bounds(sys).upper;
  // Row route: lambda_max of the count x count frame operator of the row
  // system, i.e. of conj(F^H F).
  out.upper_riesz_of_rows = frame_bounds(r_dual(sys)).upper;
  const double scale = std::max(1.0, std::max(out.bessel_of_columns, out.upper_riesz_of_rows));
  out.residual = std::abs(out.bessel_of_columns - out.upper_riesz_of_rows) / scale;
  return out;
}

}  // namespace finframe
