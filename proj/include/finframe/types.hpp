#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace finframe {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Base class of all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Shape or dimension misuse.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Invalid tolerance or generator specification.
class ConfigError : public Error {
public:
  using Error::Error;
};

/// A mathematical precondition of a construction fails for the given input
/// (e.g. requesting a tight dilation of a non-tight system).
class PreconditionError : public Error {
public:
  enum class Kind { NotTight, NotFrame, NotComplete };

  PreconditionError(Kind kind, const std::string& message)
      : Error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

/// Relative thresholds governing rank, tightness and equality decisions.
struct Tolerances {
  /// Singular values at or below rank_rel * sigma_max count as zero.
  double rank_rel = 1e-10;
  /// Relative threshold for bound comparisons (tightness, bound matching).
  double eq_rel = 1e-8;

  bool valid() const {
    return rank_rel > 0.0 && rank_rel < 1.0 && eq_rel > 0.0 && eq_rel < 1.0;
  }
};

/// Throws ConfigError unless tol.valid().
void require_valid(const Tolerances& tol);

}  // namespace finframe
