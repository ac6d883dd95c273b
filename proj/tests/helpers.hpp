#pragma once

#include "finframe/dilation.hpp"
#include "finframe/frames.hpp"
#include "finframe/gen.hpp"

#include <cstdint>

namespace fftest {

using finframe::Bounds;
using finframe::CMatrix;
using finframe::Complex;
using finframe::Index;
using finframe::VectorSystem;

inline VectorSystem standard_basis(Index d) {
  return VectorSystem(CMatrix::Identity(d, d));
}

// {e1, e1, e2} in C^2: frame bounds (1, 2), Gram spectrum {0, 1, 2}.
inline VectorSystem e1_e1_e2() {
  CMatrix m(2, 3);
  m << 1, 1, 0,
       0, 0, 1;
  return VectorSystem(m);
}

// {e1, e1} in C^2: Bessel constant 2, rank 1.
inline VectorSystem e1_e1() {
  CMatrix m(2, 2);
  m << 1, 1,
       0, 0;
  return VectorSystem(m);
}

// {e1} in C^2: Bessel only, omega-independent, incomplete.
inline VectorSystem single_e1() {
  CMatrix m(2, 1);
  m << 1, 0;
  return VectorSystem(m);
}

inline VectorSystem mercedes() {
  return finframe::generate({finframe::SystemKind::Mercedes, 2, 3, {}, 0, {}, {}});
}

inline VectorSystem random_system(Index dim, Index count, std::uint64_t seed) {
  return finframe::generate({finframe::SystemKind::Random, dim, count, {}, seed, {}, {}});
}

inline CMatrix random_unitary(Index n, std::uint64_t seed) {
  return finframe::generate(
             {finframe::SystemKind::RieszBasis, n, n, {}, seed, 1.0, 1.0})
      .mat();
}

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline bool bit_equal(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (!(a(i, j).real() == b(i, j).real() && a(i, j).imag() == b(i, j).imag())) {
        return false;
      }
    }
  }
  return true;
}

inline VectorSystem real_part_system(const VectorSystem& sys) {
  return VectorSystem(sys.mat().real().cast<Complex>());
}

}  // namespace fftest
