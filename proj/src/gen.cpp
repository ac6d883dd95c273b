#include "finframe/gen.hpp"

#include <cmath>
#include <random>
#include <string>

namespace finframe {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Seedable Gaussian source. mt19937_64 output is specified bit-exactly by the
// standard; the Box-Muller transform below only touches sqrt/log/cos/sin of
// 53-bit uniforms, so a fixed seed reproduces the stream.
class GaussianSource {
public:
  explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u = 0.0;
    do {
      u = uniform();
    } while (u <= 0.0);
    const double v = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u));
    spare_ = radius * std::sin(kTwoPi * v);
    have_spare_ = true;
    return radius * std::cos(kTwoPi * v);
  }

  // Standard complex Gaussian CN(0,1): unit total variance.
  Complex complex_normal() {
    const double re = normal();
    const double im = normal();
    return Complex(re * M_SQRT1_2, im * M_SQRT1_2);
  }

private:
  std::mt19937_64 rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Row-major fill order, fixed as part of the determinism contract.
CMatrix gaussian_matrix(Index rows, Index cols, GaussianSource& src) {
  CMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      m(i, j) = src.complex_normal();
    }
  }
  return m;
}

// Haar-style unitary: QR of a square Gaussian draw with the column phases
// fixed from the R diagonal.
CMatrix random_unitary(Index n, GaussianSource& src) {
  const CMatrix g = gaussian_matrix(n, n, src);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) {
      q.col(k) *= r(k, k) / mag;
    }
  }
  return q;
}

CMatrix mercedes_matrix() {
  const double s = std::sqrt(3.0) / 2.0;
  CMatrix m(2, 3);
  m << Complex(0.0), Complex(-s), Complex(s),
       Complex(1.0), Complex(-0.5), Complex(-0.5);
  return m;
}

[[noreturn]] void invalid(const std::string& message) { throw ConfigError("generate: " + message); }

void validate_spec(const GenSpec& spec) {
  if (spec.dim < 1 || spec.count < 1) {
    invalid("dim and count must be at least 1");
  }
  if (spec.rank && (*spec.rank < 1 || *spec.rank > std::min(spec.dim, spec.count))) {
    invalid("rank must lie in [1, min(dim, count)]");
  }
  if (spec.scale_a && !(*spec.scale_a > 0.0 && std::isfinite(*spec.scale_a))) {
    invalid("scale_a must be positive and finite");
  }
  if (spec.scale_b && !(*spec.scale_b > 0.0 && std::isfinite(*spec.scale_b))) {
    invalid("scale_b must be positive and finite");
  }
  switch (spec.kind) {
    case SystemKind::RandomTight:
      if (spec.count < spec.dim) invalid("random-tight requires count >= dim");
      break;
    case SystemKind::Harmonic:
      if (spec.count < spec.dim) invalid("harmonic requires count >= dim");
      break;
    case SystemKind::Mercedes:
      if (spec.dim != 2 || spec.count != 3) invalid("mercedes is the fixed 2x3 system");
      break;
    case SystemKind::RieszBasis:
      if (spec.count != spec.dim) invalid("riesz-basis requires count = dim");
      if (spec.scale_a && spec.scale_b && *spec.scale_b < *spec.scale_a) {
        invalid("riesz-basis requires scale_a <= scale_b");
      }
      break;
    default:
      break;
  }
}

}  // namespace

const char* to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::Random: return "random";
    case SystemKind::RandomTight: return "random-tight";
    case SystemKind::Harmonic: return "harmonic";
    case SystemKind::Mercedes: return "mercedes";
    case SystemKind::RankDeficient: return "rank-deficient";
    case SystemKind::RieszBasis: return "riesz-basis";
    case SystemKind::WithZeros: return "with-zeros";
  }
  return "unknown";
}

std::optional<SystemKind> kind_from_string(std::string_view name) {
  if (name == "random") return SystemKind::Random;
  if (name == "random-tight") return SystemKind::RandomTight;
  if (name == "harmonic") return SystemKind::Harmonic;
  if (name == "mercedes") return SystemKind::Mercedes;
  if (name == "rank-deficient") return SystemKind::RankDeficient;
  if (name == "riesz-basis") return SystemKind::RieszBasis;
  if (name == "with-zeros") return SystemKind::WithZeros;
  return std::nullopt;
}

VectorSystem generate(const GenSpec& spec) {
  validate_spec(spec);
  GaussianSource src(spec.seed);
  const Index d = spec.dim;
  const Index n = spec.count;

  switch (spec.kind) {
    case SystemKind::Random:
      return VectorSystem(gaussian_matrix(d, n, src));

    case SystemKind::RandomTight: {
      const double a = spec.scale_a.value_or(1.0);
      // Orthonormal rows from the QR of the transposed draw, scaled so that
      // the frame operator is exactly a * identity.
      const CMatrix g = gaussian_matrix(d, n, src);
      Eigen::HouseholderQR<CMatrix> qr(g.adjoint());
      const CMatrix q = qr.householderQ() * CMatrix::Identity(n, d);
      return VectorSystem(std::sqrt(a) * q.adjoint());
    }

    case SystemKind::Harmonic: {
      CMatrix m(d, n);
      for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < n; ++j) {
          const Index ij = (i * j) % n;
          m(i, j) = std::polar(1.0, -kTwoPi * static_cast<double>(ij) /
                                        static_cast<double>(n));
        }
      }
      return VectorSystem(std::move(m));
    }

    case SystemKind::Mercedes:
      return VectorSystem(mercedes_matrix());

    case SystemKind::RankDeficient: {
      const Index r = spec.rank.value_or(std::max<Index>(1, std::min(d, n) / 2));
      const CMatrix left = gaussian_matrix(d, r, src);
      const CMatrix right = gaussian_matrix(r, n, src);
      return VectorSystem(left * right);
    }

    case SystemKind::RieszBasis: {
      const double a = spec.scale_a.value_or(1.0);
      const double b = spec.scale_b.value_or(4.0);
      const CMatrix u = random_unitary(d, src);
      RealVector diag(d);
      for (Index k = 0; k < d; ++k) {
        const double t = d > 1 ? static_cast<double>(k) / static_cast<double>(d - 1) : 0.0;
        diag(k) = std::sqrt(a) + t * (std::sqrt(b) - std::sqrt(a));
      }
      return VectorSystem(u * diag.asDiagonal());
    }

    case SystemKind::WithZeros: {
      CMatrix m = gaussian_matrix(d, n, src);
      const Index zeroed = std::max<Index>(1, n / 4);
      m.rightCols(zeroed).setZero();
      return VectorSystem(std::move(m));
    }
  }
  invalid("unknown kind");
}

}  // namespace finframe
