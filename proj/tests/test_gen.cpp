#include <doctest.h>

#include "finframe/gen.hpp"
#include "helpers.hpp"

#include <cmath>

using namespace finframe;
using namespace fftest;

namespace {

GenSpec make(SystemKind kind, Index d, Index n, std::uint64_t seed) {
  GenSpec spec;
  spec.kind = kind;
  spec.dim = d;
  spec.count = n;
  spec.seed = seed;
  return spec;
}

}  // namespace

TEST_CASE("generate: identical specs give bit-identical systems") {
  for (const SystemKind kind :
       {SystemKind::Random, SystemKind::RandomTight, SystemKind::Harmonic,
        SystemKind::RankDeficient, SystemKind::WithZeros}) {
    const GenSpec spec = make(kind, 3, 6, 42);
    CHECK(bit_equal(generate(spec).mat(), generate(spec).mat()));
  }
  const GenSpec riesz = make(SystemKind::RieszBasis, 4, 4, 42);
  CHECK(bit_equal(generate(riesz).mat(), generate(riesz).mat()));
  // Different seeds give different draws.
  CHECK_FALSE(bit_equal(generate(make(SystemKind::Random, 3, 6, 1)).mat(),
                        generate(make(SystemKind::Random, 3, 6, 2)).mat()));
}

TEST_CASE("generate: harmonic fixtures") {
  const VectorSystem two = generate(make(SystemKind::Harmonic, 2, 2, 0));
  CMatrix expected(2, 2);
  expected << Complex(1, 0), Complex(1, 0),
              Complex(1, 0), Complex(-1, 0);
  CHECK(max_abs_diff(two.mat(), expected) < 1e-15);
  const SystemAnalysis a2 = classify(two);
  CHECK(a2.is_tight);
  CHECK(a2.frame_lower == doctest::Approx(2.0).epsilon(1e-13));

  const SystemAnalysis a3 = classify(generate(make(SystemKind::Harmonic, 2, 3, 0)));
  CHECK(a3.is_tight);
  CHECK(a3.frame_lower == doctest::Approx(3.0).epsilon(1e-13));
}

TEST_CASE("generate: mercedes fixture") {
  const VectorSystem sys = generate(make(SystemKind::Mercedes, 2, 3, 0));
  CHECK(sys.mat()(0, 0) == Complex(0.0));
  CHECK(sys.mat()(1, 0) == Complex(1.0));
  CHECK(sys.mat()(1, 1) == Complex(-0.5));
  CHECK(sys.mat()(0, 2).real() == std::sqrt(3.0) / 2.0);
  const SystemAnalysis a = classify(sys);
  CHECK(a.is_tight);
  CHECK(a.frame_lower == doctest::Approx(1.5).epsilon(1e-13));
  CHECK(a.frame_upper == doctest::Approx(1.5).epsilon(1e-13));
}

TEST_CASE("generate: every kind lands in its advertised class over a 100-seed sweep") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Index d = 1 + static_cast<Index>(seed % 8);
    const Index n = d + static_cast<Index>((3 * seed) % 9);

    {
      const SystemAnalysis a = classify(generate(make(SystemKind::Random, d, n, seed)));
      CHECK(a.rank == std::min(d, n));  // full rank almost surely
    }
    {
      GenSpec spec = make(SystemKind::RandomTight, d, n, seed);
      spec.scale_a = 1.0 + static_cast<double>(seed % 3);
      const SystemAnalysis a = classify(generate(spec));
      CHECK(a.is_tight);
      CHECK(std::abs(a.frame_upper - a.frame_lower) <= 1e-10 * *spec.scale_a);
      CHECK(std::abs(a.frame_lower - *spec.scale_a) <= 1e-10 * *spec.scale_a);
    }
    {
      const SystemAnalysis a = classify(generate(make(SystemKind::Harmonic, d, n, seed)));
      CHECK(a.is_tight);
      CHECK(std::abs(a.frame_lower - static_cast<double>(n)) <= 1e-12 * static_cast<double>(n));
    }
    if (std::min(d, n) >= 2) {
      GenSpec spec = make(SystemKind::RankDeficient, d, n, seed);
      spec.rank = std::min(d, n) / 2 + (seed % 2 == 0 ? 1 : 0);
      if (*spec.rank < 1) spec.rank = 1;
      const VectorSystem sys = generate(spec);
      CHECK(numeric_rank(sys.mat()) == *spec.rank);
    }
    {
      GenSpec spec = make(SystemKind::RieszBasis, d, d, seed);
      spec.scale_a = 0.5;
      spec.scale_b = 3.0;
      const SystemAnalysis a = classify(generate(spec));
      CHECK(a.is_riesz_basis);
      CHECK(std::abs(a.riesz_lower - 0.5) <= 1e-12 * 3.0);
      if (d > 1) CHECK(std::abs(a.riesz_upper - 3.0) <= 1e-12 * 3.0);
    }
    {
      const VectorSystem sys = generate(make(SystemKind::WithZeros, d, n, seed));
      const Index zeroed = std::max<Index>(1, n / 4);
      CHECK(sys.mat().rightCols(zeroed).cwiseAbs().maxCoeff() == 0.0);
      if (n > zeroed) {
        CHECK(sys.mat().leftCols(n - zeroed).cwiseAbs().minCoeff() > 0.0);
      }
    }
  }
}

TEST_CASE("generate: invalid specifications") {
  CHECK_THROWS_AS(generate(make(SystemKind::RandomTight, 3, 2, 0)), ConfigError);
  CHECK_THROWS_AS(generate(make(SystemKind::Harmonic, 4, 3, 0)), ConfigError);
  CHECK_THROWS_AS(generate(make(SystemKind::Mercedes, 2, 4, 0)), ConfigError);
  CHECK_THROWS_AS(generate(make(SystemKind::RieszBasis, 3, 4, 0)), ConfigError);
  CHECK_THROWS_AS(generate(make(SystemKind::Random, 0, 2, 0)), ConfigError);

  GenSpec bad_rank = make(SystemKind::RankDeficient, 3, 4, 0);
  bad_rank.rank = 5;
  CHECK_THROWS_AS(generate(bad_rank), ConfigError);

  GenSpec bad_scales = make(SystemKind::RieszBasis, 3, 3, 0);
  bad_scales.scale_a = 2.0;
  bad_scales.scale_b = 1.0;
  CHECK_THROWS_AS(generate(bad_scales), ConfigError);
}

TEST_CASE("kind names round-trip") {
  for (const SystemKind kind :
       {SystemKind::Random, SystemKind::RandomTight, SystemKind::Harmonic,
        SystemKind::Mercedes, SystemKind::RankDeficient, SystemKind::RieszBasis,
        SystemKind::WithZeros}) {
    const auto parsed = kind_from_string(to_string(kind));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == kind);
  }
  CHECK_FALSE(kind_from_string("gabor").has_value());
}
