#pragma once

#include "finframe/frames.hpp"
#include "finframe/types.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace finframe {

/// Families of seeded test systems spanning all classification regimes.
enum class SystemKind {
  Random,         ///< i.i.d. standard complex Gaussian entries
  RandomTight,    ///< orthonormalized rows scaled by sqrt(scale_a); tight, A = scale_a
  Harmonic,       ///< leading rows of the count-point DFT matrix; tight, A = count
  Mercedes,       ///< the fixed 2x3 real system at angles 90, 210, 330 degrees
  RankDeficient,  ///< product of random dim x r and r x count factors
  RieszBasis,     ///< unitary times diagonal interpolating [sqrt(a), sqrt(b)]
  WithZeros,      ///< Random with the trailing quarter of the columns zeroed
};

const char* to_string(SystemKind kind);
std::optional<SystemKind> kind_from_string(std::string_view name);

/// Deterministic generator specification. Identical specs produce
/// bit-identical systems on one platform.
struct GenSpec {
  SystemKind kind = SystemKind::Random;
  Index dim = 2;
  Index count = 2;
  std::optional<Index> rank;        ///< RankDeficient target rank; default max(1, min(dim,count)/2)
  std::uint64_t seed = 0;
  std::optional<double> scale_a;    ///< tight constant / lower Riesz target; default 1
  std::optional<double> scale_b;    ///< upper Riesz target; default 4
};

/// Builds the system described by `spec`. Randomness comes from a fixed
/// algorithm (mt19937_64; Gaussians by Box-Muller on 53-bit uniforms), so the
/// output is a pure function of the spec. Throws ConfigError on invalid
/// combinations (e.g. RandomTight with count < dim).
VectorSystem generate(const GenSpec& spec);

}  // namespace finframe
