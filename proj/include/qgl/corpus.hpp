#pragma once

#include "qgl/algebra.hpp"

#include <cstdint>
#include <vector>

namespace qgl {

/// Deterministic random stream with an explicitly specified integer draw, so
/// corpora are identical across platforms and standard library versions.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform on [lo, hi] by rejection, bias-free.
  int uniformInt(int lo, int hi);

 private:
  std::uint64_t state_;
};

/// Random normal-form element: `terms` monomials of total degree <= maxDegree
/// with coefficients from a small exact pool {1, -1, i, -i, 1/2, -1/2}.
Element randomElement(AlgebraTag tag, DeterministicRng& rng, int maxDegree, int terms);

/// Labeled suite of random elements, plus a few fixed pinned elements in front
/// when includePinned is set (unit, a generator, a short sum).
std::vector<std::pair<std::string, Element>> randomSuite(AlgebraTag tag, std::uint64_t seed,
                                                         int count, int maxDegree, int terms,
                                                         bool includePinned = false);

/// All normal-form monomials of total degree <= maxDegree (bounded exponents).
std::vector<Monomial> monomialsUpToDegree(AlgebraTag tag, int maxDegree);

}  // namespace qgl
