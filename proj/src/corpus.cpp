#include "qgl/corpus.hpp"

#include <stdexcept>

namespace qgl {

int DeterministicRng::uniformInt(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("uniformInt: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return lo + static_cast<int>(v % span);
}

namespace {

LaurentCoefficient poolCoefficient(DeterministicRng& rng) {
  switch (rng.uniformInt(0, 5)) {
    case 0:
      return LaurentCoefficient::one();
    case 1:
      return LaurentCoefficient::scalar(GaussianRational(-1));
    case 2:
      return LaurentCoefficient::scalar(GaussianRational::i());
    case 3:
      return LaurentCoefficient::scalar(-GaussianRational::i());
    case 4:
      return LaurentCoefficient::scalar(GaussianRational(BigRational(1, 2)));
    default:
      return LaurentCoefficient::scalar(GaussianRational(BigRational(-1, 2)));
  }
}

Monomial randomMonomial(AlgebraTag tag, DeterministicRng& rng, int maxDegree) {
  Monomial m{tag, 0, 0, 0, 0};
  int budget = rng.uniformInt(0, maxDegree);
  switch (tag) {
    case AlgebraTag::SUq2:
    case AlgebraTag::GqTheta: {
      // Split the degree budget across the four exponent slots.
      int da = rng.uniformInt(0, budget);
      int dg = rng.uniformInt(0, budget - da);
      int dgs = rng.uniformInt(0, budget - da - dg);
      int du = tag == AlgebraTag::GqTheta ? budget - da - dg - dgs : 0;
      m.a = rng.uniformInt(0, 1) ? da : -da;
      m.g = dg;
      m.gs = dgs;
      m.u = du == 0 ? 0 : (rng.uniformInt(0, 1) ? du : -du);
      break;
    }
    case AlgebraTag::Torus:
    case AlgebraTag::Circle: {
      int da = rng.uniformInt(0, budget);
      int du = budget - da;
      m.a = da == 0 ? 0 : (rng.uniformInt(0, 1) ? da : -da);
      m.u = du == 0 ? 0 : (rng.uniformInt(0, 1) ? du : -du);
      break;
    }
  }
  return m;
}

}  // namespace

Element randomElement(AlgebraTag tag, DeterministicRng& rng, int maxDegree, int terms) {
  Element e(tag);
  for (int t = 0; t < terms; ++t)
    e.add(randomMonomial(tag, rng, maxDegree), poolCoefficient(rng));
  return e;
}

std::vector<std::pair<std::string, Element>> randomSuite(AlgebraTag tag, std::uint64_t seed,
                                                         int count, int maxDegree, int terms,
                                                         bool includePinned) {
  std::vector<std::pair<std::string, Element>> suite;
  if (includePinned) {
    suite.emplace_back("unit", unitElement(tag));
    Gen g = tag == AlgebraTag::Torus ? Gen::V : (tag == AlgebraTag::Circle ? Gen::Z : Gen::A);
    suite.emplace_back("generator", generatorElement(tag, g));
  }
  DeterministicRng rng(seed);
  for (int i = 0; i < count; ++i) {
    Element e = randomElement(tag, rng, maxDegree, terms);
    suite.emplace_back("random" + std::to_string(i), e);
  }
  return suite;
}

std::vector<Monomial> monomialsUpToDegree(AlgebraTag tag, int maxDegree) {
  std::vector<Monomial> out;
  const bool hasGamma = tag == AlgebraTag::SUq2 || tag == AlgebraTag::GqTheta;
  const bool hasU = tag != AlgebraTag::SUq2;
  for (int a = -maxDegree; a <= maxDegree; ++a) {
    int ra = maxDegree - std::abs(a);
    for (int g = 0; g <= (hasGamma ? ra : 0); ++g) {
      for (int gs = 0; gs <= (hasGamma ? ra - g : 0); ++gs) {
        int ru = ra - g - gs;
        if (!hasU) {
          out.push_back(Monomial{tag, a, g, gs, 0});
          continue;
        }
        for (int u = -ru; u <= ru; ++u) out.push_back(Monomial{tag, a, g, gs, u});
      }
    }
  }
  return out;
}

}  // namespace qgl
