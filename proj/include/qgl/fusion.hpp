#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgl {

enum class FusionKind { su2spin, integers, cyclic, productSu2Int };

/// Irreducible label. su2spin uses s (twice the spin, >= 0); integers and cyclic
/// use z; productSu2Int uses the pair (s, z).
struct FusionLabel {
  int s = 0;
  int z = 0;

  friend bool operator==(const FusionLabel& a, const FusionLabel& b) {
    return a.s == b.s && a.z == b.z;
  }
  friend bool operator<(const FusionLabel& a, const FusionLabel& b) {
    return a.s != b.s ? a.s < b.s : a.z < b.z;
  }
};

struct FusionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FusionRing {
  FusionKind kind = FusionKind::integers;
  int modulus = 1;  // cyclic only

  FusionLabel unit() const { return {}; }
  void validate(const FusionLabel& a) const;
  FusionLabel conjugate(const FusionLabel& a) const;
  /// Multiset of irreducible summands of a (x) b, sorted.
  std::vector<FusionLabel> tensor(const FusionLabel& a, const FusionLabel& b) const;

  std::string labelString(const FusionLabel& a) const;
};

FusionRing makeFusionRing(FusionKind kind, int parameter = 0);

struct LocalFinitenessResult {
  bool finite = false;
  std::set<FusionLabel> closure;       // the closed set when finite, else the partial set
  std::vector<int> growthChain;        // set size after each closure round
  std::vector<FusionLabel> visitOrder;  // deterministic discovery order
  int cap = 0;
};

/// Breadth-first closure of generators (plus conjugates and the unit) under
/// tensor decomposition, stopping when stable or when the set exceeds cap.
LocalFinitenessResult localFinitenessCheck(const FusionRing& ring,
                                           const std::vector<FusionLabel>& generators, int cap);

/// Post-hoc soundness of a Finite result: tensor-closed, conjugate-closed,
/// contains the unit.
bool closureIsSound(const FusionRing& ring, const std::set<FusionLabel>& closure);

}  // namespace qgl
