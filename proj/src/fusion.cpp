#include "qgl/fusion.hpp"

#include <algorithm>

namespace qgl {

void FusionRing::validate(const FusionLabel& a) const {
  switch (kind) {
    case FusionKind::su2spin:
      if (a.s < 0 || a.z != 0) throw FusionError("su2spin label must be a nonneg twice-spin");
      break;
    case FusionKind::integers:
      if (a.s != 0) throw FusionError("integers label must be a single integer");
      break;
    case FusionKind::cyclic:
      if (a.s != 0 || a.z < 0 || a.z >= modulus) throw FusionError("cyclic label out of range");
      break;
    case FusionKind::productSu2Int:
      if (a.s < 0) throw FusionError("product label needs a nonneg twice-spin");
      break;
  }
}

FusionLabel FusionRing::conjugate(const FusionLabel& a) const {
  validate(a);
  switch (kind) {
    case FusionKind::su2spin:
      return a;  // self-conjugate
    case FusionKind::integers:
      return {0, -a.z};
    case FusionKind::cyclic:
      return {0, a.z == 0 ? 0 : modulus - a.z};
    case FusionKind::productSu2Int:
      return {a.s, -a.z};
  }
  throw FusionError("unreachable");
}

std::vector<FusionLabel> FusionRing::tensor(const FusionLabel& a, const FusionLabel& b) const {
  validate(a);
  validate(b);
  std::vector<FusionLabel> out;
  switch (kind) {
    case FusionKind::su2spin:
    case FusionKind::productSu2Int: {
      // a (x) b = |a-b|, |a-b|+2, ..., a+b in the twice-spin component.
      int lo = std::abs(a.s - b.s), hi = a.s + b.s;
      int z = kind == FusionKind::productSu2Int ? a.z + b.z : 0;
      for (int s = lo; s <= hi; s += 2) out.push_back({s, z});
      break;
    }
    case FusionKind::integers:
      out.push_back({0, a.z + b.z});
      break;
    case FusionKind::cyclic:
      out.push_back({0, (a.z + b.z) % modulus});
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string FusionRing::labelString(const FusionLabel& a) const {
  switch (kind) {
    case FusionKind::su2spin:
      return std::to_string(a.s);
    case FusionKind::integers:
    case FusionKind::cyclic:
      return std::to_string(a.z);
    case FusionKind::productSu2Int:
      return "(" + std::to_string(a.s) + "," + std::to_string(a.z) + ")";
  }
  throw FusionError("unreachable");
}

FusionRing makeFusionRing(FusionKind kind, int parameter) {
  FusionRing r;
  r.kind = kind;
  if (kind == FusionKind::cyclic) {
    if (parameter < 1) throw FusionError("makeFusionRing: cyclic needs n >= 1");
    r.modulus = parameter;
  }
  return r;
}

LocalFinitenessResult localFinitenessCheck(const FusionRing& ring,
                                           const std::vector<FusionLabel>& generators, int cap) {
  if (generators.empty()) throw FusionError("localFinitenessCheck: empty generator set");
  if (cap < static_cast<int>(generators.size()))
    throw FusionError("localFinitenessCheck: cap below generator count");

  LocalFinitenessResult res;
  res.cap = cap;
  auto insert = [&res](const FusionLabel& l) {
    if (res.closure.insert(l).second) res.visitOrder.push_back(l);
  };
  insert(ring.unit());
  for (const auto& g : generators) {
    ring.validate(g);
    insert(g);
    insert(ring.conjugate(g));
  }
  res.growthChain.push_back(static_cast<int>(res.closure.size()));

  // Pair closure: each discovered label is tensored (both orders) with every
  // earlier one, so total work is quadratic in the closure size, not in rounds.
  for (std::size_t i = 0; i < res.visitOrder.size(); ++i) {
    FusionLabel a = res.visitOrder[i];
    for (std::size_t j = 0; j <= i; ++j) {
      FusionLabel b = res.visitOrder[j];
      for (const auto& c : ring.tensor(a, b)) {
        insert(c);
        insert(ring.conjugate(c));
      }
      for (const auto& c : ring.tensor(b, a)) {
        insert(c);
        insert(ring.conjugate(c));
      }
      if (static_cast<int>(res.closure.size()) > cap) {
        res.growthChain.push_back(static_cast<int>(res.closure.size()));
        res.finite = false;
        return res;
      }
    }
    int size = static_cast<int>(res.closure.size());
    if (size > res.growthChain.back()) res.growthChain.push_back(size);
  }
  res.finite = true;
  return res;
}

bool closureIsSound(const FusionRing& ring, const std::set<FusionLabel>& closure) {
  if (closure.find(ring.unit()) == closure.end()) return false;
  for (const auto& a : closure) {
    if (closure.find(ring.conjugate(a)) == closure.end()) return false;
    for (const auto& b : closure)
      for (const auto& c : ring.tensor(a, b))
        if (closure.find(c) == closure.end()) return false;
  }
  return true;
}

}  // namespace qgl
