#include "qgl/haar.hpp"

#include "qgl/hopf.hpp"

#include <stdexcept>

namespace qgl {

namespace {

bool isChainMonomial(const Monomial& m) { return m.a == 0 && m.u == 0 && m.g == m.gs; }

// Split a coefficient into its zeta-power components.
std::map<int, LaurentCoefficient> splitZeta(const LaurentCoefficient& c) {
  std::map<int, LaurentCoefficient> out;
  for (const auto& [k, v] : c.terms()) out[k.second].addTerm(k.first, 0, v);
  return out;
}

using Row = std::vector<RationalValue>;  // unknowns h_0..h_J plus augmented column

// Invariance equations contributed by one chain monomial b_j. The unknown-j slot of
// the defining equation (h (x) id)Delta(b_j) = h(b_j) 1 is folded into the row.
void appendInvarianceRows(int j, int maxJ, std::vector<Row>& rows) {
  Monomial b{AlgebraTag::SUq2, 0, j, j, 0};
  TensorElement t = coproduct(monomialElement(b));
  Monomial unit{AlgebraTag::SUq2, 0, 0, 0, 0};
  for (int side = 0; side < 2; ++side) {
    // side 0: group by second leg (left invariance); side 1: group by first leg.
    std::map<Monomial, Row> grouped;
    for (const auto& [k, c] : t.terms()) {
      const Monomial& known = side == 0 ? k.second : k.first;
      const Monomial& stateArg = side == 0 ? k.first : k.second;
      if (!isChainMonomial(stateArg)) continue;  // h vanishes off the chain
      auto [it, inserted] = grouped.try_emplace(known, Row(maxJ + 2, RationalValue::zero()));
      it->second[static_cast<std::size_t>(stateArg.g)] =
          it->second[static_cast<std::size_t>(stateArg.g)] + RationalValue::fromLaurent(c);
    }
    for (auto& [known, row] : grouped) {
      if (known == unit) row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j)] -
                                                            RationalValue::one();
      bool allZero = true;
      for (const auto& v : row)
        if (!v.isZero()) allZero = false;
      if (!allZero) rows.push_back(row);
    }
  }
}

}  // namespace

std::vector<RationalValue> haarChainValues(int maxPairs) {
  if (maxPairs < 0) throw std::invalid_argument("haarChainValues: negative degree");
  const int n = maxPairs + 1;
  std::vector<Row> rows;
  {
    Row normalization(n + 1, RationalValue::zero());
    normalization[0] = RationalValue::one();
    normalization[static_cast<std::size_t>(n)] = RationalValue::one();  // h_0 = 1
    rows.push_back(std::move(normalization));
  }
  for (int j = 1; j <= maxPairs; ++j) appendInvarianceRows(j, maxPairs, rows);

  // Gaussian elimination on the (overdetermined, consistent) system.
  std::size_t pivotRow = 0;
  for (int col = 0; col < n && pivotRow < rows.size(); ++col) {
    std::size_t sel = pivotRow;
    while (sel < rows.size() && rows[sel][static_cast<std::size_t>(col)].isZero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivotRow], rows[sel]);
    RationalValue inv = RationalValue::one() / rows[pivotRow][static_cast<std::size_t>(col)];
    for (auto& v : rows[pivotRow]) v = v * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivotRow) continue;
      RationalValue f = rows[r][static_cast<std::size_t>(col)];
      if (f.isZero()) continue;
      for (int c2 = 0; c2 <= n; ++c2)
        rows[r][static_cast<std::size_t>(c2)] =
            rows[r][static_cast<std::size_t>(c2)] - f * rows[pivotRow][static_cast<std::size_t>(c2)];
    }
    ++pivotRow;
  }
  if (pivotRow != static_cast<std::size_t>(n))
    throw std::runtime_error("haarChainValues: invariance system is rank-deficient");
  for (std::size_t r = pivotRow; r < rows.size(); ++r)
    if (!rows[r][static_cast<std::size_t>(n)].isZero())
      throw std::runtime_error("haarChainValues: inconsistent invariance system");

  std::vector<RationalValue> h(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    // Locate the row with pivot in column j (rows are in pivot order).
    h[static_cast<std::size_t>(j)] = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)];
  }
  return h;
}

RationalValue haarState(const Element& x) {
  if (x.tag() != AlgebraTag::SUq2 && x.tag() != AlgebraTag::GqTheta)
    throw AlgebraError("haarState: SUq2 or GqTheta elements only");
  int maxPairs = 0;
  for (const auto& [m, c] : x.terms())
    if (isChainMonomial(m)) maxPairs = std::max(maxPairs, m.g);
  std::vector<RationalValue> h = haarChainValues(maxPairs);
  RationalValue r = RationalValue::zero();
  for (const auto& [m, c] : x.terms()) {
    if (!isChainMonomial(m)) continue;
    r = r + RationalValue::fromLaurent(c) * h[static_cast<std::size_t>(m.g)];
  }
  return r;
}

std::vector<std::pair<int, RationalValue>> conditionalExpectation(const Element& x) {
  if (x.tag() != AlgebraTag::GqTheta)
    throw AlgebraError("conditionalExpectation: GqTheta elements only");
  std::map<int, Element> parts;
  for (const auto& [m, c] : x.terms()) {
    Monomial stripped = m;
    stripped.u = 0;
    auto [it, inserted] = parts.try_emplace(m.u, Element(AlgebraTag::GqTheta));
    it->second.add(stripped, c);
  }
  std::vector<std::pair<int, RationalValue>> out;
  for (const auto& [l, a] : parts) {
    RationalValue v = haarState(a);
    if (!v.isZero()) out.emplace_back(l, v);
  }
  return out;
}

namespace {

std::map<Monomial, ZetaRationalValue> invarianceDefect(const Element& x, bool stateOnFirstLeg) {
  std::vector<RationalValue> h;
  {
    int maxPairs = 0;
    TensorElement t = coproduct(x);
    for (const auto& [k, c] : t.terms()) {
      const Monomial& arg = stateOnFirstLeg ? k.first : k.second;
      if (isChainMonomial(arg)) maxPairs = std::max(maxPairs, arg.g);
    }
    for (const auto& [m, c] : x.terms())
      if (isChainMonomial(m)) maxPairs = std::max(maxPairs, m.g);
    h = haarChainValues(maxPairs);
  }
  std::map<Monomial, ZetaRationalValue> out;
  auto addTo = [&out](const Monomial& m, int zetaExp, const RationalValue& v) {
    if (v.isZero()) return;
    auto& slot = out[m][zetaExp];
    slot = slot + v;
    if (slot.isZero()) {
      out[m].erase(zetaExp);
      if (out[m].empty()) out.erase(m);
    }
  };
  TensorElement t = coproduct(x);
  for (const auto& [k, c] : t.terms()) {
    const Monomial& arg = stateOnFirstLeg ? k.first : k.second;
    const Monomial& rest = stateOnFirstLeg ? k.second : k.first;
    if (!isChainMonomial(arg)) continue;
    for (const auto& [zExp, comp] : splitZeta(c))
      addTo(rest, zExp, RationalValue::fromLaurent(comp) * h[static_cast<std::size_t>(arg.g)]);
  }
  // Subtract h(x) * 1.
  Monomial unit{x.tag(), 0, 0, 0, 0};
  addTo(unit, 0, -haarState(x));
  return out;
}

}  // namespace

std::map<Monomial, ZetaRationalValue> haarLeftInvarianceDefect(const Element& x) {
  return invarianceDefect(x, true);
}

std::map<Monomial, ZetaRationalValue> haarRightInvarianceDefect(const Element& x) {
  return invarianceDefect(x, false);
}

}  // namespace qgl
