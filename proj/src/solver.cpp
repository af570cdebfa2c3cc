#include "equm/solver.hpp"

#include <algorithm>
#include <vector>

namespace equm {
namespace {

void collect_roots(const AffineValue& v, std::vector<Rational>& roots) {
  std::vector<int> exponents;
  for (const auto& t : v.offset.terms()) exponents.push_back(t.exponent);
  for (const auto& t : v.slope.terms()) exponents.push_back(t.exponent);
  for (int e : exponents) {
    const Rational a = v.slope.coefficient(e);
    if (a == 0) continue;
    Rational root = -v.offset.coefficient(e) / a;
    if (root > 0 && root < 1) roots.push_back(std::move(root));
  }
}

// Both sides standard affine functions: one possible root, no NSReal work.
RationalIntervalSet solve_standard(const Rational& offset, const Rational& slope, PrefOrdering relation) {
  auto sign_at = [&](const Rational& alpha) { return sgn(Rational(offset + slope * alpha)); };
  auto wanted = [&](int s) { return s == static_cast<int>(relation); };
  RationalIntervalSet out;
  if (slope == 0) {
    if (wanted(sgn(offset))) out = RationalIntervalSet::open_unit();
    return out;
  }
  const Rational root = -offset / slope;
  if (root <= 0 || root >= 1) {
    if (wanted(sign_at(Rational(1, 2)))) out = RationalIntervalSet::open_unit();
    return out;
  }
  if (wanted(sign_at(Rational(root / 2)))) out.append({0, root, false, false});
  if (wanted(0)) out.append({root, root, true, true});
  if (wanted(sign_at(Rational((root + 1) / 2)))) out.append({root, 1, false, false});
  return out;
}

bool all_standard(const AffineValue& a, const AffineValue& b) {
  return a.offset.is_standard() && a.slope.is_standard() && b.offset.is_standard() && b.slope.is_standard();
}

}  // namespace

RationalIntervalSet solve_relation(const AffineValue& lhs, const AffineValue& rhs,
                                   PrefOrdering relation, Regime regime) {
  // Comparing standard parts commutes with standard mixing, so those regimes
  // reduce to the standard case.
  if (regime == Regime::NonstandardProbability || (regime == Regime::Standard && all_standard(lhs, rhs))) {
    return solve_standard(standard_part(lhs.offset) - standard_part(rhs.offset),
                          standard_part(lhs.slope) - standard_part(rhs.slope), relation);
  }
  const AffineValue diff{lhs.offset - rhs.offset, lhs.slope - rhs.slope};
  std::vector<Rational> roots;
  collect_roots(lhs, roots);
  collect_roots(rhs, roots);
  collect_roots(diff, roots);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

  auto holds_at = [&](const Rational& alpha) {
    return compare_values(lhs.at(alpha), rhs.at(alpha), regime) == relation;
  };

  RationalIntervalSet out;
  Rational left = 0;
  for (std::size_t k = 0; k <= roots.size(); ++k) {
    const Rational right = k < roots.size() ? roots[k] : Rational(1);
    if (holds_at(Rational((left + right) / 2))) out.append({left, right, false, false});
    if (k < roots.size() && holds_at(right)) out.append({right, right, true, true});
    left = right;
  }
  return out;
}

RationalIntervalSet solve_mixture_relation(const NSReal& u_p, const NSReal& u_r, const NSReal& u_q,
                                           QOrdering rel, Regime regime) {
  return solve_relation(AffineValue::mixture(u_p, u_r), AffineValue::constant(u_q),
                        to_preference(rel), regime);
}

}  // namespace equm
