#include "equm/criteria.hpp"

#include "equm/error.hpp"

namespace equm {

OutcomeId maximin_outcome(int i) { return "x" + std::to_string(i); }

UtilityAssignment maximin_utilities(const MaximinSpec& spec) {
  if (spec.n < 2) throw Error(ErrorCode::PreconditionViolated, "maximin needs n >= 2");
  UtilityAssignment::Map u;
  for (int i = 0; i < spec.n; ++i) u.emplace(maximin_outcome(i), NSReal::monomial(-1, -(spec.n - i - 1)));
  return UtilityAssignment(std::move(u), /*is_signed=*/true);
}

UtilityAssignment maximin_literal_utilities(const MaximinSpec& spec) {
  if (spec.n < 2) throw Error(ErrorCode::PreconditionViolated, "maximin needs n >= 2");
  UtilityAssignment::Map u;
  for (int i = 0; i < spec.n; ++i) u.emplace(maximin_outcome(i), NSReal::eps(spec.n - i - 1));
  return UtilityAssignment(std::move(u));
}

PrefOrdering maximin_compare_oracle(int i, const Rational& lambda, int j, int i2, const Rational& mu,
                                    int j2) {
  if (!(0 <= i && i < j) || !(0 <= i2 && i2 < j2))
    throw Error(ErrorCode::IndexOrder, "maximin mixtures need 0 <= i < j");
  for (const Rational* w : {&lambda, &mu})
    if (*w <= 0 || *w >= 1) throw Error(ErrorCode::InvalidWeight, "weight outside (0, 1)");

  if (i != i2) return i < i2 ? PrefOrdering::Worse : PrefOrdering::Better;
  if (lambda != mu) return lambda > mu ? PrefOrdering::Worse : PrefOrdering::Better;
  return PrefOrdering::Indifferent;
}

Lottery maximin_mixture(int i, const Rational& lambda, int j) {
  return mix(NSReal(lambda), Lottery::degenerate(maximin_outcome(i)),
             Lottery::degenerate(maximin_outcome(j)), Regime::NonstandardUtility);
}

}  // namespace equm
