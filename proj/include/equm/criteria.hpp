#pragma once

#include <string>

#include "equm/lottery.hpp"
#include "equm/prefcore.hpp"

namespace equm {

/// Outcomes x0 .. x{n-1}, ordered worst to best.
struct MaximinSpec {
  int n = 2;
};

/// Outcome id of x_i.
OutcomeId maximin_outcome(int i);

/*
 * u(x_i) = -eps^-(n-i-1), a signed assignment. Under the qualitative order a
 * mixture's value is dominated by its worst outcome, so mixtures compare by
 * worst outcome first and then by that outcome's probability (smaller is
 * better). Throws PreconditionViolated when n < 2.
 */
UtilityAssignment maximin_utilities(const MaximinSpec& spec);

/// The assignment u(x_i) = eps^(n-i-1) read literally. Comparisons under it are
/// driven by the best outcome; kept to document that discrepancy.
UtilityAssignment maximin_literal_utilities(const MaximinSpec& spec);

/*
 * Direct rule on lambda x_i + (1-lambda) x_j versus mu x_i' + (1-mu) x_j':
 * the first is worse iff i < i', or i == i' and lambda > mu.
 * Requires i < j, i' < j' (IndexOrder) and standard weights in (0, 1)
 * (InvalidWeight).
 */
PrefOrdering maximin_compare_oracle(int i, const Rational& lambda, int j, int i2, const Rational& mu,
                                    int j2);

/// lambda x_i + (1 - lambda) x_j
Lottery maximin_mixture(int i, const Rational& lambda, int j);

}  // namespace equm
