#pragma once

#include "equm/interval_set.hpp"
#include "equm/lottery.hpp"
#include "equm/nsreal.hpp"
#include "equm/prefcore.hpp"

namespace equm {

/// offset + alpha * slope, for a standard weight alpha.
struct AffineValue {
  NSReal offset;
  NSReal slope;

  /// alpha * a + (1 - alpha) * b
  static AffineValue mixture(const NSReal& a, const NSReal& b) { return {b, a - b}; }
  static AffineValue constant(const NSReal& c) { return {c, NSReal{}}; }

  NSReal at(const Rational& alpha) const { return offset + slope * NSReal(alpha); }
};

/*
 * Exact set of standard alpha in (0, 1) with
 *     compare_values(lhs(alpha), rhs(alpha), regime) == relation.
 *
 * Every coefficient of lhs, rhs and lhs - rhs is affine in alpha, and the
 * comparison only depends on the signs of those coefficients. Their roots
 * split (0, 1) into cells on which the relation is constant; each cell is
 * decided by one exact sample and each root by exact evaluation.
 */
RationalIntervalSet solve_relation(const AffineValue& lhs, const AffineValue& rhs,
                                   PrefOrdering relation, Regime regime);

/// Weights alpha with alpha * u_p + (1 - alpha) * u_r  `rel`  u_q.
RationalIntervalSet solve_mixture_relation(const NSReal& u_p, const NSReal& u_r, const NSReal& u_q,
                                           QOrdering rel, Regime regime);

}  // namespace equm
