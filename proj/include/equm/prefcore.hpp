#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equm/interval_set.hpp"
#include "equm/lottery.hpp"
#include "equm/nsreal.hpp"

namespace equm {

enum class PrefOrdering { Worse = -1, Indifferent = 0, Better = 1 };

PrefOrdering reverse(PrefOrdering ordering) noexcept;
std::string_view to_string(PrefOrdering ordering) noexcept;
PrefOrdering to_preference(QOrdering ordering) noexcept;
QOrdering to_qordering(PrefOrdering ordering) noexcept;

/*
 * Compares two utility values the way the regime's representation does:
 *   Standard                - exact comparison (values are standard),
 *   NonstandardUtility      - the qualitative order qcompare,
 *   General                 - qcompare as well,
 *   NonstandardProbability  - comparison of standard parts.
 */
PrefOrdering compare_values(const NSReal& a, const NSReal& b, Regime regime);

/// lambda * p + (1 - lambda) * q. Throws InvalidWeight unless 0 < lambda < 1,
/// and unless lambda is standard in regimes with standard probabilities.
Lottery mix(const NSReal& lambda, const Lottery& p, const Lottery& q,
            Regime regime = Regime::NonstandardProbability);
void validate_weight(const NSReal& lambda, Regime regime);

/// Throws MissingUtility naming the first outcome without a utility.
NSReal expected_utility(const Lottery& p, const UtilityAssignment& u);

/// Standard part of the expected utility.
Rational case1_functional(const Lottery& p, const UtilityAssignment& u);

PrefOrdering prefers(const Lottery& p, const Lottery& q, const UtilityAssignment& u,
                     Regime regime);

/*
 * Overriding on utility values: a overrides b iff a is preferred to b and no
 * lottery below b can be told apart from b inside a mixture with a. With
 * nonnegative utilities this holds iff b == 0, or (qualitative regime) the
 * leading exponent of b exceeds that of a.
 * Throws PreconditionViolated on negative values.
 */
bool overrides_value(const NSReal& a, const NSReal& b, Regime regime = Regime::NonstandardUtility);
bool overrides(const Lottery& p, const Lottery& q, const UtilityAssignment& u,
               Regime regime = Regime::NonstandardUtility);

/// Generators closed under mix with weights k/D, `depth` times; deduplicated.
std::vector<Lottery> mixture_closure(const std::vector<Lottery>& generators, int grid_denominator,
                                     int depth);

struct NegligibilityOptions {
  int grid_denominator = 8;
  int closure_depth = 1;
};

/// lambda p + (1 - lambda) q ~ q for every ordered pair of the closure.
bool is_negligible_definitional(const NSReal& lambda, const UtilityAssignment& u,
                                const std::vector<Lottery>& generators,
                                const NegligibilityOptions& options = {});

/*
 * Definitional check. When two generators have different standard expected
 * utilities the result must coincide with is_infinitesimal(lambda); a mismatch
 * raises InvariantViolation.
 */
bool is_negligible(const NSReal& lambda, const UtilityAssignment& u,
                   const std::vector<Lottery>& generators, const NegligibilityOptions& options = {});

struct PropertyPReport {
  bool holds = false;
  std::optional<Rational> threshold;  // the indifference weight, when unique
  RationalIntervalSet indifferent;    // weights mu with mu l + (1 - mu) d ~ p
  RationalIntervalSet better;         // ... preferred to p
  RationalIntervalSet worse;          // ... p preferred to it
  bool unique = false;
  bool monotone = false;
  std::string failure;  // empty when holds
};

/// Throws PreconditionViolated unless l is preferred to p and p to d.
PropertyPReport check_property_P(const Lottery& p, const Lottery& l, const Lottery& d,
                                 const UtilityAssignment& u, Regime regime);

}  // namespace equm
