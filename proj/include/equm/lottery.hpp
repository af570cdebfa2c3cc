#pragma once

#include <map>
#include <string>
#include <string_view>

#include "equm/nsreal.hpp"

namespace equm {

using OutcomeId = std::string;

enum class Regime {
  Standard,                // standard probabilities and utilities
  NonstandardUtility,      // standard probabilities, nonstandard utilities
  NonstandardProbability,  // nonstandard probabilities, standard utilities
  General,                 // both nonstandard, compared qualitatively
};

std::string_view to_string(Regime regime) noexcept;
constexpr bool nonstandard_utilities(Regime r) noexcept {
  return r == Regime::NonstandardUtility || r == Regime::General;
}
constexpr bool nonstandard_probabilities(Regime r) noexcept {
  return r == Regime::NonstandardProbability || r == Regime::General;
}
/// Accepts "std", "ns-util", "ns-prob", "ns-both".
Regime parse_regime(std::string_view text);

/// Finitely supported distribution over outcomes; probabilities sum exactly to 1.
class Lottery {
 public:
  using Map = std::map<OutcomeId, NSReal>;

  /// Throws InvalidLottery on a negative entry or a total other than 1.
  explicit Lottery(Map probabilities);

  static Lottery degenerate(const OutcomeId& outcome);

  const Map& probabilities() const noexcept { return probabilities_; }
  NSReal probability(const OutcomeId& outcome) const;
  /// Every probability is zero or a single exponent-0 term.
  bool is_standard() const noexcept;

  friend bool operator==(const Lottery&, const Lottery&) = default;
  friend auto operator<=>(const Lottery& a, const Lottery& b) {
    return a.probabilities_ <=> b.probabilities_;
  }

 private:
  Lottery() = default;
  friend Lottery mix_unchecked(const NSReal&, const Lottery&, const Lottery&);

  Map probabilities_;  // support only: no zero entries
};

/// Utilities of outcomes. Unsigned assignments must be nonnegative.
class UtilityAssignment {
 public:
  using Map = std::map<OutcomeId, NSReal>;

  UtilityAssignment() = default;
  /// Throws PreconditionViolated on a negative utility unless `is_signed`.
  explicit UtilityAssignment(Map utilities, bool is_signed = false);

  const Map& utilities() const noexcept { return utilities_; }
  bool is_signed() const noexcept { return signed_; }
  bool contains(const OutcomeId& outcome) const { return utilities_.contains(outcome); }
  /// Throws MissingUtility.
  const NSReal& at(const OutcomeId& outcome) const;

 private:
  Map utilities_;
  bool signed_ = false;
};

/// Checks the regime's standardness constraints on utilities and a lottery.
void validate_regime(const UtilityAssignment& u, Regime regime);
void validate_regime(const Lottery& p, Regime regime);

}  // namespace equm
