#include "equm/lottery.hpp"

#include "equm/error.hpp"

namespace equm {

std::string_view to_string(Regime regime) noexcept {
  switch (regime) {
    case Regime::Standard: return "std";
    case Regime::NonstandardUtility: return "ns-util";
    case Regime::NonstandardProbability: return "ns-prob";
    case Regime::General: return "ns-both";
  }
  return "?";
}

Regime parse_regime(std::string_view text) {
  if (text == "std") return Regime::Standard;
  if (text == "ns-util") return Regime::NonstandardUtility;
  if (text == "ns-prob") return Regime::NonstandardProbability;
  if (text == "ns-both") return Regime::General;
  throw Error(ErrorCode::SchemaError, "unknown regime '" + std::string(text) + "'");
}

Lottery::Lottery(Map probabilities) {
  NSReal total;
  for (auto& [outcome, prob] : probabilities) {
    if (sign(prob) < 0) throw Error(ErrorCode::InvalidLottery, "negative probability for " + outcome);
    total += prob;
    if (!prob.is_zero()) probabilities_.emplace(outcome, std::move(prob));
  }
  if (total != NSReal(1)) throw Error(ErrorCode::InvalidLottery, "probabilities do not sum to 1");
}

Lottery Lottery::degenerate(const OutcomeId& outcome) {
  Lottery p;
  p.probabilities_.emplace(outcome, NSReal(1));
  return p;
}

NSReal Lottery::probability(const OutcomeId& outcome) const {
  auto it = probabilities_.find(outcome);
  return it == probabilities_.end() ? NSReal{} : it->second;
}

bool Lottery::is_standard() const noexcept {
  for (const auto& [_, prob] : probabilities_)
    if (!prob.is_standard()) return false;
  return true;
}

UtilityAssignment::UtilityAssignment(Map utilities, bool is_signed)
    : utilities_(std::move(utilities)), signed_(is_signed) {
  if (signed_) return;
  for (const auto& [outcome, value] : utilities_)
    if (sign(value) < 0)
      throw Error(ErrorCode::PreconditionViolated,
                  "negative utility for " + outcome + " in an unsigned assignment");
}

const NSReal& UtilityAssignment::at(const OutcomeId& outcome) const {
  auto it = utilities_.find(outcome);
  if (it == utilities_.end()) throw Error(ErrorCode::MissingUtility, "no utility for " + outcome);
  return it->second;
}

void validate_regime(const UtilityAssignment& u, Regime regime) {
  if (nonstandard_utilities(regime)) return;
  for (const auto& [outcome, value] : u.utilities())
    if (!value.is_standard())
      throw Error(ErrorCode::RegimeViolation,
                  "utility of " + outcome + " must be standard in regime " +
                      std::string(to_string(regime)));
}

void validate_regime(const Lottery& p, Regime regime) {
  if (nonstandard_probabilities(regime)) return;
  for (const auto& [outcome, prob] : p.probabilities())
    if (!prob.is_standard())
      throw Error(ErrorCode::RegimeViolation,
                  "probability of " + outcome + " must be standard in regime " +
                      std::string(to_string(regime)));
}

}  // namespace equm
