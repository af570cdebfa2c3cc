#include "equm/acts.hpp"

#include <algorithm>
#include <set>

#include "equm/error.hpp"

namespace equm {

StateSpace::StateSpace(std::vector<StateId> states) : states_(std::move(states)) {
  if (states_.empty()) throw Error(ErrorCode::SchemaError, "empty state space");
  std::set<StateId> seen;
  for (const auto& s : states_)
    if (!seen.insert(s).second) throw Error(ErrorCode::SchemaError, "duplicate state " + s);
}

bool StateSpace::contains(const StateId& s) const {
  return std::find(states_.begin(), states_.end(), s) != states_.end();
}

const Lottery& Act::at(const StateId& s) const {
  auto it = lotteries_.find(s);
  if (it == lotteries_.end()) throw Error(ErrorCode::UnknownState, "act undefined at " + s);
  return it->second;
}

Act Act::with(const StateId& s, const Lottery& p) const {
  Act out = *this;
  out.lotteries_.insert_or_assign(s, p);
  return out;
}

void validate_model(const AAModel& m, bool require_standard) {
  NSReal total;
  for (const auto& [s, b] : m.belief) {
    if (!m.states.contains(s)) throw Error(ErrorCode::UnknownState, "belief on unknown state " + s);
    if (sign(b) < 0) throw Error(ErrorCode::SchemaError, "negative belief on " + s);
    if (require_standard && !b.is_standard())
      throw Error(ErrorCode::RegimeViolation, "belief on " + s + " must be standard");
    total += b;
  }
  if (total != NSReal(1)) throw Error(ErrorCode::SchemaError, "beliefs do not sum to 1");
}

void validate_act(const Act& a, const AAModel& m) {
  for (const auto& s : m.states.states()) a.at(s);
  for (const auto& [s, _] : a.lotteries())
    if (!m.states.contains(s)) throw Error(ErrorCode::UnknownState, "act defined on unknown " + s);
}

Act constant_act(const Lottery& p, const StateSpace& s) {
  Act::Map m;
  for (const auto& state : s.states()) m.emplace(state, p);
  return Act(std::move(m));
}

namespace {

NSReal belief_of(const StateId& s, const AAModel& m) {
  auto it = m.belief.find(s);
  return it == m.belief.end() ? NSReal{} : it->second;
}

const StateId& require_state(const StateId& t, const AAModel& m) {
  if (!m.states.contains(t)) throw Error(ErrorCode::UnknownState, "unknown state " + t);
  return t;
}

// Outcomes of maximal and minimal utility.
std::pair<OutcomeId, OutcomeId> extreme_outcomes(const UtilityAssignment& u) {
  const auto& map = u.utilities();
  if (map.empty()) throw Error(ErrorCode::PreconditionViolated, "empty utility assignment");
  auto [lo, hi] = std::minmax_element(map.begin(), map.end(),
                                      [](const auto& a, const auto& b) { return a.second < b.second; });
  return {hi->first, lo->first};
}

}  // namespace

NSReal act_utility(const Act& a, const AAModel& m) {
  NSReal total;
  for (const auto& s : m.states.states()) {
    NSReal b = belief_of(s, m);
    if (b.is_zero()) continue;
    total += b * expected_utility(a.at(s), m.utility);
  }
  return total;
}

PrefOrdering act_prefers(const Act& a, const Act& b, const AAModel& m) {
  return compare_values(act_utility(a, m), act_utility(b, m), m.regime);
}

bool is_null_definitional(const StateId& t, const AAModel& m, const std::vector<Act>& generators) {
  require_state(t, m);
  auto [best, worst] = extreme_outcomes(m.utility);
  std::vector<Act> acts = generators;
  acts.push_back(constant_act(Lottery::degenerate(best), m.states));
  acts.push_back(constant_act(Lottery::degenerate(worst), m.states));
  for (const auto& a : acts) {
    const NSReal ua = act_utility(a, m);
    for (const auto& b : acts) {
      if (compare_values(ua, act_utility(a.with(t, b.at(t)), m), m.regime) !=
          PrefOrdering::Indifferent)
        return false;
    }
  }
  return true;
}

bool is_null_analytic(const StateId& t, const AAModel& m) {
  require_state(t, m);
  const NSReal bt = belief_of(t, m);
  if (bt.is_zero()) return true;
  auto [best, worst] = extreme_outcomes(m.utility);
  const NSReal& hi = m.utility.at(best);
  const NSReal& lo = m.utility.at(worst);
  return compare_values(bt * hi + (NSReal(1) - bt) * lo, lo, m.regime) == PrefOrdering::Indifferent;
}

bool is_null(const StateId& t, const AAModel& m, const std::vector<Act>& generators) {
  const bool definitional = is_null_definitional(t, m, generators);
  if (definitional != is_null_analytic(t, m))
    throw Error(ErrorCode::InvariantViolation, "null-state checks disagree at " + t);
  return definitional;
}

}  // namespace equm
