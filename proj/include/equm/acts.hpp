#pragma once

#include <map>
#include <string>
#include <vector>

#include "equm/lottery.hpp"
#include "equm/prefcore.hpp"

namespace equm {

using StateId = std::string;

class StateSpace {
 public:
  /// Throws SchemaError on an empty list or duplicate ids.
  explicit StateSpace(std::vector<StateId> states);

  const std::vector<StateId>& states() const noexcept { return states_; }
  bool contains(const StateId& s) const;
  std::size_t size() const noexcept { return states_.size(); }

 private:
  std::vector<StateId> states_;
};

/// Total map from states to lotteries.
class Act {
 public:
  using Map = std::map<StateId, Lottery>;

  explicit Act(Map lotteries) : lotteries_(std::move(lotteries)) {}

  const Map& lotteries() const noexcept { return lotteries_; }
  /// Throws UnknownState.
  const Lottery& at(const StateId& s) const;
  /// Copy with state s mapped to p.
  Act with(const StateId& s, const Lottery& p) const;

  friend bool operator==(const Act&, const Act&) = default;

 private:
  Map lotteries_;
};

using Belief = std::map<StateId, NSReal>;

struct AAModel {
  StateSpace states;
  Belief belief;
  UtilityAssignment utility;
  Regime regime = Regime::Standard;
};

/// Beliefs cover the states, are nonnegative and sum to 1; `require_standard`
/// also demands standard beliefs.
void validate_model(const AAModel& m, bool require_standard);
/// Acts must be total on the state space.
void validate_act(const Act& a, const AAModel& m);

Act constant_act(const Lottery& p, const StateSpace& s);

/// sum over states of belief(s) * expected_utility(a(s)).
NSReal act_utility(const Act& a, const AAModel& m);

PrefOrdering act_prefers(const Act& a, const Act& b, const AAModel& m);

/*
 * Definitional null check over the generators plus the constant acts at the
 * best and worst outcomes: every act compared with its copy that takes another
 * act's lottery at t must be indifferent. Throws UnknownState.
 */
bool is_null_definitional(const StateId& t, const AAModel& m, const std::vector<Act>& generators);

/// belief(t) == 0, or mixing the best outcome into t at weight belief(t) over
/// the worst outcome is indifferent to the worst outcome.
bool is_null_analytic(const StateId& t, const AAModel& m);

/// Both checks; InvariantViolation if they disagree.
bool is_null(const StateId& t, const AAModel& m, const std::vector<Act>& generators);

}  // namespace equm
