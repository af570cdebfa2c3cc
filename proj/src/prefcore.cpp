#include "equm/prefcore.hpp"

#include <set>

#include "equm/error.hpp"
#include "equm/solver.hpp"

namespace equm {

PrefOrdering reverse(PrefOrdering ordering) noexcept {
  return static_cast<PrefOrdering>(-static_cast<int>(ordering));
}

std::string_view to_string(PrefOrdering ordering) noexcept {
  switch (ordering) {
    case PrefOrdering::Worse: return "Worse";
    case PrefOrdering::Indifferent: return "Indifferent";
    case PrefOrdering::Better: return "Better";
  }
  return "?";
}

PrefOrdering to_preference(QOrdering ordering) noexcept {
  return static_cast<PrefOrdering>(static_cast<int>(ordering));
}

QOrdering to_qordering(PrefOrdering ordering) noexcept {
  return static_cast<QOrdering>(static_cast<int>(ordering));
}

namespace {

PrefOrdering from_sign(int s) {
  return s > 0 ? PrefOrdering::Better : (s < 0 ? PrefOrdering::Worse : PrefOrdering::Indifferent);
}

}  // namespace

PrefOrdering compare_values(const NSReal& a, const NSReal& b, Regime regime) {
  switch (regime) {
    case Regime::NonstandardUtility:
    case Regime::General: return to_preference(qcompare(a, b));
    case Regime::NonstandardProbability: return from_sign(cmp(standard_part(a), standard_part(b)));
    case Regime::Standard: break;
  }
  return from_sign(sign(a - b));
}

void validate_weight(const NSReal& lambda, Regime regime) {
  if (sign(lambda) <= 0 || sign(NSReal(1) - lambda) <= 0)
    throw Error(ErrorCode::InvalidWeight, "mixture weight outside (0, 1)");
  if (!nonstandard_probabilities(regime) && !lambda.is_standard())
    throw Error(ErrorCode::InvalidWeight, "nonstandard mixture weight in regime " +
                                              std::string(to_string(regime)));
}

Lottery mix_unchecked(const NSReal& lambda, const Lottery& p, const Lottery& q) {
  const NSReal rest = NSReal(1) - lambda;
  Lottery out;
  for (const auto& [outcome, prob] : p.probabilities_) out.probabilities_[outcome] += lambda * prob;
  for (const auto& [outcome, prob] : q.probabilities_) out.probabilities_[outcome] += rest * prob;
  return out;
}

Lottery mix(const NSReal& lambda, const Lottery& p, const Lottery& q, Regime regime) {
  validate_weight(lambda, regime);
  return mix_unchecked(lambda, p, q);
}

NSReal expected_utility(const Lottery& p, const UtilityAssignment& u) {
  NSReal total;
  for (const auto& [outcome, prob] : p.probabilities()) total += prob * u.at(outcome);
  return total;
}

Rational case1_functional(const Lottery& p, const UtilityAssignment& u) {
  return standard_part(expected_utility(p, u));
}

PrefOrdering prefers(const Lottery& p, const Lottery& q, const UtilityAssignment& u,
                     Regime regime) {
  return compare_values(expected_utility(p, u), expected_utility(q, u), regime);
}

bool overrides_value(const NSReal& a, const NSReal& b, Regime regime) {
  if (sign(a) < 0 || sign(b) < 0)
    throw Error(ErrorCode::PreconditionViolated, "overriding needs nonnegative utilities");
  if (compare_values(a, b, regime) != PrefOrdering::Better) return false;
  // Nothing lies strictly below a zero utility.
  switch (regime) {
    case Regime::NonstandardUtility:
    case Regime::General:
      return b.is_zero() || b.leading_exponent() > a.leading_exponent();
    case Regime::NonstandardProbability: return standard_part(b) == 0;
    case Regime::Standard: break;
  }
  return b.is_zero();
}

bool overrides(const Lottery& p, const Lottery& q, const UtilityAssignment& u, Regime regime) {
  return overrides_value(expected_utility(p, u), expected_utility(q, u), regime);
}

std::vector<Lottery> mixture_closure(const std::vector<Lottery>& generators, int grid_denominator,
                                     int depth) {
  if (grid_denominator < 2) throw Error(ErrorCode::PreconditionViolated, "grid denominator < 2");
  if (depth < 0) throw Error(ErrorCode::PreconditionViolated, "negative closure depth");
  std::vector<Lottery> current;
  std::set<Lottery> seen;
  for (const auto& g : generators)
    if (seen.insert(g).second) current.push_back(g);

  for (int step = 0; step < depth; ++step) {
    std::vector<Lottery> next = current;
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        for (int k = 1; k < grid_denominator; ++k) {
          Lottery m = mix_unchecked(NSReal(make_rational(k, grid_denominator)), current[i], current[j]);
          if (seen.insert(m).second) next.push_back(std::move(m));
        }
      }
    }
    if (next.size() == current.size()) break;
    current = std::move(next);
  }
  return current;
}

bool is_negligible_definitional(const NSReal& lambda, const UtilityAssignment& u,
                                const std::vector<Lottery>& generators,
                                const NegligibilityOptions& options) {
  validate_weight(lambda, Regime::NonstandardProbability);
  const auto closure = mixture_closure(generators, options.grid_denominator, options.closure_depth);
  for (const auto& p : closure)
    for (const auto& q : closure)
      if (prefers(mix_unchecked(lambda, p, q), q, u, Regime::NonstandardProbability) !=
          PrefOrdering::Indifferent)
        return false;
  return true;
}

bool is_negligible(const NSReal& lambda, const UtilityAssignment& u,
                   const std::vector<Lottery>& generators, const NegligibilityOptions& options) {
  const bool definitional = is_negligible_definitional(lambda, u, generators, options);
  std::set<Rational> standard_values;
  for (const auto& g : generators) standard_values.insert(case1_functional(g, u));
  if (standard_values.size() > 1 && definitional != is_infinitesimal(lambda))
    throw Error(ErrorCode::InvariantViolation,
                "negligibility disagrees with infinitesimality on a separating set");
  return definitional;
}

PropertyPReport check_property_P(const Lottery& p, const Lottery& l, const Lottery& d,
                                 const UtilityAssignment& u, Regime regime) {
  const NSReal up = expected_utility(p, u);
  const NSReal ul = expected_utility(l, u);
  const NSReal ud = expected_utility(d, u);
  if (compare_values(ul, up, regime) != PrefOrdering::Better ||
      compare_values(up, ud, regime) != PrefOrdering::Better)
    throw Error(ErrorCode::PreconditionViolated, "property P needs l > p > d");

  PropertyPReport report;
  report.indifferent = solve_mixture_relation(ul, ud, up, QOrdering::Equivalent, regime);
  report.better = solve_mixture_relation(ul, ud, up, QOrdering::Greater, regime);
  report.worse = solve_mixture_relation(ul, ud, up, QOrdering::Less, regime);
  report.unique = report.indifferent.is_single_point();
  if (report.unique) {
    const Rational t = report.indifferent.intervals().front().lo;
    report.threshold = t;
    RationalIntervalSet above, below;
    above.append({t, 1, false, false});
    below.append({0, t, false, false});
    report.monotone = report.better == above && report.worse == below;
  }
  report.holds = report.unique && report.monotone;
  if (report.indifferent.empty()) {
    report.failure = "no weight makes the mixture indifferent to p";
  } else if (!report.unique) {
    report.failure = "indifference weights are not unique: " + report.indifferent.render();
  } else if (!report.monotone) {
    report.failure = "preference is not monotone around the threshold";
  }
  return report;
}

}  // namespace equm
