#include "equm/sweep.hpp"

namespace equm {

SweepResult sweep(std::size_t n, const CaseCheck& check, Execution execution) {
  return execution == Execution::Parallel ? detail::sweep_parallel(n, check)
                                          : detail::sweep_serial(n, check);
}

namespace detail {

// Reference kernel.
SweepResult sweep_serial(std::size_t n, const CaseCheck& check) {
  SweepResult result;
  result.cases = n;
  for (std::size_t i = 0; i < n; ++i) {
    const CaseOutcome outcome = check(i);
    if (outcome == CaseOutcome::NotApplicable) continue;
    ++result.applicable;
    if (outcome == CaseOutcome::Violated) {
      result.first_violation = i;
      break;
    }
  }
  return result;
}

}  // namespace detail
}  // namespace equm
