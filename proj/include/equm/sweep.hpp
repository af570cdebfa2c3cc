#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace equm {

enum class Execution { Serial, Parallel };

enum class CaseOutcome { NotApplicable, Satisfied, Violated };

struct SweepResult {
  std::size_t cases = 0;
  std::size_t applicable = 0;  // cases whose antecedent held
  std::optional<std::size_t> first_violation;
};

using CaseCheck = std::function<CaseOutcome(std::size_t)>;

/*
 * Evaluates check(0) .. check(n-1). The parallel kernel reports the same
 * first violation as the serial one: the smallest violating index. After a
 * violation is found, cases beyond it may be skipped, so `applicable` is only
 * exact when there is no violation. Exceptions from `check` are rethrown
 * (the one from the smallest index wins).
 */
SweepResult sweep(std::size_t n, const CaseCheck& check, Execution execution);

namespace detail {
SweepResult sweep_serial(std::size_t n, const CaseCheck& check);
SweepResult sweep_parallel(std::size_t n, const CaseCheck& check);
}  // namespace detail

}  // namespace equm
