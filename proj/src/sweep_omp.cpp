#include <omp.h>

#include <atomic>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>

#include "equm/sweep.hpp"

namespace equm::detail {

SweepResult sweep_parallel(std::size_t n, const CaseCheck& check) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> first{kNone};
  std::size_t applicable = 0;
  std::exception_ptr error;
  std::size_t error_index = kNone;
  std::mutex error_mutex;

  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : applicable)
  for (std::int64_t k = 0; k < count; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (i > first.load(std::memory_order_relaxed)) continue;
    try {
      const CaseOutcome outcome = check(i);
      if (outcome == CaseOutcome::NotApplicable) continue;
      ++applicable;
      if (outcome == CaseOutcome::Violated) {
        std::size_t seen = first.load(std::memory_order_relaxed);
        while (i < seen && !first.compare_exchange_weak(seen, i, std::memory_order_relaxed)) {
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (i < error_index) {
        error_index = i;
        error = std::current_exception();
      }
    }
  }

  const std::size_t found = first.load();
  if (error && error_index < found) std::rethrow_exception(error);

  SweepResult result;
  result.cases = n;
  result.applicable = applicable;
  if (found != kNone) result.first_violation = found;
  return result;
}

}  // namespace equm::detail
