#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equm/nsreal.hpp"

namespace equm {

struct RationalInterval {
  Rational lo;
  Rational hi;
  bool lo_closed = false;
  bool hi_closed = false;

  bool is_point() const { return lo == hi; }
  bool contains(const Rational& x) const;
  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

/// Finite union of disjoint, sorted intervals inside (0, 1).
class RationalIntervalSet {
 public:
  RationalIntervalSet() = default;

  static RationalIntervalSet open_unit();
  static RationalIntervalSet point(const Rational& x);

  /// Appends an interval lying strictly to the right of every stored one,
  /// merging when the two touch without a gap.
  void append(RationalInterval interval);

  const std::vector<RationalInterval>& intervals() const noexcept { return intervals_; }
  bool empty() const noexcept { return intervals_.empty(); }
  bool contains(const Rational& x) const;
  bool is_single_point() const { return intervals_.size() == 1 && intervals_.front().is_point(); }
  bool is_open_unit() const;
  /// Some member: the smallest point, or the midpoint of the first interval.
  std::optional<Rational> witness() const;
  /// Complement within (0, 1).
  RationalIntervalSet complement() const;

  /// "{}", "{1/2}", "(0, 1/2]", pieces joined by " U ".
  std::string render() const;

  friend bool operator==(const RationalIntervalSet&, const RationalIntervalSet&) = default;

 private:
  std::vector<RationalInterval> intervals_;
};

}  // namespace equm
