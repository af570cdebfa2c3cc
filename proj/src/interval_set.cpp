#include "equm/interval_set.hpp"

#include <sstream>

#include "equm/error.hpp"

namespace equm {

bool RationalInterval::contains(const Rational& x) const {
  const bool above = lo_closed ? x >= lo : x > lo;
  const bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

RationalIntervalSet RationalIntervalSet::open_unit() {
  RationalIntervalSet s;
  s.intervals_.push_back({0, 1, false, false});
  return s;
}

RationalIntervalSet RationalIntervalSet::point(const Rational& x) {
  RationalIntervalSet s;
  s.intervals_.push_back({x, x, true, true});
  return s;
}

void RationalIntervalSet::append(RationalInterval interval) {
  if (!intervals_.empty()) {
    auto& last = intervals_.back();
    if (interval.lo < last.hi || (interval.lo == last.hi && last.hi_closed && interval.lo_closed))
      throw Error(ErrorCode::InvariantViolation, "interval appended out of order");
    if (interval.lo == last.hi && (last.hi_closed || interval.lo_closed)) {
      last.hi = interval.hi;
      last.hi_closed = interval.hi_closed;
      return;
    }
  }
  intervals_.push_back(std::move(interval));
}

bool RationalIntervalSet::contains(const Rational& x) const {
  for (const auto& i : intervals_)
    if (i.contains(x)) return true;
  return false;
}

bool RationalIntervalSet::is_open_unit() const {
  return intervals_.size() == 1 && intervals_.front() == RationalInterval{0, 1, false, false};
}

std::optional<Rational> RationalIntervalSet::witness() const {
  if (intervals_.empty()) return std::nullopt;
  const auto& i = intervals_.front();
  if (i.is_point()) return i.lo;
  return Rational((i.lo + i.hi) / 2);
}

RationalIntervalSet RationalIntervalSet::complement() const {
  RationalIntervalSet out;
  Rational cursor = 0;
  bool cursor_closed = false;  // whether `cursor` itself belongs to the complement
  for (const auto& i : intervals_) {
    if (i.lo > cursor || (i.lo == cursor && cursor_closed && !i.lo_closed)) {
      out.append({cursor, i.lo, cursor_closed, !i.lo_closed});
    }
    cursor = i.hi;
    cursor_closed = !i.hi_closed;
  }
  if (cursor < 1) out.append({cursor, 1, cursor_closed, false});
  return out;
}

std::string RationalIntervalSet::render() const {
  if (intervals_.empty()) return "{}";
  std::ostringstream out;
  bool first = true;
  for (const auto& i : intervals_) {
    if (!first) out << " U ";
    first = false;
    if (i.is_point()) {
      out << '{' << i.lo.get_str() << '}';
    } else {
      out << (i.lo_closed ? '[' : '(') << i.lo.get_str() << ", " << i.hi.get_str()
          << (i.hi_closed ? ']' : ')');
    }
  }
  return out.str();
}

}  // namespace equm
