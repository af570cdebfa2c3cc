#include "equm/nsreal.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "equm/error.hpp"

namespace equm {

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, std::to_string(num) + "/0");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

NSReal::NSReal(const Rational& value) {
  if (value != 0) terms_.push_back({0, value});
}

NSReal NSReal::monomial(const Rational& coefficient, int exponent) {
  NSReal x;
  if (coefficient != 0) x.terms_.push_back({exponent, coefficient});
  return x;
}

NSReal NSReal::from_terms(std::vector<Term> terms) {
  std::map<int, Rational> merged;
  for (auto& t : terms) merged[t.exponent] += t.coefficient;
  NSReal x;
  for (auto& [e, c] : merged)
    if (c != 0) x.terms_.push_back({e, c});
  return x;
}

const NSReal::Term& NSReal::leading_term() const {
  if (terms_.empty()) throw Error(ErrorCode::PreconditionViolated, "leading term of zero");
  return terms_.front();
}

Rational NSReal::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coefficient;
  return 0;
}

bool NSReal::is_standard() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().exponent == 0);
}

bool NSReal::is_finite() const noexcept {
  return terms_.empty() || terms_.front().exponent >= 0;
}

// Both term lists are sorted, so addition is a merge.
namespace {
template <bool Subtract>
void merge_into(std::vector<NSReal::Term>& lhs, const std::vector<NSReal::Term>& rhs) {
  if (rhs.empty()) return;
  std::vector<NSReal::Term> out;
  out.reserve(lhs.size() + rhs.size());
  auto a = lhs.begin();
  auto b = rhs.begin();
  while (a != lhs.end() || b != rhs.end()) {
    if (b == rhs.end() || (a != lhs.end() && a->exponent < b->exponent)) {
      out.push_back(std::move(*a++));
    } else if (a == lhs.end() || b->exponent < a->exponent) {
      if constexpr (Subtract)
        out.push_back({b->exponent, -b->coefficient});
      else
        out.push_back(*b);
      ++b;
    } else {
      if constexpr (Subtract)
        a->coefficient -= b->coefficient;
      else
        a->coefficient += b->coefficient;
      if (a->coefficient != 0) out.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  lhs = std::move(out);
}
}  // namespace

NSReal& NSReal::operator+=(const NSReal& rhs) {
  merge_into<false>(terms_, rhs.terms_);
  return *this;
}

NSReal& NSReal::operator-=(const NSReal& rhs) {
  merge_into<true>(terms_, rhs.terms_);
  return *this;
}

NSReal& NSReal::operator*=(const NSReal& rhs) { return *this = *this * rhs; }

NSReal operator*(const NSReal& lhs, const NSReal& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  if (rhs.is_standard()) {
    NSReal out = lhs;
    for (auto& t : out.terms_) t.coefficient *= rhs.terms_.front().coefficient;
    return out;
  }
  std::vector<NSReal::Term> products;
  products.reserve(lhs.terms_.size() * rhs.terms_.size());
  for (const auto& a : lhs.terms_)
    for (const auto& b : rhs.terms_)
      products.push_back({a.exponent + b.exponent, a.coefficient * b.coefficient});
  return NSReal::from_terms(std::move(products));
}

NSReal operator-(const NSReal& x) {
  NSReal out = x;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

std::strong_ordering operator<=>(const NSReal& lhs, const NSReal& rhs) {
  const int s = sign(lhs - rhs);
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

NSReal add(const NSReal& x, const NSReal& y) { return x + y; }
NSReal mul(const NSReal& x, const NSReal& y) { return x * y; }
NSReal neg(const NSReal& x) { return -x; }

int sign(const NSReal& x) {
  if (x.is_zero()) return 0;
  return sgn(x.leading_term().coefficient);
}

Rational standard_part(const NSReal& x) {
  if (!x.is_finite()) throw Error(ErrorCode::InfiniteValue, "standard part of an infinite element");
  return x.coefficient(0);
}

bool is_infinitesimal(const NSReal& x) { return x.is_zero() || x.leading_exponent() > 0; }

QOrdering reverse(QOrdering ordering) noexcept {
  return static_cast<QOrdering>(-static_cast<int>(ordering));
}

std::string_view to_string(QOrdering ordering) noexcept {
  switch (ordering) {
    case QOrdering::Less: return "QLess";
    case QOrdering::Equivalent: return "QEquivalent";
    case QOrdering::Greater: return "QGreater";
  }
  return "?";
}

QOrdering qcompare(const NSReal& x, const NSReal& y) {
  const NSReal d = x - y;
  const int sd = sign(d);
  if (sd == 0) return QOrdering::Equivalent;
  if (sd < 0) return reverse(qcompare(y, x));

  // x > y from here on.
  const int sx = sign(x);
  const int sy = sign(y);
  if (sx >= 0 && sy < 0) return QOrdering::Greater;
  // Same sign: the difference must be of the order of the larger magnitude.
  const NSReal& dominant = sy >= 0 ? x : y;
  return d.leading_exponent() == dominant.leading_exponent() ? QOrdering::Greater
                                                             : QOrdering::Equivalent;
}

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InfiniteValue: return "InfiniteValue";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::InvalidLottery: return "InvalidLottery";
    case ErrorCode::MissingUtility: return "MissingUtility";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::RegimeMismatch: return "RegimeMismatch";
    case ErrorCode::RegimeViolation: return "RegimeViolation";
    case ErrorCode::MissingModel: return "MissingModel";
    case ErrorCode::UnknownState: return "UnknownState";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::IndexOrder: return "IndexOrder";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Error";
}

}  // namespace equm
