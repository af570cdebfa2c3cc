#pragma once

#include <gmpxx.h>

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace equm {

using Rational = mpq_class;

/// Builds a canonical rational num/den. Throws ZeroDenominator on den == 0.
Rational make_rational(long num, long den = 1);

/*
 * Finitely supported Laurent polynomials in a fixed positive infinitesimal eps
 * with exact rational coefficients:
 *
 *     x = sum_k c_k * eps^e_k,   e_0 < e_1 < ... ,  c_k != 0
 *
 * Ordered as eps -> 0+, so the term of minimal exponent (the leading term)
 * decides the sign. Negative exponents denote infinite elements, positive
 * exponents infinitesimal ones. The representation is canonical: equal values
 * have identical term lists.
 */
class NSReal {
 public:
  struct Term {
    int exponent;
    Rational coefficient;

    friend bool operator==(const Term&, const Term&) = default;
  };

  NSReal() = default;
  NSReal(const Rational& value);  // NOLINT(google-explicit-constructor)
  NSReal(long value) : NSReal(Rational(value)) {}  // NOLINT(google-explicit-constructor)

  /// coefficient * eps^exponent
  static NSReal monomial(const Rational& coefficient, int exponent);
  static NSReal eps(int exponent = 1) { return monomial(1, exponent); }
  /// Sorts, merges equal exponents and drops zero coefficients.
  static NSReal from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Precondition: nonzero.
  const Term& leading_term() const;
  int leading_exponent() const { return leading_term().exponent; }
  Rational coefficient(int exponent) const;

  /// Zero, or a single exponent-0 term.
  bool is_standard() const noexcept;
  /// No term with a negative exponent.
  bool is_finite() const noexcept;

  NSReal& operator+=(const NSReal& rhs);
  NSReal& operator-=(const NSReal& rhs);
  NSReal& operator*=(const NSReal& rhs);

  friend NSReal operator+(NSReal lhs, const NSReal& rhs) { return lhs += rhs; }
  friend NSReal operator-(NSReal lhs, const NSReal& rhs) { return lhs -= rhs; }
  friend NSReal operator*(const NSReal& lhs, const NSReal& rhs);
  friend NSReal operator-(const NSReal& x);

  friend bool operator==(const NSReal&, const NSReal&) = default;
  /// Quantitative total order.
  friend std::strong_ordering operator<=>(const NSReal& lhs, const NSReal& rhs);

 private:
  std::vector<Term> terms_;
};

NSReal add(const NSReal& x, const NSReal& y);
NSReal mul(const NSReal& x, const NSReal& y);
NSReal neg(const NSReal& x);

/// -1, 0 or +1: the sign of the leading coefficient.
int sign(const NSReal& x);

/// Exponent-0 coefficient. Throws InfiniteValue if x has a negative exponent.
Rational standard_part(const NSReal& x);

bool is_infinitesimal(const NSReal& x);

enum class QOrdering { Less = -1, Equivalent = 0, Greater = 1 };

QOrdering reverse(QOrdering ordering) noexcept;
std::string_view to_string(QOrdering ordering) noexcept;

/*
 * Qualitative comparison. For positive x, y: x is qualitatively larger than y
 * iff (x - y) / x is bounded below by a positive standard rational, which is
 * the case iff x > y and the leading exponent of x - y equals that of x.
 * Extended to all signs by: x >= 0 > y gives x larger, and x larger than y
 * iff -y larger than -x. Zero compares equivalent to zero and below any
 * positive value.
 */
QOrdering qcompare(const NSReal& x, const NSReal& y);

}  // namespace equm
