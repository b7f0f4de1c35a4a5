#pragma once

#include <optional>
#include <string>
#include <utility>

#include "heights/intpoly.hpp"

namespace heights {

// Exact real algebraic number: canonical minimal polynomial (irreducible,
// primitive, positive leading coefficient) plus an isolating interval.
// For degree 1 the interval is the exact rational point [v, v]; for degree
// >= 2 it is (lo, hi] with rational endpoints that are never roots.
class RealAlgebraic {
 public:
  RealAlgebraic();  // zero
  static RealAlgebraic from_rational(const Rat& x);
  static RealAlgebraic from_int(const Int& x);
  // Selects the unique real root of p lying in [lo, hi]; p need not be
  // irreducible (the vanishing irreducible factor is selected and the value
  // canonicalized). Throws if the interval does not isolate one root of p.
  static RealAlgebraic from_root_of(const IntPoly& p, const Rat& lo,
                                    const Rat& hi);

  const IntPoly& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }
  bool is_rational() const { return degree() == 1; }
  Rat rational_value() const;  // throws unless degree 1
  Rat lo() const { return lo_; }
  Rat hi() const { return hi_; }
  int sign() const;

  // Index of this root among the ascending real roots of minpoly, 0-based.
  int root_index() const;
  // "minpoly=<coeffs>;root=<index>" — deterministic grouping key.
  std::string canonical_key() const;
  // Decimal approximation with the given number of fractional digits
  // (informative only, truncated toward zero).
  std::string approx(int digits) const;

  // Shrinks the isolating interval to width <= eps and returns it.
  std::pair<Rat, Rat> refine(const Rat& eps) const;

  friend int compare(const RealAlgebraic& x, const RealAlgebraic& y);

 private:
  IntPoly minpoly_;
  mutable Rat lo_, hi_;
};

int compare(const RealAlgebraic& x, const RealAlgebraic& y);
int compare_to_rational(const RealAlgebraic& x, const Rat& r);
inline bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) {
  return compare(a, b) == 0;
}
inline bool operator<(const RealAlgebraic& a, const RealAlgebraic& b) {
  return compare(a, b) < 0;
}

RealAlgebraic mul(const RealAlgebraic& x, const RealAlgebraic& y);
RealAlgebraic abs(const RealAlgebraic& x);
RealAlgebraic pow_int(const RealAlgebraic& x, long n);
// The unique nonnegative real n-th root; requires x >= 0, n >= 1.
RealAlgebraic nth_root_positive(const RealAlgebraic& x, unsigned long n);

// x = a^b with a natural not a perfect power and b > 0 in lowest terms,
// when such a representation exists; requires x > 0.
std::optional<std::pair<Int, Rat>> is_natural_power(const RealAlgebraic& x);

}  // namespace heights
