#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "heights/numbers.hpp"

namespace heights {

// Dense univariate polynomial over Z, coefficient of t^i at index i.
// Invariant: no trailing zero coefficients; the zero polynomial is the
// empty vector.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(Int c);
  static IntPoly monomial(Int c, std::size_t k);
  // Parses the canonical text form "a0,a1,...,ad" (constant term first).
  static IntPoly from_string(const std::string& s);

  bool is_zero() const { return c_.empty(); }
  // Degree of the polynomial, -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Int& coeff(std::size_t i) const;
  const Int& leading() const;
  const Int& constant_term() const { return coeff(0); }
  const std::vector<Int>& coeffs() const { return c_; }

  std::string to_string() const;

  bool operator==(const IntPoly&) const = default;
  // Total order usable as a map key: by degree, then coefficients from the
  // leading one down.
  std::strong_ordering operator<=>(const IntPoly& other) const;

 private:
  void normalize();
  std::vector<Int> c_;
};

IntPoly add(const IntPoly& p, const IntPoly& q);
IntPoly sub(const IntPoly& p, const IntPoly& q);
IntPoly neg(const IntPoly& p);
IntPoly mul(const IntPoly& p, const IntPoly& q);
IntPoly mul_scalar(const IntPoly& p, const Int& c);
IntPoly derivative(const IntPoly& p);
// t^deg(p) * p(1/t), with trailing zeros stripped.
IntPoly reverse(const IntPoly& p);
// p(-t).
IntPoly negate_variable(const IntPoly& p);
// p(t^n).
IntPoly inflate(const IntPoly& p, unsigned long n);
// Largest n >= 1 with p = f(t^n) for some f; 1 for constants.
unsigned long decimation_exponent(const IntPoly& p);
// f with p = f(t^n); requires n to divide every exponent in the support.
IntPoly deflate(const IntPoly& p, unsigned long n);

Rat eval_rational(const IntPoly& p, const Rat& x);
Int eval_int(const IntPoly& p, const Int& x);
// Sign of p(x), exact.
int sign_at(const IntPoly& p, const Rat& x);

// gcd of all coefficients, positive. Throws on the zero polynomial.
Int content(const IntPoly& p);
// p / content(p), leading coefficient sign preserved.
IntPoly primitive_part(const IntPoly& p);

// Quotient of num by den when the division is exact over Z[t].
std::optional<IntPoly> divide_exact(const IntPoly& num, const IntPoly& den);

// Resultant via the subresultant polynomial remainder sequence.
Int resultant(const IntPoly& p, const IntPoly& q);
// Primitive gcd with positive leading coefficient.
IntPoly gcd(const IntPoly& p, const IntPoly& q);

}  // namespace heights
