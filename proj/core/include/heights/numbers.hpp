#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace heights {

using Int = mpz_class;
using Rat = mpq_class;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses "3.16", "10", "-1/3" into an exact rational.
Rat rat_from_string(const std::string& s);

Int floor_rat(const Rat& x);
Int ceil_rat(const Rat& x);

Int binomial(unsigned long n, unsigned long k);

// Floor of the k-th root of n >= 0.
Int iroot_floor(const Int& n, unsigned long k);

// Writes n = base^exp with exp maximal (exp = 1 when n is not a proper
// power). Requires n >= 2.
void perfect_power_decompose(const Int& n, Int& base, unsigned long& exp);

// Smallest prime strictly greater than n.
Int next_prime(const Int& n);

// Decimal approximation of p/q with the given number of fractional digits,
// correctly truncated toward zero.
std::string decimal_string(const Rat& x, int digits);

}  // namespace heights
