#pragma once

#include <vector>

#include "heights/intpoly.hpp"
#include "heights/realalg.hpp"

namespace heights {

// N*t^d - p with p the smallest prime < N not dividing N (t^d - 2 for
// N = 2): irreducible by Eisenstein, all roots strictly inside the disk,
// reverse has all roots outside with height N^(1/d).
IntPoly eisenstein_family(const Int& N, unsigned d);

// Quartics (t^2 - g t + b)(t^2 - g' t + b') over Z[sqrt 2] conjugation,
// with b = b1 + b2*sqrt(2) = (3 + 2*sqrt 2)^r and g = c1 + c2*sqrt(2),
// c1 = floor(c2*sqrt 2) + 1, for every admissible c2. Irreducible members
// have two roots inside and two outside the disk, all with Mahler measure
// b1 + b2*sqrt(2).
struct QuarticFamily {
  Int b1;
  Int b2;
  std::vector<IntPoly> polys;
};
QuarticFamily quartic_family(unsigned r);

// The exact positive real a^(p/q), canonicalized.
RealAlgebraic surd(const Int& a, unsigned long p, unsigned long q);

}  // namespace heights
