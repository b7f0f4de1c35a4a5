#pragma once

#include "heights/intpoly.hpp"
#include "heights/realalg.hpp"

namespace heights {

// Exact Mahler measure |lc| * prod max(1, |z|) of a nonzero integer
// polynomial, as a real algebraic number >= 1 * |content|.
RealAlgebraic mahler_exact(const IntPoly& p);

// Weil height of the roots of an irreducible primitive polynomial of
// degree d: the positive real d-th root of the Mahler measure.
RealAlgebraic height_exact(const IntPoly& p);

// Degree of the field generated by H^d = M over Q, for irreducible p.
unsigned deg_of_height_power(const IntPoly& p);

}  // namespace heights
