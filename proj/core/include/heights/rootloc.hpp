#pragma once

#include <utility>

#include "heights/intpoly.hpp"

namespace heights {

// Exact location of the complex roots of an integer polynomial relative to
// the unit circle, counted with multiplicity.
struct RootCount {
  int inside = 0;    // |z| < 1
  int on_circle = 0; // |z| = 1
  int outside = 0;   // |z| > 1
};

// Exact count; never consults floating point. Throws on the zero polynomial.
RootCount count_unit_disk(const IntPoly& p);

// Splits p (up to content) as on_circle_part * remainder where every root of
// on_circle_part has |z| = 1 and remainder has no unit-circle roots. Both
// parts have positive leading coefficient; content(p) * sign is dropped.
// Throws when no such split exists over Z (an irreducible factor with some
// but not all roots on the circle) or on the zero polynomial.
std::pair<IntPoly, IntPoly> circle_root_factor(const IntPoly& p);

// For palindromic p of even degree 2s, the degree-s polynomial h with
// p(z) = z^s h(z + 1/z). Throws if p is not palindromic of even degree.
IntPoly trace_polynomial(const IntPoly& p);

}  // namespace heights
