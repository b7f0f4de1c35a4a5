#pragma once

#include <vector>

#include "heights/intpoly.hpp"

namespace heights {

// Sturm chain of a nonzero polynomial; works for non-squarefree input too
// (counts distinct real roots).
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p);
  // Generalized chain seeded with (p, q) instead of (p, p'); the variation
  // difference V(a) - V(b) then computes the Cauchy index of q/p over (a, b].
  SturmChain(const IntPoly& p, const IntPoly& q);

  int variations_at(const Rat& x) const;
  int variations_at_minus_inf() const;
  int variations_at_plus_inf() const;

  // Number of distinct real roots in the half-open interval (a, b], a <= b.
  int count_roots(const Rat& a, const Rat& b) const;
  int count_real_roots() const;

  const std::vector<IntPoly>& chain() const { return chain_; }

 private:
  std::vector<IntPoly> chain_;
};

// B > 0 with every complex root z of p satisfying |z| < B (Cauchy bound).
Rat root_bound(const IntPoly& p);

// Half-open interval (lo, hi] containing exactly one distinct real root.
struct IsolatingInterval {
  Rat lo;
  Rat hi;
};

// Isolating intervals for all distinct real roots of p, in ascending order.
std::vector<IsolatingInterval> isolate_real_roots(const IntPoly& p);

// Shrinks an isolating interval of p until hi - lo <= width, preserving the
// (lo, hi] convention.
IsolatingInterval refine_interval(const IntPoly& p, const SturmChain& chain,
                                  IsolatingInterval iv, const Rat& width);

}  // namespace heights
