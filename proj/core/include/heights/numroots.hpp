#pragma once

#include <vector>

#include "heights/intpoly.hpp"

namespace heights {

// One approximate complex root with an inclusion radius: the disk
// |z - (re + i*im)| <= radius contains at least one root, and when all
// returned disks are pairwise disjoint each contains exactly one (counting
// a cluster of m overlapping disks as containing m roots).
struct NumRoot {
  mpf_class re;
  mpf_class im;
  mpf_class radius;
};

// All complex roots of p (degree >= 1 after stripping nothing; roots at 0
// included) via Durand-Kerner iteration at the given working precision.
// Radii come from the Weierstrass correction bound with a generous safety
// factor; callers needing exactness must validate downstream.
std::vector<NumRoot> approximate_roots(const IntPoly& p, unsigned prec_bits);

// max(lower bound of |z|, 1) products etc. are left to callers; this helper
// reports whether the disks are pairwise disjoint.
bool disks_pairwise_disjoint(const std::vector<NumRoot>& roots);

}  // namespace heights
