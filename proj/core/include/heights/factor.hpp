#pragma once

#include <utility>
#include <vector>

#include "heights/intpoly.hpp"

namespace heights {

// content * prod factor^multiplicity == the decomposed polynomial, exactly.
// Factors are primitive with positive leading coefficient; the content
// carries the sign.
struct Factorization {
  Int content{1};
  std::vector<std::pair<IntPoly, unsigned>> factors;

  IntPoly product() const;
};

// Yun decomposition: factors pairwise coprime, squarefree, primitive.
Factorization squarefree_decomposition(const IntPoly& p);

// Complete factorization into irreducibles over Z (rational-root screen,
// mod-p degree analysis, Hensel lifting + recombination).
Factorization factor_over_Z(const IntPoly& p);

// p primitive, degree >= 1.
bool is_irreducible_over_Z(const IntPoly& p);

}  // namespace heights
