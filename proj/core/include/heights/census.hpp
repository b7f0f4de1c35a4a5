#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "heights/intpoly.hpp"
#include "heights/realalg.hpp"

namespace heights {

// One row of a census table: a distinct exact key value (height H for
// number censuses, Mahler measure M for polynomial censuses) with the
// number of objects attaining it.
struct CensusRecord {
  RealAlgebraic key;
  unsigned d = 0;
  unsigned k = 0;
  unsigned long count = 0;
  unsigned deg_Hd = 0;  // degree of Q(H^d) over Q; 0 when not applicable
};

struct SlopeEstimate {
  std::vector<std::pair<double, unsigned long>> points;
  double slope = 0;
  double intercept = 0;
  double residual = 0;
};

// Yields every degree-d integer polynomial with positive leading
// coefficient and Mahler measure <= Mmax (exact filter; the candidate box is
// |a_i| <= binom(d,i)*Mmax), in lexicographic coefficient order.
void enumerate_bounded(unsigned d, const Rat& Mmax, bool primitive_only,
                       const std::function<void(const IntPoly&)>& yield);

// Heights H <= Hmax of degree-d algebraic numbers with exactly k conjugates
// strictly inside the unit disk; count = d * (#minimal polynomials), sorted
// ascending by key. threads = 0 picks HEIGHT_CENSUS_THREADS or the hardware
// count.
std::vector<CensusRecord> census_A(unsigned k, unsigned d, const Rat& Hmax,
                                   unsigned threads = 0);

// The distinct key set of census_A.
std::pair<std::vector<RealAlgebraic>, std::size_t> census_B(unsigned k,
                                                            unsigned d,
                                                            const Rat& Hmax,
                                                            unsigned threads = 0);

// Mahler measures M <= Mmax over ALL degree-d integer polynomials with
// positive leading coefficient (any content, reducible included), k counted
// with multiplicity.
std::vector<CensusRecord> census_mahler(unsigned k, unsigned d,
                                        const Rat& Mmax, unsigned threads = 0);

// Least-squares fit of log(count) against log(x).
SlopeEstimate fit_slope(
    const std::vector<std::pair<double, unsigned long>>& points);

}  // namespace heights
