#pragma once

#include <utility>
#include <vector>

#include "heights/realalg.hpp"

namespace heights {

enum class OrbitClass { FixedSurd, TendingToOne, BudgetExhausted };

struct OrbitReport {
  RealAlgebraic seed;
  std::vector<RealAlgebraic> trajectory;  // trajectory[0] == seed
  OrbitClass classification = OrbitClass::BudgetExhausted;

  // FixedSurd payload: trajectory constant == surd_a^surd_b from settled_at.
  Int surd_a;
  Rat surd_b;
  std::size_t settled_at = 0;

  // TendingToOne payload: the last value's refined interval.
  std::pair<Rat, Rat> last_interval;

  // trajectory[n] >= trajectory[n+1] for all n >= 1, exactly.
  bool decreasing_verified = false;
  // trajectory[n] <= trajectory[1]^((1-1/d!)^(n-1)) with d = deg of
  // trajectory[1]; checked numerically with certified endpoints when d <= 6,
  // vacuously true otherwise.
  bool envelope_verified = false;
};

// Height of the minimal polynomial of x (independent of the chosen root).
RealAlgebraic height_of(const RealAlgebraic& x);

// Iterates x -> height_of(x), classifying the orbit: exact surd fixed point,
// numerically-indicated convergence to 1 (value within [1, 1+one_eps]), or
// budget exhaustion (step count, or a minpoly degree that would exceed 64).
OrbitReport iterate(const RealAlgebraic& seed, unsigned max_steps,
                    const Rat& one_eps);

}  // namespace heights
