#include "heights/heightdyn.hpp"

#include <mpfr.h>

#include "heights/mahler.hpp"

namespace heights {

RealAlgebraic height_of(const RealAlgebraic& x) {
  return height_exact(x.minpoly());
}

namespace {

// log of a positive rational at 256-bit precision.
void mpfr_log_rat(mpfr_t out, const Rat& x, mpfr_rnd_t rnd) {
  mpfr_t v;
  mpfr_init2(v, 256);
  mpfr_set_q(v, x.get_mpq_t(), rnd);
  mpfr_log(out, v, rnd);
  mpfr_clear(v);
}

bool envelope_holds(const std::vector<RealAlgebraic>& traj) {
  if (traj.size() < 2) return true;
  const RealAlgebraic& a1 = traj[1];
  int d = a1.degree();
  if (d > 6) return true;  // factorial exponent beyond a sane check
  unsigned long fact = 1;
  for (int i = 2; i <= d; ++i) fact *= static_cast<unsigned long>(i);
  Rat ratio(fact - 1, fact);
  ratio.canonicalize();
  Rat eps(1, 1);
  for (int i = 0; i < 30; ++i) eps /= 10;

  a1.refine(eps);
  mpfr_t log_a1, lhs, rhs, expo;
  mpfr_init2(log_a1, 256);
  mpfr_init2(lhs, 256);
  mpfr_init2(rhs, 256);
  mpfr_init2(expo, 256);
  // lower bound of log(alpha_1)
  mpfr_log_rat(log_a1, a1.lo(), MPFR_RNDD);
  bool ok = true;
  Rat power(1);
  for (std::size_t n = 1; n < traj.size(); ++n) {
    // power = ratio^(n-1)
    traj[n].refine(eps);
    Rat hi = traj[n].hi();
    if (hi <= 1) {
      power *= ratio;
      continue;  // certainly below the envelope (which is >= 1)
    }
    mpfr_log_rat(lhs, hi, MPFR_RNDU);  // upper bound of log(alpha_n)
    mpfr_set_q(expo, power.get_mpq_t(), MPFR_RNDD);
    mpfr_mul(rhs, log_a1, expo, MPFR_RNDD);
    // tolerance 2^-100 for the certified-rounding slack
    mpfr_t tol;
    mpfr_init2(tol, 256);
    mpfr_set_ui_2exp(tol, 1, -100, MPFR_RNDN);
    mpfr_add(rhs, rhs, tol, MPFR_RNDU);
    mpfr_clear(tol);
    if (mpfr_cmp(lhs, rhs) > 0) {
      ok = false;
      break;
    }
    power *= ratio;
  }
  mpfr_clear(log_a1);
  mpfr_clear(lhs);
  mpfr_clear(rhs);
  mpfr_clear(expo);
  return ok;
}

}  // namespace

OrbitReport iterate(const RealAlgebraic& seed, unsigned max_steps,
                    const Rat& one_eps) {
  if (max_steps < 1) throw error("iterate requires max_steps >= 1");
  if (one_eps <= 0) throw error("iterate requires a positive eps");
  OrbitReport rep;
  rep.seed = seed;
  rep.trajectory.push_back(seed);

  auto check_surd = [&](const RealAlgebraic& x, std::size_t at) -> bool {
    if (compare_to_rational(x, Rat(1)) < 0) return false;
    auto np = is_natural_power(x);
    if (!np) return false;
    // one confirmation step: surds are exact fixed points
    RealAlgebraic next = height_of(x);
    if (!(next == x)) throw error("surd value moved under the height map");
    rep.classification = OrbitClass::FixedSurd;
    rep.surd_a = np->first;
    rep.surd_b = np->second;
    rep.settled_at = at;
    return true;
  };

  bool classified = check_surd(seed, 0);
  if (!classified) {
    for (unsigned n = 1; n <= max_steps; ++n) {
      const RealAlgebraic& prev = rep.trajectory.back();
      if (prev.degree() >= 64) break;  // next minpoly degree would exceed 64
      RealAlgebraic next = height_of(prev);
      if (next.degree() > 64) break;
      rep.trajectory.push_back(next);
      if (check_surd(next, n)) {
        classified = true;
        break;
      }
      Rat eps = one_eps / 4;
      auto [lo, hi] = next.refine(eps);
      if (compare_to_rational(next, Rat(1)) >= 0 && hi <= 1 + one_eps) {
        rep.classification = OrbitClass::TendingToOne;
        rep.last_interval = {lo, hi};
        classified = true;
        break;
      }
    }
  }
  if (!classified) rep.classification = OrbitClass::BudgetExhausted;

  rep.decreasing_verified = true;
  for (std::size_t n = 1; n + 1 < rep.trajectory.size(); ++n)
    if (compare(rep.trajectory[n + 1], rep.trajectory[n]) > 0) {
      rep.decreasing_verified = false;
      break;
    }
  rep.envelope_verified = envelope_holds(rep.trajectory);
  return rep;
}

}  // namespace heights
