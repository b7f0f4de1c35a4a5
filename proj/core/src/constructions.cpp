#include "heights/constructions.hpp"

namespace heights {

IntPoly eisenstein_family(const Int& N, unsigned d) {
  if (N < 2) throw error("family requires N >= 2");
  if (d < 1) throw error("family requires degree >= 1");
  if (N == 2) {
    // p t^d - N with p the only prime below 2's reach: swap roles, t^d - 2.
    IntPoly out = IntPoly::monomial(Int(1), d);
    return sub(out, IntPoly::constant(Int(2)));
  }
  Int p(1);
  for (;;) {
    p = next_prime(p);
    if (p >= N) throw error("no admissible prime below N");
    if (!mpz_divisible_p(N.get_mpz_t(), p.get_mpz_t())) break;
  }
  return sub(IntPoly::monomial(N, d), IntPoly::constant(p));
}

namespace {

// floor(u*sqrt(2) + v) for rationals u > 0, v (the argument is irrational).
Int floor_u_sqrt2_plus_v(const Rat& u, const Rat& v) {
  // sqrt(2) bounds with denominator 2^k, tightened until the floor settles.
  for (unsigned k = 32;; k *= 2) {
    Int scale(1);
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), k);
    Int two_sq = 2 * scale * scale;
    Int lo_num = iroot_floor(two_sq, 2);
    Rat s_lo(lo_num, scale), s_hi(lo_num + 1, scale);
    s_lo.canonicalize();
    s_hi.canonicalize();
    Int flo = floor_rat(u * s_lo + v);
    Int fhi = floor_rat(u * s_hi + v);
    if (flo == fhi) return flo;
    if (k > 1u << 20) throw error("floor computation did not settle");
  }
}

}  // namespace

QuarticFamily quartic_family(unsigned r) {
  // (3 + 2 sqrt 2)^r = b1 + b2 sqrt 2 by the integer recurrence.
  Int b1(1), b2(0);
  for (unsigned i = 0; i < r; ++i) {
    Int n1 = 3 * b1 + 4 * b2;
    Int n2 = 2 * b1 + 3 * b2;
    b1 = n1;
    b2 = n2;
  }
  // need b1 + b2 sqrt(2) >= 8 + 4 sqrt(2)
  if (!(b1 >= 8 && b2 >= 4)) throw error("r too small for the quartic family");

  QuarticFamily out;
  out.b1 = b1;
  out.b2 = b2;
  // c2 ranges over 1 .. floor((|beta| - 2)/(2 sqrt 2)); gamma <= |beta| - 1
  // then keeps both roots of the gamma factor outside the unit disk.
  // Rewritten as floor((b1-2)/4 * sqrt 2 + b2/2).
  Rat u(b1 - 2, 4), v(b2, 2);
  u.canonicalize();
  v.canonicalize();
  Int c2max = floor_u_sqrt2_plus_v(u, v);
  for (Int c2(1); c2 <= c2max; ++c2) {
    Int c1 = iroot_floor(2 * c2 * c2, 2) + 1;  // floor(c2 sqrt 2) + 1
    // (t^2 - g t + b)(t^2 - g~ t + b~) expanded over Z:
    std::vector<Int> c{b1 * b1 - 2 * b2 * b2, -2 * (c1 * b1 - 2 * c2 * b2),
                       2 * b1 + c1 * c1 - 2 * c2 * c2, -2 * c1, Int(1)};
    out.polys.push_back(IntPoly(std::move(c)));
  }
  return out;
}

RealAlgebraic surd(const Int& a, unsigned long p, unsigned long q) {
  if (a < 1 || p < 1 || q < 1) throw error("surd requires positive arguments");
  Int ap;
  mpz_pow_ui(ap.get_mpz_t(), a.get_mpz_t(), p);
  return nth_root_positive(RealAlgebraic::from_int(ap), q);
}

}  // namespace heights
