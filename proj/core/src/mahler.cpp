#include "heights/mahler.hpp"

#include <algorithm>
#include <vector>

#include "heights/factor.hpp"
#include "heights/numroots.hpp"
#include "heights/rootloc.hpp"
#include "heights/sturm.hpp"

namespace heights {

namespace {

RealAlgebraic root_in(const IntPoly& u, const IsolatingInterval& iv) {
  return RealAlgebraic::from_root_of(u, iv.lo, iv.hi);
}

// The unique real root of irreducible u with |z| > 1 (callers guarantee
// existence and uniqueness).
RealAlgebraic unique_root_outside(const IntPoly& u) {
  for (const auto& iv : isolate_real_roots(u)) {
    RealAlgebraic z = root_in(u, iv);
    if (compare_to_rational(z, Rat(1)) > 0 ||
        compare_to_rational(z, Rat(-1)) < 0)
      return z;
  }
  throw error("expected a real root outside the unit interval");
}

RealAlgebraic unique_root_inside(const IntPoly& u) {
  for (const auto& iv : isolate_real_roots(u)) {
    RealAlgebraic z = root_in(u, iv);
    if (compare_to_rational(z, Rat(1)) < 0 &&
        compare_to_rational(z, Rat(-1)) > 0)
      return z;
  }
  throw error("expected a real root inside the unit interval");
}

struct Cpx {
  mpf_class re, im;
};

Cpx cmul(const Cpx& a, const Cpx& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

mpf_class fsqrt(const mpf_class& x) {
  mpf_class r(0, x.get_prec());
  mpf_sqrt(r.get_mpf_t(), x.get_mpf_t());
  return r;
}

mpf_class cabs(const Cpx& a) { return fsqrt(a.re * a.re + a.im * a.im); }

Rat rat_of(const mpf_class& x) {
  Rat r;
  mpq_set_f(r.get_mpq_t(), x.get_mpf_t());
  return r;
}

// Measure of an irreducible factor whose not-inside root set has size m with
// 2 <= m <= d-2: numerically build the subset-product polynomial
// R(t) = prod_{|S|=m} (t - a*prod_{i in S} z_i) (integer coefficients),
// certify the rounding, and select the exact root matching the outside
// product.
RealAlgebraic measure_middle(const IntPoly& u, const RootCount& rc, int m) {
  const int d = u.degree();
  const Int& a = u.leading();

  // Subset count guard.
  Int nsub = binomial(static_cast<unsigned long>(d), static_cast<unsigned long>(m));
  if (nsub > 4096) throw error("subset-product construction beyond desk scale");
  const auto deg_r = static_cast<std::size_t>(nsub.get_ui());

  std::vector<Int> prev_rounded;
  bool have_prev = false;
  for (unsigned prec = 64 * static_cast<unsigned>(d); prec <= 16384; prec *= 2) {
    auto roots = approximate_roots(u, prec);
    if (!disks_pairwise_disjoint(roots)) continue;

    // Classify against the unit circle using the exact counts: roots whose
    // disk is strictly inside are "inside"; strictly outside are "outside";
    // the ambiguous ones must be exactly the on-circle roots.
    std::vector<std::size_t> not_inside;
    int cert_in = 0, cert_out = 0, ambiguous = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      mpf_class mod = fsqrt(roots[i].re * roots[i].re + roots[i].im * roots[i].im);
      if (mod + roots[i].radius < 1) {
        ++cert_in;
      } else if (mod - roots[i].radius > 1) {
        ++cert_out;
        not_inside.push_back(i);
      } else {
        ++ambiguous;
        not_inside.push_back(i);
      }
    }
    if (cert_in != rc.inside || cert_out != rc.outside ||
        ambiguous != rc.on_circle)
      continue;

    // All m-subset products w_S = a * prod_{i in S} z_i, and R = prod (t - w_S).
    std::vector<Cpx> ws;
    ws.reserve(deg_r);
    std::vector<int> idx(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
    mpf_class af(0, prec + 64);
    mpf_set_z(af.get_mpf_t(), a.get_mpz_t());
    for (;;) {
      Cpx w{af, mpf_class(0, prec + 64)};
      for (int i : idx) {
        Cpx z{roots[static_cast<std::size_t>(i)].re,
              roots[static_cast<std::size_t>(i)].im};
        w = cmul(w, z);
      }
      ws.push_back(w);
      int i = m;
      bool done = true;
      while (i-- > 0) {
        if (idx[static_cast<std::size_t>(i)] != i + d - m) {
          ++idx[static_cast<std::size_t>(i)];
          for (int j = i + 1; j < m; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
          done = false;
          break;
        }
      }
      if (done) break;
    }

    const Cpx czero{mpf_class(0, prec + 64), mpf_class(0, prec + 64)};
    std::vector<Cpx> coeff{Cpx{mpf_class(1, prec + 64), mpf_class(0, prec + 64)}};
    for (const Cpx& w : ws) {
      std::vector<Cpx> next(coeff.size() + 1, czero);
      for (std::size_t j = 0; j < coeff.size(); ++j) {
        next[j + 1].re += coeff[j].re;
        next[j + 1].im += coeff[j].im;
        Cpx scaled = cmul(w, coeff[j]);
        next[j].re -= scaled.re;
        next[j].im -= scaled.im;
      }
      coeff = std::move(next);
    }
    // coeff[j] is the coefficient of t^j of prod(t - w_S); coeff[deg_r] = 1.
    std::vector<Int> rounded(deg_r + 1);
    mpf_class worst(0, prec + 64);
    bool ok = true;
    for (std::size_t j = 0; j <= deg_r; ++j) {
      mpf_class re = coeff[j].re;
      mpf_class shifted = re + mpf_class(0.5, prec + 64);
      mpf_class fl(0, prec + 64);
      mpf_floor(fl.get_mpf_t(), shifted.get_mpf_t());
      Int c;
      mpz_set_f(c.get_mpz_t(), fl.get_mpf_t());
      rounded[j] = c;
      mpf_class dev = re;
      mpf_class cf(0, prec + 64);
      mpf_set_z(cf.get_mpf_t(), c.get_mpz_t());
      dev -= cf;
      mpf_abs(dev.get_mpf_t(), dev.get_mpf_t());
      mpf_class devi = coeff[j].im;
      mpf_abs(devi.get_mpf_t(), devi.get_mpf_t());
      dev += devi;
      if (dev > worst) worst = dev;
    }
    if (worst >= mpf_class(0.25, prec)) ok = false;
    if (ok && have_prev && rounded == prev_rounded) {
      std::vector<Int> rcoeffs = rounded;
      IntPoly R(std::move(rcoeffs));
      // Exact value v = a * prod_{not inside} z_i is real; bracket it.
      Cpx v{af, mpf_class(0, prec + 64)};
      mpf_class verr(0, prec + 64);
      for (std::size_t i : not_inside) {
        Cpx z{roots[i].re, roots[i].im};
        mpf_class step = (cabs(v) + verr) * roots[i].radius + verr * cabs(z);
        v = cmul(v, z);
        verr += step;
      }
      mpf_class im_abs = v.im;
      mpf_abs(im_abs.get_mpf_t(), im_abs.get_mpf_t());
      Rat E = rat_of(verr * 2 + im_abs * 2) + Rat(1, 1000000);
      Rat lo = rat_of(v.re) - E, hi = rat_of(v.re) + E;
      try {
        RealAlgebraic val = RealAlgebraic::from_root_of(R, lo, hi);
        return abs(val);
      } catch (const error&) {
        // bracket not isolating yet; retry at higher precision
      }
    }
    if (ok) {
      prev_rounded = rounded;
      have_prev = true;
    }
  }
  throw error("Mahler measure certification failed within the precision cap");
}

// Measure of an irreducible primitive factor with positive leading coeff.
RealAlgebraic measure_irreducible(const IntPoly& u) {
  const int d = u.degree();
  if (d == 1 && u.coeff(0) == 0) return RealAlgebraic::from_int(Int(1));  // t
  RootCount rc = count_unit_disk(u);
  int m = rc.on_circle + rc.outside;  // size of the not-inside bucket
  if (m == 0) return RealAlgebraic::from_int(abs(u.leading()));
  if (m == d) return RealAlgebraic::from_int(abs(u.coeff(0)));
  if (m == 1) {
    // The single not-inside root is real; M = |a * z_out|.
    RealAlgebraic z = unique_root_outside(u);
    return abs(mul(RealAlgebraic::from_int(u.leading()), z));
  }
  if (m == d - 1) {
    // M = |a0 / z_in| with the single inside root real and nonzero.
    RealAlgebraic z = unique_root_inside(u);
    return abs(mul(RealAlgebraic::from_int(u.coeff(0)), pow_int(z, -1)));
  }
  // M(f(t^n)) = M(f): deflate before resorting to numerics.
  unsigned long n = decimation_exponent(u);
  if (n > 1) return mahler_exact(deflate(u, n));
  return measure_middle(u, rc, m);
}

}  // namespace

RealAlgebraic mahler_exact(const IntPoly& p) {
  if (p.is_zero()) throw error("Mahler measure of the zero polynomial");
  Factorization fac = factor_over_Z(p);
  RealAlgebraic acc = RealAlgebraic::from_int(abs(fac.content));
  for (const auto& [u, mult] : fac.factors) {
    RealAlgebraic mu = measure_irreducible(u);
    acc = mul(acc, pow_int(mu, static_cast<long>(mult)));
  }
  return acc;
}

RealAlgebraic height_exact(const IntPoly& p) {
  if (p.is_zero() || p.degree() < 1)
    throw error("height requires degree >= 1");
  if (!is_irreducible_over_Z(primitive_part(p)) || content(p) != 1)
    throw error("height requires an irreducible primitive polynomial");
  return nth_root_positive(mahler_exact(p),
                           static_cast<unsigned long>(p.degree()));
}

unsigned deg_of_height_power(const IntPoly& p) {
  if (p.is_zero() || p.degree() < 1)
    throw error("degree of H^d requires degree >= 1");
  IntPoly q = primitive_part(p);
  if (!is_irreducible_over_Z(q))
    throw error("degree of H^d requires an irreducible polynomial");
  return static_cast<unsigned>(mahler_exact(q).degree());
}

}  // namespace heights
