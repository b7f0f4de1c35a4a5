#include "heights/numroots.hpp"

#include <algorithm>

#include "heights/sturm.hpp"

namespace heights {

namespace {

struct Cpx {
  mpf_class re, im;
};

Cpx cadd(const Cpx& a, const Cpx& b) { return {a.re + b.re, a.im + b.im}; }
Cpx csub(const Cpx& a, const Cpx& b) { return {a.re - b.re, a.im - b.im}; }
Cpx cmul(const Cpx& a, const Cpx& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Cpx cdiv(const Cpx& a, const Cpx& b) {
  mpf_class n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
mpf_class cabs2(const Cpx& a) { return a.re * a.re + a.im * a.im; }

mpf_class fsqrt(const mpf_class& x) {
  mpf_class r(0, x.get_prec());
  mpf_sqrt(r.get_mpf_t(), x.get_mpf_t());
  return r;
}

Cpx horner(const std::vector<Cpx>& coeffs, const Cpx& z) {
  Cpx acc = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;)
    acc = cadd(cmul(acc, z), coeffs[i]);
  return acc;
}

}  // namespace

std::vector<NumRoot> approximate_roots(const IntPoly& p, unsigned prec_bits) {
  if (p.is_zero() || p.degree() < 1)
    throw error("root approximation requires degree >= 1");
  const unsigned prec = std::max(prec_bits, 64u) + 64;
  const int n = p.degree();

  std::vector<Cpx> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    c[static_cast<std::size_t>(i)].re = mpf_class(p.coeff(static_cast<std::size_t>(i)), prec);
    c[static_cast<std::size_t>(i)].im = mpf_class(0, prec);
  }

  // Initial guesses on a spiral inside the Cauchy root bound.
  Rat bound = root_bound(p);
  mpf_class R(bound.get_num(), prec);
  R /= mpf_class(bound.get_den(), prec);
  std::vector<Cpx> z(static_cast<std::size_t>(n));
  {
    Cpx seed{mpf_class(0.4, prec), mpf_class(0.9, prec)};
    Cpx cur{mpf_class(1, prec), mpf_class(0, prec)};
    for (int i = 0; i < n; ++i) {
      cur = cmul(cur, seed);
      mpf_class scale = R * (1 + mpf_class(i, prec) / (2 * n));
      mpf_class norm = fsqrt(cabs2(cur));
      z[static_cast<std::size_t>(i)] = {cur.re / norm * scale,
                                        cur.im / norm * scale};
    }
  }

  mpf_class tol(1, prec);
  mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), prec_bits);
  const int max_iters = 200 + 20 * n;
  for (int it = 0; it < max_iters; ++it) {
    mpf_class worst(0, prec);
    for (int i = 0; i < n; ++i) {
      Cpx num = horner(c, z[static_cast<std::size_t>(i)]);
      Cpx den = c.back();
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        den = cmul(den, csub(z[static_cast<std::size_t>(i)],
                             z[static_cast<std::size_t>(j)]));
      }
      Cpx w = cdiv(num, den);
      z[static_cast<std::size_t>(i)] = csub(z[static_cast<std::size_t>(i)], w);
      mpf_class step = fsqrt(cabs2(w));
      if (step > worst) worst = step;
    }
    if (worst < tol * (1 + R)) break;
  }

  // Weierstrass inclusion radii: each root lies in the union of the disks
  // centered z_i with radius n*|p(z_i)/(lc * prod_{j!=i}(z_i - z_j))|.
  std::vector<NumRoot> out;
  out.reserve(static_cast<std::size_t>(n));
  mpf_class coeff_sum(0, prec);
  for (int i = 0; i <= n; ++i) coeff_sum += ::abs(c[static_cast<std::size_t>(i)].re);
  mpf_class ulp(1, prec);
  mpf_div_2exp(ulp.get_mpf_t(), ulp.get_mpf_t(), prec - 16);
  for (int i = 0; i < n; ++i) {
    Cpx num = horner(c, z[static_cast<std::size_t>(i)]);
    Cpx den = c.back();
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      den = cmul(den, csub(z[static_cast<std::size_t>(i)],
                           z[static_cast<std::size_t>(j)]));
    }
    mpf_class den_abs = fsqrt(cabs2(den));
    mpf_class w = fsqrt(cabs2(num)) / den_abs;
    // |p(z_i)| carries an absolute evaluation-noise floor of roughly
    // sum|c_j| * max(1,|z_i|)^n ulps; without it a root sitting exactly on
    // a boundary of interest could look certified on the wrong side.
    mpf_class zabs = fsqrt(cabs2(z[static_cast<std::size_t>(i)]));
    mpf_class zpow(1, prec);
    if (zabs > 1)
      for (int j = 0; j < n; ++j) zpow *= zabs;
    mpf_class noise = coeff_sum * zpow * ulp / den_abs;
    // Copy-construct so the full working precision survives into the
    // result; assigning into default-precision fields would round the
    // centers by far more than the radii.
    NumRoot r{mpf_class(z[static_cast<std::size_t>(i)].re),
              mpf_class(z[static_cast<std::size_t>(i)].im),
              mpf_class((w + noise) * (2 * n), prec)};
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const NumRoot& a, const NumRoot& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
  return out;
}

bool disks_pairwise_disjoint(const std::vector<NumRoot>& roots) {
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      mpf_class dx = roots[i].re - roots[j].re;
      mpf_class dy = roots[i].im - roots[j].im;
      mpf_class lhs = dx * dx + dy * dy;
      mpf_class rhs = roots[i].radius + roots[j].radius;
      if (lhs <= rhs * rhs) return false;
    }
  return true;
}

}  // namespace heights
