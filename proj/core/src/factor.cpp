#include "heights/factor.hpp"

#include <algorithm>
#include <bitset>

#include "heights/modp.hpp"

namespace heights {

IntPoly Factorization::product() const {
  IntPoly out = IntPoly::constant(content);
  for (const auto& [f, m] : factors)
    for (unsigned i = 0; i < m; ++i) out = mul(out, f);
  return out;
}

Factorization squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw error("zero polynomial has no squarefree decomposition");
  Factorization out;
  out.content = content(p) * sgn(p.leading());
  if (p.degree() == 0) return out;
  IntPoly f = *divide_exact(p, IntPoly::constant(out.content));

  // Yun's algorithm over Z.
  IntPoly fp = derivative(f);
  IntPoly a = gcd(f, fp);
  if (a.degree() == 0) {
    out.factors.emplace_back(f, 1);
    return out;
  }
  IntPoly b = *divide_exact(f, a);
  IntPoly c = *divide_exact(fp, a);
  IntPoly d = sub(c, derivative(b));
  unsigned i = 1;
  while (b.degree() > 0) {
    IntPoly g = gcd(b, d);
    if (g.degree() > 0) out.factors.emplace_back(g, i);
    b = *divide_exact(b, g);
    c = *divide_exact(d, g);
    d = sub(c, derivative(b));
    ++i;
  }
  return out;
}

namespace {

using modp::u64;

// ---- arithmetic on polynomials with coefficients in Z/m, m = p^k ----

using ModPoly = std::vector<Int>;  // coefficients in [0, m)

void mnormalize(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly mreduce(const IntPoly& f, const Int& m) {
  ModPoly out(f.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i)
    mpz_mod(out[i].get_mpz_t(), f.coeffs()[i].get_mpz_t(), m.get_mpz_t());
  mnormalize(out);
  return out;
}

ModPoly mmul(const ModPoly& a, const ModPoly& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  for (auto& c : out) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  mnormalize(out);
  return out;
}

ModPoly msub(const ModPoly& a, const ModPoly& b, const Int& m) {
  ModPoly out(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < out.size(); ++i) {
    Int v = (i < a.size() ? a[i] : Int(0)) - (i < b.size() ? b[i] : Int(0));
    mpz_mod(out[i].get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  }
  mnormalize(out);
  return out;
}

ModPoly madd(const ModPoly& a, const ModPoly& b, const Int& m) {
  ModPoly out(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < out.size(); ++i) {
    Int v = (i < a.size() ? a[i] : Int(0)) + (i < b.size() ? b[i] : Int(0));
    mpz_mod(out[i].get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  }
  mnormalize(out);
  return out;
}

// Division by a monic divisor, mod m. Returns {quotient, remainder}.
std::pair<ModPoly, ModPoly> mdivmod_monic(const ModPoly& a, const ModPoly& g,
                                          const Int& m) {
  if (g.empty() || g.back() != 1) throw error("mdivmod: divisor not monic");
  ModPoly r = a;
  mnormalize(r);
  if (r.size() < g.size()) return {{}, r};
  ModPoly q(r.size() - g.size() + 1, Int(0));
  for (std::size_t i = q.size(); i-- > 0;) {
    if (r.size() < g.size() + i) continue;
    Int c = (g.size() - 1 + i < r.size()) ? r[g.size() - 1 + i] : Int(0);
    if (c == 0) continue;
    q[i] = c;
    for (std::size_t j = 0; j < g.size(); ++j) {
      Int v = r[i + j] - c * g[j];
      mpz_mod(r[i + j].get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    }
  }
  mnormalize(r);
  mnormalize(q);
  return {q, r};
}

Int minv(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw error("non-invertible element in Hensel lifting");
  return r;
}

ModPoly mscale(const ModPoly& a, const Int& c, const Int& m) {
  ModPoly out = a;
  for (auto& x : out) {
    x *= c;
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  }
  mnormalize(out);
  return out;
}

ModPoly from_modp(const modp::Poly& f) {
  ModPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = Int(static_cast<unsigned long>(f[i]));
  return out;
}

// Extended Euclid over F_p for monic-able polynomials: s*g + t*h = 1.
void bezout_modp(const modp::Poly& g, const modp::Poly& h, u64 p, ModPoly& s,
                 ModPoly& t) {
  // work with u64 polys
  modp::Poly r0 = g, r1 = h;
  modp::Poly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    // r0 = q*r1 + r2
    modp::Poly r = r0, q;
    u64 ilc = modp::inv(r1.back(), p);
    q.assign(r.size() >= r1.size() ? r.size() - r1.size() + 1 : 0, 0);
    while (modp::degree(r) >= modp::degree(r1)) {
      u64 c = modp::mul(r.back(), ilc, p);
      std::size_t shift = r.size() - r1.size();
      q[shift] = c;
      for (std::size_t j = 0; j < r1.size(); ++j)
        r[shift + j] = modp::sub(r[shift + j], modp::mul(c, r1[j], p), p);
      modp::normalize(r);
    }
    modp::normalize(q);
    auto comb = [&](const modp::Poly& a0, const modp::Poly& a1) {
      modp::Poly qa1 = modp::mul(q, a1, p);
      modp::Poly out(std::max(a0.size(), qa1.size()), 0);
      for (std::size_t i = 0; i < out.size(); ++i) {
        u64 x = i < a0.size() ? a0[i] : 0;
        u64 y = i < qa1.size() ? qa1[i] : 0;
        out[i] = modp::sub(x, y, p);
      }
      modp::normalize(out);
      return out;
    };
    modp::Poly s2 = comb(s0, s1), t2 = comb(t0, t1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (modp::degree(r0) != 0) throw error("bezout: inputs not coprime mod p");
  u64 ic = modp::inv(r0[0], p);
  for (auto& c : s0) c = modp::mul(c, ic, p);
  for (auto& c : t0) c = modp::mul(c, ic, p);
  s = from_modp(s0);
  t = from_modp(t0);
}

// Quadratic Hensel lift of T = g*h (mod p) to modulus >= target, g monic.
// s*g + t*h = 1 (mod p) on input. Outputs are reduced mod `target`.
void hensel_pair(const ModPoly& T, ModPoly g, ModPoly h, ModPoly s, ModPoly t,
                 const Int& p, const Int& target, ModPoly& gout, ModPoly& hout) {
  Int m = p;
  while (m < target) {
    Int m2 = m * m;
    // e = T - g*h mod m2
    ModPoly e = msub(T, mmul(g, h, m2), m2);
    // q, dg = divmod(t*e, g); g' = g + dg; h' = h + s*e + q*h
    auto [q, dg] = mdivmod_monic(mmul(t, e, m2), g, m2);
    ModPoly g2 = madd(g, dg, m2);
    ModPoly h2 = madd(h, madd(mmul(s, e, m2), mmul(q, h, m2), m2), m2);
    // refresh Bezout: b = s*g2 + t*h2 - 1
    ModPoly one{Int(1)};
    ModPoly b = msub(madd(mmul(s, g2, m2), mmul(t, h2, m2), m2), one, m2);
    auto [q2, ds] = mdivmod_monic(mmul(s, b, m2), g2, m2);
    ModPoly s2 = msub(s, ds, m2);
    ModPoly t2 = msub(t, madd(mmul(t, b, m2), mmul(q2, h2, m2), m2), m2);
    g = std::move(g2);
    h = std::move(h2);
    s = std::move(s2);
    t = std::move(t2);
    m = m2;
  }
  // reduce to target modulus
  auto red = [&](ModPoly& f) {
    for (auto& c : f) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), target.get_mpz_t());
    mnormalize(f);
  };
  red(g);
  red(h);
  gout = std::move(g);
  hout = std::move(h);
}

// Lift a mod-p factorization of T (T = lc(T) * prod(monic factors) mod p)
// to monic factors mod `target`; recursion over a subproduct tree.
void lift_tree(const ModPoly& T, const std::vector<modp::Poly>& factors,
               std::size_t lo, std::size_t hi, u64 p, const Int& target,
               std::vector<ModPoly>& out) {
  Int pz(static_cast<unsigned long>(p));
  if (hi - lo == 1) {
    // make T monic mod target
    ModPoly f = T;
    mnormalize(f);
    Int ilc = minv(f.back(), target);
    out.push_back(mscale(f, ilc, target));
    return;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  modp::Poly g0m{1};
  for (std::size_t i = lo; i < mid; ++i) g0m = modp::mul(g0m, factors[i], p);
  modp::Poly h0m{1};
  for (std::size_t i = mid; i < hi; ++i) h0m = modp::mul(h0m, factors[i], p);
  // scale h0 by lc(T) mod p
  Int lcT = T.back();
  Int lcmod;
  mpz_mod(lcmod.get_mpz_t(), lcT.get_mpz_t(), pz.get_mpz_t());
  u64 lcu = lcmod.get_ui();
  for (auto& c : h0m) c = modp::mul(c, lcu, p);
  ModPoly s, t;
  bezout_modp(g0m, h0m, p, s, t);
  ModPoly g, h;
  hensel_pair(T, from_modp(g0m), from_modp(h0m), s, t, pz, target, g, h);
  lift_tree(g, factors, lo, mid, p, target, out);
  lift_tree(h, factors, mid, hi, p, target, out);
}

// Symmetric representative in (-m/2, m/2].
IntPoly symmetric_rep(const ModPoly& f, const Int& m) {
  Int half = m / 2;
  std::vector<Int> v(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    v[i] = f[i] > half ? Int(f[i] - m) : f[i];
  return IntPoly(std::move(v));
}

struct ModpAttempt {
  u64 p = 0;
  std::vector<modp::Poly> factors;
};

// Factor a primitive squarefree polynomial with positive leading
// coefficient and degree >= 2 (and nonzero constant term handled by caller;
// zero constant term is fine here as long as the chosen p keeps things
// squarefree, which requires q(0) != 0 mod p only if t | q -- caller strips t).
std::vector<IntPoly> zassenhaus(const IntPoly& q) {
  const int n = q.degree();
  std::vector<ModpAttempt> attempts;
  Int pcand(1 << 28);
  int tried = 0;
  while (static_cast<int>(attempts.size()) < 3 && tried < 60) {
    pcand = next_prime(pcand);
    ++tried;
    u64 p = pcand.get_ui();
    if (mpz_divisible_ui_p(q.leading().get_mpz_t(), p)) continue;
    modp::Poly fm = modp::reduce(q, p);
    if (modp::degree(fm) != n) continue;
    modp::Poly d = modp::derivative(fm, p);
    if (modp::degree(modp::gcd(fm, d, p)) != 0) continue;
    ModpAttempt at;
    at.p = p;
    at.factors = modp::factor_squarefree(modp::make_monic(fm, p), p);
    if (at.factors.size() == 1) return {q};  // irreducible witness
    attempts.push_back(std::move(at));
  }
  if (attempts.empty()) throw error("no usable prime found for factorization");

  // Degree-set analysis across primes.
  std::bitset<256> possible;
  possible.set();
  for (const auto& at : attempts) {
    std::bitset<256> sums;
    sums.set(0);
    for (const auto& f : at.factors) {
      int d = modp::degree(f);
      sums |= sums << d;
    }
    possible &= sums;
  }
  bool proper = false;
  for (int d = 1; d < n; ++d)
    if (possible.test(d)) proper = true;
  if (!proper) return {q};

  // Hensel lift the attempt with the fewest modular factors.
  const ModpAttempt* best = &attempts[0];
  for (const auto& at : attempts)
    if (at.factors.size() < best->factors.size()) best = &at;
  if (best->factors.size() > 26)
    throw error("factorization beyond desk scale (too many modular factors)");

  // Landau-Mignotte style bound on factor coefficients (times lc).
  Int height(0);
  for (const auto& c : q.coeffs()) {
    Int a = abs(c);
    if (a > height) height = a;
  }
  Int bound = height * abs(q.leading()) * (n + 1);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n + 1);
  Int pz(static_cast<unsigned long>(best->p));
  Int target = pz;
  while (target <= 2 * bound) target *= pz;

  std::vector<ModPoly> lifted;
  lift_tree(mreduce(q, target), best->factors, 0, best->factors.size(), best->p,
            target, lifted);

  // Recombination.
  std::vector<IntPoly> result;
  std::vector<std::size_t> avail(lifted.size());
  for (std::size_t i = 0; i < avail.size(); ++i) avail[i] = i;
  IntPoly remaining = q;

  std::size_t s = 1;
  while (2 * s <= avail.size()) {
    // iterate over size-s index subsets of avail in lexicographic order
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    bool found = false;
    for (;;) {
      ModPoly prod{Int(1)};
      Int lcmod;
      mpz_mod(lcmod.get_mpz_t(), remaining.leading().get_mpz_t(),
              target.get_mpz_t());
      prod[0] = lcmod;
      for (std::size_t i : idx) prod = mmul(prod, lifted[avail[i]], target);
      IntPoly cand = symmetric_rep(prod, target);
      if (!cand.is_zero()) {
        cand = primitive_part(cand);
        if (sgn(cand.leading()) < 0) cand = neg(cand);
        if (cand.degree() >= 1) {
          if (auto quot = divide_exact(remaining, cand)) {
            result.push_back(cand);
            remaining = *quot;
            if (sgn(remaining.leading()) < 0) remaining = neg(remaining);
            std::vector<std::size_t> next;
            for (std::size_t i = 0; i < avail.size(); ++i)
              if (std::find(idx.begin(), idx.end(), i) == idx.end())
                next.push_back(avail[i]);
            avail = std::move(next);
            found = true;
            break;
          }
        }
      }
      // next subset
      std::size_t i = s;
      while (i-- > 0) {
        if (idx[i] != i + avail.size() - s) {
          ++idx[i];
          for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
          break;
        }
        if (i == 0) goto subsets_done;
      }
      continue;
    subsets_done:
      break;
    }
    if (!found) ++s;
  }
  if (remaining.degree() >= 1) result.push_back(primitive_part(remaining));
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<IntPoly> factor_squarefree_over_Z(IntPoly q) {
  std::vector<IntPoly> out;
  if (q.coeff(0) == 0) {
    out.push_back(IntPoly{0, 1});
    q = *divide_exact(q, IntPoly{0, 1});
  }
  if (q.degree() == 0) return out;
  if (q.degree() == 1) {
    out.push_back(q);
    return out;
  }
  auto irr = zassenhaus(q);
  out.insert(out.end(), irr.begin(), irr.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Factorization factor_over_Z(const IntPoly& p) {
  if (p.is_zero()) throw error("zero polynomial has no factorization");
  Factorization sf = squarefree_decomposition(p);
  Factorization out;
  out.content = sf.content;
  for (const auto& [q, m] : sf.factors)
    for (const auto& f : factor_squarefree_over_Z(q))
      out.factors.emplace_back(f, m);
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

bool is_irreducible_over_Z(const IntPoly& p) {
  if (p.is_zero() || p.degree() < 1)
    throw error("irreducibility requires degree >= 1");
  if (content(p) != 1) throw error("irreducibility requires primitive input");
  Factorization f = factor_over_Z(p);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace heights
