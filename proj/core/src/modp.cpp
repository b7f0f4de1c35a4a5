#include "heights/modp.hpp"

#include <algorithm>
#include <random>

namespace heights::modp {

u64 add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}

u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 mul(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv(u64 a, u64 p) { return pow(a % p, p - 2, p); }

Poly reduce(const IntPoly& f, u64 p) {
  Poly out(f.coeffs().size());
  Int pz(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < out.size(); ++i) {
    Int r;
    mpz_mod(r.get_mpz_t(), f.coeffs()[i].get_mpz_t(), pz.get_mpz_t());
    out[i] = r.get_ui();
  }
  normalize(out);
  return out;
}

void normalize(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly make_monic(const Poly& f, u64 p) {
  if (f.empty()) return f;
  Poly out = f;
  u64 ilc = inv(f.back(), p);
  for (auto& c : out) c = mul(c, ilc, p);
  return out;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = add(out[i + j], mul(a[i], b[j], p), p);
  }
  normalize(out);
  return out;
}

Poly rem(const Poly& a, const Poly& b, u64 p) {
  Poly r = a;
  normalize(r);
  if (b.empty()) throw error("modp division by zero");
  u64 ilc = inv(b.back(), p);
  while (degree(r) >= degree(b)) {
    u64 q = mul(r.back(), ilc, p);
    std::size_t shift = r.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j)
      r[shift + j] = sub(r[shift + j], mul(q, b[j], p), p);
    normalize(r);
  }
  return r;
}

Poly gcd(Poly a, Poly b, u64 p) {
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : make_monic(a, p);
}

Poly derivative(const Poly& f, u64 p) {
  if (f.size() <= 1) return {};
  Poly out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = mul(f[i], i % p, p);
  normalize(out);
  return out;
}

Poly powmod(const Poly& a, const Int& e, const Poly& f, u64 p) {
  Poly base = rem(a, f, p);
  Poly result{1};
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i))
      result = rem(mul(result, base, p), f, p);
  }
  return result;
}

namespace {

// Equal-degree splitting (Cantor-Zassenhaus) of a monic squarefree product
// of irreducibles all of degree d.
void equal_degree_split(const Poly& f, int d, u64 p, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
  if (degree(f) == d) {
    out.push_back(f);
    return;
  }
  Int pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(d));
  Int e = (pd - 1) / 2;
  for (;;) {
    Poly a(static_cast<std::size_t>(degree(f)), 0);
    for (auto& c : a) c = rng() % p;
    normalize(a);
    if (degree(a) < 1) continue;
    Poly g = gcd(f, a, p);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      equal_degree_split(g, d, p, rng, out);
      Poly h = f, q;
      // f / g by repeated subtraction via division
      // (compute quotient through rem-free long division)
      {
        Poly r = f;
        u64 ilc = inv(g.back(), p);
        q.assign(r.size() - g.size() + 1, 0);
        while (degree(r) >= degree(g)) {
          u64 c = mul(r.back(), ilc, p);
          std::size_t shift = r.size() - g.size();
          q[shift] = c;
          for (std::size_t j = 0; j < g.size(); ++j)
            r[shift + j] = sub(r[shift + j], mul(c, g[j], p), p);
          normalize(r);
        }
        normalize(q);
      }
      equal_degree_split(q, d, p, rng, out);
      return;
    }
    Poly b = powmod(a, e, f, p);
    if (b.empty()) continue;
    b[0] = sub(b[0], 1, p);
    normalize(b);
    g = gcd(f, b, p);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      equal_degree_split(g, d, p, rng, out);
      // cofactor
      Poly r = f, q2;
      u64 ilc = inv(g.back(), p);
      q2.assign(r.size() - g.size() + 1, 0);
      while (degree(r) >= degree(g)) {
        u64 c = mul(r.back(), ilc, p);
        std::size_t shift = r.size() - g.size();
        q2[shift] = c;
        for (std::size_t j = 0; j < g.size(); ++j)
          r[shift + j] = sub(r[shift + j], mul(c, g[j], p), p);
        normalize(r);
      }
      normalize(q2);
      equal_degree_split(q2, d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& fin, u64 p) {
  Poly f = make_monic(fin, p);
  std::vector<Poly> out;
  if (degree(f) < 1) return out;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ p ^ (static_cast<u64>(degree(f)) << 32));
  // Distinct-degree stage: h = t^(p^d) mod f.
  Poly t{0, 1};
  Poly h = powmod(t, Int(static_cast<unsigned long>(p)), f, p);
  int d = 1;
  while (degree(f) >= 2 * d) {
    Poly hminus = h;
    if (hminus.size() < 2) hminus.resize(2, 0);
    hminus[1] = sub(hminus[1], 1, p);
    normalize(hminus);
    Poly g = gcd(f, hminus, p);
    if (degree(g) > 0) {
      equal_degree_split(g, d, p, rng, out);
      // f /= g
      Poly r = f, q;
      u64 ilc = inv(g.back(), p);
      q.assign(r.size() - g.size() + 1, 0);
      while (degree(r) >= degree(g)) {
        u64 c = mul(r.back(), ilc, p);
        std::size_t shift = r.size() - g.size();
        q[shift] = c;
        for (std::size_t j = 0; j < g.size(); ++j)
          r[shift + j] = sub(r[shift + j], mul(c, g[j], p), p);
        normalize(r);
      }
      normalize(q);
      f = q;
      h = rem(h, f, p);
    }
    ++d;
    if (degree(f) < 2 * d && degree(f) > 0) break;
    h = powmod(h, Int(static_cast<unsigned long>(p)), f, p);
  }
  if (degree(f) > 0) out.push_back(f);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace heights::modp
