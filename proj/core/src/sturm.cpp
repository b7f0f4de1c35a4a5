#include "heights/sturm.hpp"

#include <algorithm>

namespace heights {

namespace {

// Pseudo-remainder with multiplier lc(den)^(deg num - deg den + 1).
IntPoly prem(const IntPoly& num, const IntPoly& den) {
  IntPoly r = num;
  Int d = den.leading();
  int e = num.degree() - den.degree() + 1;
  while (!r.is_zero() && r.degree() >= den.degree()) {
    IntPoly shifted =
        mul(IntPoly::monomial(r.leading(), r.degree() - den.degree()), den);
    r = sub(mul_scalar(r, d), shifted);
    --e;
  }
  if (e > 0) {
    Int scale;
    mpz_pow_ui(scale.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(e));
    r = mul_scalar(r, scale);
  }
  return r;
}

int sign_at_minus_inf(const IntPoly& p) {
  int s = sgn(p.leading());
  return p.degree() % 2 ? -s : s;
}

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

SturmChain::SturmChain(const IntPoly& p) : SturmChain(p, derivative(p)) {}

SturmChain::SturmChain(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero()) throw error("Sturm chain of the zero polynomial");
  IntPoly a = primitive_part(p);
  chain_.push_back(a);
  if (a.degree() < 1 || q.is_zero()) return;
  IntPoly b = primitive_part(q);
  chain_.push_back(b);
  while (chain_.back().degree() > 0) {
    const IntPoly& prev = chain_[chain_.size() - 2];
    const IntPoly& cur = chain_.back();
    IntPoly r = prem(prev, cur);
    if (r.is_zero()) break;
    // The multiplier lc(cur)^delta must act as a positive factor.
    int delta = prev.degree() - cur.degree() + 1;
    if (sgn(cur.leading()) < 0 && delta % 2) r = neg(r);
    chain_.push_back(primitive_part(neg(r)));
  }
  // Non-squarefree input: the chain ends at a nonconstant gcd(p, p').
  // Divide it out so the variation counts stay correct at multiple roots.
  if (chain_.back().degree() > 0) {
    IntPoly g = chain_.back();
    if (sgn(g.leading()) < 0) g = neg(g);
    for (auto& f : chain_) {
      auto q = divide_exact(f, g);
      if (!q) throw error("Sturm chain: gcd division failed");
      f = primitive_part(*q);
    }
  }
}

int SturmChain::variations_at(const Rat& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& f : chain_) signs.push_back(sign_at(f, x));
  return count_variations(signs);
}

int SturmChain::variations_at_minus_inf() const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& f : chain_) signs.push_back(sign_at_minus_inf(f));
  return count_variations(signs);
}

int SturmChain::variations_at_plus_inf() const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& f : chain_) signs.push_back(sgn(f.leading()));
  return count_variations(signs);
}

int SturmChain::count_roots(const Rat& a, const Rat& b) const {
  if (a > b) throw error("count_roots: empty interval");
  return variations_at(a) - variations_at(b);
}

int SturmChain::count_real_roots() const {
  return variations_at_minus_inf() - variations_at_plus_inf();
}

Rat root_bound(const IntPoly& p) {
  if (p.is_zero() || p.degree() < 1)
    throw error("root bound requires degree >= 1");
  Int m(0);
  for (int i = 0; i < p.degree(); ++i) {
    Int a = abs(p.coeff(static_cast<std::size_t>(i)));
    if (a > m) m = a;
  }
  Rat b(m, abs(p.leading()));
  b.canonicalize();
  return b + 1;
}

std::vector<IsolatingInterval> isolate_real_roots(const IntPoly& p) {
  std::vector<IsolatingInterval> out;
  if (p.is_zero()) throw error("cannot isolate roots of the zero polynomial");
  if (p.degree() < 1) return out;
  SturmChain chain(p);
  Rat bound = root_bound(p);
  struct Task {
    Rat lo, hi;
    int nroots;
  };
  int total = chain.count_roots(-bound, bound);
  if (total == 0) return out;
  std::vector<Task> stack{{-bound, bound, total}};
  while (!stack.empty()) {
    Task t = stack.back();
    stack.pop_back();
    if (t.nroots == 1) {
      out.push_back({t.lo, t.hi});
      continue;
    }
    Rat mid = (t.lo + t.hi) / 2;
    int left = chain.count_roots(t.lo, mid);
    // Push right first so the stack yields ascending intervals.
    if (t.nroots - left > 0) stack.push_back({mid, t.hi, t.nroots - left});
    if (left > 0) stack.push_back({t.lo, mid, left});
  }
  std::sort(out.begin(), out.end(),
            [](const IsolatingInterval& a, const IsolatingInterval& b) {
              return a.lo < b.lo;
            });
  return out;
}

IsolatingInterval refine_interval(const IntPoly& p, const SturmChain& chain,
                                  IsolatingInterval iv, const Rat& width) {
  (void)p;
  while (iv.hi - iv.lo > width) {
    Rat mid = (iv.lo + iv.hi) / 2;
    if (chain.count_roots(iv.lo, mid) == 1)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
  return iv;
}

}  // namespace heights
