#include "heights/rootloc.hpp"

#include "heights/factor.hpp"
#include "heights/sturm.hpp"

namespace heights {

IntPoly trace_polynomial(const IntPoly& p) {
  int n = p.degree();
  if (n < 0 || n % 2 != 0) throw error("trace polynomial needs even degree");
  if (reverse(p) != p) throw error("trace polynomial needs a palindromic input");
  int s = n / 2;
  // Chebyshev-like basis: z^j + z^-j = b_j(x) with x = z + 1/z,
  // b_0 = 2, b_1 = x, b_j = x*b_{j-1} - b_{j-2}.
  IntPoly h = mul_scalar(IntPoly::constant(p.coeff(static_cast<std::size_t>(s))),
                         Int(1));
  IntPoly bprev{2};
  IntPoly bcur{0, 1};
  const IntPoly x{0, 1};
  for (int j = 1; j <= s; ++j) {
    h = add(h, mul_scalar(bcur, p.coeff(static_cast<std::size_t>(s + j))));
    IntPoly bnext = sub(mul(x, bcur), bprev);
    bprev = std::move(bcur);
    bcur = std::move(bnext);
  }
  return h;
}

namespace {

// Roots of r strictly inside the unit disk, for squarefree r with no roots
// on the circle and r(0) != 0. Mobius map z = (w-1)/(w+1) sends the open
// disk to the open right half-plane; count right-half-plane roots of
// W(w) = (w+1)^m r((w-1)/(w+1)) through the Cauchy index of the real/
// imaginary split of W(iy).
int count_inside_circle_free(const IntPoly& r) {
  int m = r.degree();
  if (m == 0) return 0;
  // W = sum_j c_j (w-1)^j (w+1)^(m-j)
  IntPoly W;
  IntPoly wm1{-1, 1};
  IntPoly wp1{1, 1};
  std::vector<IntPoly> lows{IntPoly{1}};   // (w-1)^j
  std::vector<IntPoly> highs{IntPoly{1}};  // (w+1)^j
  for (int j = 1; j <= m; ++j) {
    lows.push_back(mul(lows.back(), wm1));
    highs.push_back(mul(highs.back(), wp1));
  }
  for (int j = 0; j <= m; ++j)
    W = add(W, mul_scalar(mul(lows[static_cast<std::size_t>(j)],
                              highs[static_cast<std::size_t>(m - j)]),
                          r.coeff(static_cast<std::size_t>(j))));
  if (W.degree() != m)
    throw error("half-plane transform degenerated (circle root present)");

  // W(iy) = P(y) + i Q(y): even coefficients with sign (-1)^(j/2) go to P,
  // odd ones with sign (-1)^((j-1)/2) to Q.
  std::vector<Int> pc(static_cast<std::size_t>(m) + 1, Int(0));
  std::vector<Int> qc(static_cast<std::size_t>(m) + 1, Int(0));
  for (int j = 0; j <= m; ++j) {
    const Int& c = W.coeff(static_cast<std::size_t>(j));
    if (j % 2 == 0)
      pc[static_cast<std::size_t>(j)] = (j / 2) % 2 ? -c : c;
    else
      qc[static_cast<std::size_t>(j)] = ((j - 1) / 2) % 2 ? -c : c;
  }
  IntPoly P(std::move(pc)), Q(std::move(qc));

  // p - q = Cauchy index over the whole line of -Q/P (m even) or P/Q (m odd),
  // where p/q are the numbers of left/right half-plane roots.
  SturmChain chain = m % 2 == 0 ? SturmChain(P, neg(Q)) : SturmChain(Q, P);
  int index = chain.variations_at_minus_inf() - chain.variations_at_plus_inf();
  int rhp = (m - index) / 2;
  if ((m - index) % 2 != 0 || rhp < 0 || rhp > m)
    throw error("half-plane count inconsistent (circle root present)");
  return rhp;
}

// Counts for a squarefree polynomial f with f(0) != 0, distinct roots only.
RootCount count_squarefree(const IntPoly& f) {
  RootCount rc;
  if (f.degree() < 1) return rc;
  IntPoly g = gcd(f, reverse(f));
  IntPoly r = *divide_exact(f, g);

  // Circle-free, reciprocal-pair-free cofactor.
  rc.inside += count_inside_circle_free(r);
  rc.outside += r.degree() - rc.inside;

  // Self-reciprocal part: circle roots plus reciprocal pairs.
  for (long s : {1L, -1L}) {
    if (g.degree() >= 1 && sign_at(g, Rat(s)) == 0) {
      g = *divide_exact(g, IntPoly{-s, 1});
      rc.on_circle += 1;
    }
  }
  if (g.degree() >= 1) {
    if (sgn(g.leading()) < 0) g = neg(g);
    IntPoly h = trace_polynomial(g);
    SturmChain chain(h);
    int pairs_on_circle = chain.count_roots(Rat(-2), Rat(2));
    int half = g.degree() / 2;
    rc.on_circle += 2 * pairs_on_circle;
    rc.inside += half - pairs_on_circle;
    rc.outside += half - pairs_on_circle;
  }
  return rc;
}

}  // namespace

RootCount count_unit_disk(const IntPoly& p) {
  if (p.is_zero()) throw error("root location of the zero polynomial");
  RootCount rc;
  IntPoly q = p;
  while (q.degree() >= 1 && q.coeff(0) == 0) {
    q = *divide_exact(q, IntPoly{0, 1});
    rc.inside += 1;  // root at 0
  }
  for (const auto& [f, mult] : squarefree_decomposition(q).factors) {
    RootCount part = count_squarefree(f);
    rc.inside += static_cast<int>(mult) * part.inside;
    rc.on_circle += static_cast<int>(mult) * part.on_circle;
    rc.outside += static_cast<int>(mult) * part.outside;
  }
  return rc;
}

std::pair<IntPoly, IntPoly> circle_root_factor(const IntPoly& p) {
  if (p.is_zero()) throw error("root location of the zero polynomial");
  IntPoly on{1};
  IntPoly rest{1};
  for (const auto& [f, mult] : factor_over_Z(p).factors) {
    RootCount rc = count_unit_disk(f);
    IntPoly* dst;
    if (rc.on_circle == f.degree())
      dst = &on;
    else if (rc.on_circle == 0)
      dst = &rest;
    else
      throw error(
          "no integer split: an irreducible factor has some but not all "
          "roots on the unit circle");
    for (unsigned i = 0; i < mult; ++i) *dst = mul(*dst, f);
  }
  return {on, rest};
}

}  // namespace heights
