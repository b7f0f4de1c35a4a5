#include "heights/realalg.hpp"

#include <algorithm>

#include "heights/factor.hpp"
#include "heights/sturm.hpp"

namespace heights {

namespace {

Rat rat_pow(const Rat& x, unsigned long e) {
  Rat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(x.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(x.get_mpq_t()), e);
  return r;  // already canonical when x is
}

Int int_pow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// Distinct roots of the irreducible factor u in the closed interval [lo, hi].
// Rational endpoints are never roots when deg u >= 2.
int count_in(const IntPoly& u, const Rat& lo, const Rat& hi) {
  if (u.degree() == 1) {
    Rat r(-u.coeff(0), u.coeff(1));
    r.canonicalize();
    return (lo <= r && r <= hi) ? 1 : 0;
  }
  return SturmChain(u).count_roots(lo, hi);
}

}  // namespace

RealAlgebraic::RealAlgebraic() : minpoly_{0, 1}, lo_(0), hi_(0) {}

RealAlgebraic RealAlgebraic::from_rational(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  RealAlgebraic r;
  r.minpoly_ = IntPoly({Int(-c.get_num()), Int(c.get_den())});
  r.lo_ = r.hi_ = c;
  return r;
}

RealAlgebraic RealAlgebraic::from_int(const Int& x) {
  return from_rational(Rat(x));
}

RealAlgebraic RealAlgebraic::from_root_of(const IntPoly& p, const Rat& lo,
                                          const Rat& hi) {
  if (p.is_zero() || p.degree() < 1)
    throw error("from_root_of requires degree >= 1");
  const IntPoly* selected = nullptr;
  int total = 0;
  auto fac = factor_over_Z(p);
  for (const auto& [u, mult] : fac.factors) {
    int c = count_in(u, lo, hi);
    total += c;
    if (c > 0 && !selected) selected = &u;
  }
  if (total != 1) throw error("interval does not isolate one root");
  RealAlgebraic r;
  r.minpoly_ = *selected;
  if (r.minpoly_.degree() == 1) {
    Rat v(-r.minpoly_.coeff(0), r.minpoly_.coeff(1));
    v.canonicalize();
    r.lo_ = r.hi_ = v;
  } else {
    r.lo_ = lo;
    r.hi_ = hi;
    // Establish the (lo, hi] invariant: endpoints of a rational interval are
    // never roots of an irreducible polynomial of degree >= 2, so the closed
    // and half-open counts agree.
  }
  return r;
}

Rat RealAlgebraic::rational_value() const {
  if (degree() != 1) throw error("not a rational value");
  return lo_;
}

int RealAlgebraic::sign() const {
  if (degree() == 1) return sgn(lo_);
  for (;;) {
    if (lo_ >= 0) return 1;
    if (hi_ <= 0) return -1;
    refine((hi_ - lo_) / 2);
  }
}

std::pair<Rat, Rat> RealAlgebraic::refine(const Rat& eps) const {
  if (degree() == 1) return {lo_, hi_};
  int s_lo = sign_at(minpoly_, lo_);
  while (hi_ - lo_ > eps) {
    Rat mid = (lo_ + hi_) / 2;
    int s_mid = sign_at(minpoly_, mid);
    if (s_mid == 0) throw error("rational root of an irreducible minpoly");
    if (s_mid == s_lo)
      lo_ = mid;
    else
      hi_ = mid;
  }
  return {lo_, hi_};
}

int RealAlgebraic::root_index() const {
  if (degree() == 1) return 0;
  SturmChain chain(minpoly_);
  Rat b = root_bound(minpoly_);
  return chain.count_roots(-b, lo_);
}

std::string RealAlgebraic::canonical_key() const {
  return "minpoly=" + minpoly_.to_string() +
         ";root=" + std::to_string(root_index());
}

std::string RealAlgebraic::approx(int digits) const {
  if (degree() == 1) return decimal_string(rational_value(), digits);
  // Refine until both endpoints truncate identically: the result is the
  // truncation of the exact value, independent of prior refinement history.
  Rat eps(1);
  for (int i = 0; i < digits + 2; ++i) eps /= 10;
  for (;;) {
    refine(eps);
    std::string a = decimal_string(lo_, digits);
    std::string b = decimal_string(hi_, digits);
    if (a == b) return a;
    eps /= 16;
  }
}

int compare_to_rational(const RealAlgebraic& x, const Rat& r) {
  if (x.degree() == 1) {
    Rat v = x.rational_value();
    return v < r ? -1 : (v > r ? 1 : 0);
  }
  // r is never equal to an irrational value.
  for (;;) {
    if (r <= x.lo()) return 1;
    if (r >= x.hi()) return -1;
    int s_r = sign_at(x.minpoly(), r);
    if (s_r == 0) throw error("rational root of an irreducible minpoly");
    return s_r == sign_at(x.minpoly(), x.lo()) ? 1 : -1;
  }
}

int compare(const RealAlgebraic& x, const RealAlgebraic& y) {
  if (x.degree() == 1 && y.degree() == 1) {
    Rat a = x.rational_value(), b = y.rational_value();
    return a < b ? -1 : (a > b ? 1 : 0);
  }
  if (x.degree() == 1) return -compare_to_rational(y, x.rational_value());
  if (y.degree() == 1) return compare_to_rational(x, y.rational_value());
  if (x.minpoly_ == y.minpoly_) {
    int ix = x.root_index(), iy = y.root_index();
    if (ix == iy) return 0;
    return ix < iy ? -1 : 1;
  }
  // Distinct canonical minpolys: the values differ; separate by refinement.
  for (;;) {
    if (x.hi_ <= y.lo_) return -1;
    if (y.hi_ <= x.lo_) return 1;
    x.refine((x.hi_ - x.lo_) / 2);
    y.refine((y.hi_ - y.lo_) / 2);
  }
}

namespace {

std::vector<IntPoly> irreducible_parts(const IntPoly& p) {
  std::vector<IntPoly> out;
  for (const auto& [u, mult] : factor_over_Z(p).factors) out.push_back(u);
  return out;
}

int count_in_all(const std::vector<IntPoly>& factors, const Rat& lo,
                 const Rat& hi) {
  int total = 0;
  for (const auto& u : factors) total += count_in(u, lo, hi);
  return total;
}

RealAlgebraic select_unique(const std::vector<IntPoly>& factors, const Rat& lo,
                            const Rat& hi) {
  for (const auto& u : factors)
    if (count_in(u, lo, hi) == 1) {
      if (u.degree() == 1) {
        Rat v(-u.coeff(0), u.coeff(1));
        v.canonicalize();
        return RealAlgebraic::from_rational(v);
      }
      return RealAlgebraic::from_root_of(u, lo, hi);
    }
  throw error("no factor has a root in the interval");
}

Int interp_point(std::size_t idx) {
  if (idx == 0) return Int(0);
  Int k((idx + 1) / 2);
  return idx % 2 ? k : -k;
}

// Integer polynomial of degree `deg` through the points
// (interp_point(i), values[i]); throws if the interpolant is not integral.
IntPoly interpolate(const std::vector<Int>& values) {
  std::size_t n = values.size();
  // Newton divided differences over Q.
  std::vector<Rat> coef(n);
  for (std::size_t i = 0; i < n; ++i) coef[i] = Rat(values[i]);
  std::vector<Rat> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = Rat(interp_point(i));
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  // Expand the Newton form.
  std::vector<Rat> poly{coef[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // poly = poly*(t - xs[i]) + coef[i]
    poly.insert(poly.begin(), Rat(0));
    for (std::size_t j = 0; j + 1 < poly.size(); ++j)
      poly[j] -= xs[i] * poly[j + 1];
    poly[0] += coef[i];
  }
  std::vector<Int> out(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    poly[i].canonicalize();
    if (poly[i].get_den() != 1)
      throw error("interpolation produced a non-integer coefficient");
    out[i] = poly[i].get_num();
  }
  return IntPoly(std::move(out));
}

// Polynomial with roots {alpha_i * beta_j} for f(alpha_i) = g(beta_j) = 0,
// via Res_y(f(y), y^m g(t/y)) evaluated pointwise and interpolated.
// Requires g(0) != 0.
IntPoly product_poly(const IntPoly& f, const IntPoly& g) {
  int n = f.degree(), m = g.degree();
  std::size_t npoints = static_cast<std::size_t>(n) * m + 1;
  std::vector<Int> values(npoints);
  for (std::size_t idx = 0; idx < npoints; ++idx) {
    Int t0 = interp_point(idx);
    std::vector<Int> h(static_cast<std::size_t>(m) + 1, Int(0));
    Int tp(1);
    for (int i = 0; i <= m; ++i) {
      h[static_cast<std::size_t>(m - i)] =
          g.coeff(static_cast<std::size_t>(i)) * tp;
      tp *= t0;
    }
    values[idx] = resultant(f, IntPoly(h));
  }
  return interpolate(values);
}

// Polynomial with roots {alpha_i^e}, via Res_y(f(y), t - y^e) pointwise.
IntPoly power_poly(const IntPoly& f, unsigned long e) {
  std::size_t npoints = static_cast<std::size_t>(f.degree()) + 1;
  std::vector<Int> values(npoints);
  for (std::size_t idx = 0; idx < npoints; ++idx) {
    Int t0 = interp_point(idx);
    std::vector<Int> h(e + 1, Int(0));
    h[0] = t0;
    h[e] = -1;
    values[idx] = resultant(f, IntPoly(h));
  }
  return interpolate(values);
}

RealAlgebraic scale_by_rational(const Rat& c, const RealAlgebraic& y) {
  // minpoly of c*beta from g: sum g_i q^i p^(m-i) t^i for c = p/q.
  const IntPoly& g = y.minpoly();
  int m = g.degree();
  const Int& p = c.get_num();
  const Int& q = c.get_den();
  std::vector<Int> v(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i)
    v[static_cast<std::size_t>(i)] = g.coeff(static_cast<std::size_t>(i)) *
                                     int_pow(q, static_cast<unsigned long>(i)) *
                                     int_pow(p, static_cast<unsigned long>(m - i));
  IntPoly G = primitive_part(IntPoly(std::move(v)));
  if (sgn(G.leading()) < 0) G = neg(G);
  Rat a = c * y.lo(), b = c * y.hi();
  if (a > b) std::swap(a, b);
  return RealAlgebraic::from_root_of(G, a, b);
}

}  // namespace

RealAlgebraic mul(const RealAlgebraic& x, const RealAlgebraic& y) {
  bool xr = x.is_rational(), yr = y.is_rational();
  if (xr && x.rational_value() == 0) return RealAlgebraic();
  if (yr && y.rational_value() == 0) return RealAlgebraic();
  if (xr && yr)
    return RealAlgebraic::from_rational(x.rational_value() * y.rational_value());
  if (xr) return scale_by_rational(x.rational_value(), y);
  if (yr) return scale_by_rational(y.rational_value(), x);

  IntPoly P = product_poly(x.minpoly(), y.minpoly());
  std::vector<IntPoly> factors = irreducible_parts(P);
  Rat eps(1, 16);
  for (int round = 0; round < 256; ++round) {
    auto [a1, b1] = x.refine(eps);
    auto [a2, b2] = y.refine(eps);
    Rat lo = a1 * a2, hi = lo;
    for (const Rat& v : {a1 * b2, b1 * a2, b1 * b2}) {
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
    if (count_in_all(factors, lo, hi) == 1) return select_unique(factors, lo, hi);
    eps /= 2;
  }
  throw error("product root selection did not converge");
}

RealAlgebraic abs(const RealAlgebraic& x) {
  if (x.sign() >= 0) return x;
  if (x.is_rational()) return RealAlgebraic::from_rational(-x.rational_value());
  IntPoly G = negate_variable(x.minpoly());
  if (sgn(G.leading()) < 0) G = neg(G);
  return RealAlgebraic::from_root_of(G, -x.hi(), -x.lo());
}

namespace {

RealAlgebraic invert(const RealAlgebraic& x) {
  int s = x.sign();
  if (s == 0) throw error("division by zero");
  if (x.is_rational())
    return RealAlgebraic::from_rational(Rat(1) / x.rational_value());
  IntPoly G = reverse(x.minpoly());
  if (sgn(G.leading()) < 0) G = neg(G);
  // Shrink until the interval is sign-definite, then invert endpoints.
  while (!(s > 0 ? x.lo() > 0 : x.hi() < 0)) x.refine((x.hi() - x.lo()) / 2);
  return RealAlgebraic::from_root_of(G, Rat(1) / x.hi(), Rat(1) / x.lo());
}

}  // namespace

RealAlgebraic pow_int(const RealAlgebraic& x, long n) {
  if (n == 0) return RealAlgebraic::from_rational(Rat(1));
  if (n < 0) return pow_int(invert(x), -n);
  auto e = static_cast<unsigned long>(n);
  if (x.is_rational())
    return RealAlgebraic::from_rational(rat_pow(x.rational_value(), e));
  RealAlgebraic base = (e % 2 == 0 && x.sign() < 0) ? abs(x) : x;
  if (base.sign() > 0)
    while (base.lo() <= 0) base.refine((base.hi() - base.lo()) / 2);
  IntPoly P = power_poly(base.minpoly(), e);
  std::vector<IntPoly> factors = irreducible_parts(P);
  Rat eps = (base.hi() - base.lo()) / 2;
  for (int round = 0; round < 256; ++round) {
    auto [a, b] = base.refine(eps);
    Rat lo = rat_pow(a, e), hi = rat_pow(b, e);
    if (lo > hi) std::swap(lo, hi);
    if (count_in_all(factors, lo, hi) == 1) return select_unique(factors, lo, hi);
    eps /= 2;
  }
  throw error("power root selection did not converge");
}

RealAlgebraic nth_root_positive(const RealAlgebraic& x, unsigned long n) {
  if (n == 0) throw error("zeroth root");
  int s = x.sign();
  if (s < 0) throw error("nth_root_positive of a negative value");
  if (s == 0) return RealAlgebraic();
  if (n == 1) return x;

  IntPoly F;
  if (x.is_rational()) {
    Rat v = x.rational_value();
    Int a = iroot_floor(v.get_num(), n);
    Int b = iroot_floor(v.get_den(), n);
    if (int_pow(a, n) == v.get_num() && int_pow(b, n) == v.get_den())
      return RealAlgebraic::from_rational(Rat(a, b));
    F = IntPoly(
        [&] {
          std::vector<Int> c(n + 1, Int(0));
          c[0] = -v.get_num();
          c[n] = v.get_den();
          return c;
        }());
  } else {
    F = inflate(x.minpoly(), n);
  }
  std::vector<IntPoly> factors = irreducible_parts(F);
  Rat A(0);
  Rat B = std::max(x.hi(), Rat(1));
  for (int round = 0; round < 512; ++round) {
    if (count_in_all(factors, A, B) == 1) return select_unique(factors, A, B);
    Rat mid = (A + B) / 2;
    int c = compare_to_rational(x, rat_pow(mid, n));
    if (c == 0) return RealAlgebraic::from_rational(mid);
    if (c > 0)
      A = mid;
    else
      B = mid;
  }
  throw error("nth-root selection did not converge");
}

std::optional<std::pair<Int, Rat>> is_natural_power(const RealAlgebraic& x) {
  if (x.sign() <= 0) throw error("is_natural_power requires a positive value");
  if (x.is_rational()) {
    Rat v = x.rational_value();
    if (v.get_den() != 1 || v < 1) return std::nullopt;
    Int n = v.get_num();
    if (n == 1) return std::make_pair(Int(1), Rat(1));
    Int base;
    unsigned long exp;
    perfect_power_decompose(n, base, exp);
    return std::make_pair(base, Rat(static_cast<unsigned long>(exp)));
  }
  int d = x.degree();
  while (x.lo() <= 0) x.refine((x.hi() - x.lo()) / 2);
  for (int e = 1; e <= d; ++e) {
    auto ue = static_cast<unsigned long>(e);
    // x^e is a natural N iff minpoly(x) divides t^e - N; narrow the
    // candidate N by interval arithmetic first.
    while (rat_pow(x.hi(), ue) - rat_pow(x.lo(), ue) >= Rat(1, 2))
      x.refine((x.hi() - x.lo()) / 2);
    Rat plo = rat_pow(x.lo(), ue), phi = rat_pow(x.hi(), ue);
    Int N = ceil_rat(plo);
    if (Rat(N) > phi || N < 1) continue;
    IntPoly T = sub(IntPoly::monomial(Int(1), ue), IntPoly::constant(N));
    if (!divide_exact(T, x.minpoly())) continue;
    Int base;
    unsigned long exp;
    if (N == 1) return std::make_pair(Int(1), Rat(1));
    perfect_power_decompose(N, base, exp);
    Rat b(static_cast<unsigned long>(exp), ue);
    b.canonicalize();
    return std::make_pair(base, b);
  }
  return std::nullopt;
}

}  // namespace heights
