#include "heights/intpoly.hpp"

#include <numeric>
#include <sstream>

namespace heights {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int c) {
  std::vector<Int> v;
  v.push_back(std::move(c));
  return IntPoly(std::move(v));
}

IntPoly IntPoly::monomial(Int c, std::size_t k) {
  std::vector<Int> v(k + 1, Int(0));
  v[k] = std::move(c);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::from_string(const std::string& s) {
  std::vector<Int> v;
  if (s.find_first_not_of(" \t") == std::string::npos)
    throw error("bad polynomial literal: " + s);
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    // strip spaces
    auto b = tok.find_first_not_of(" \t");
    auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw error("bad polynomial literal: " + s);
    tok = tok.substr(b, e - b + 1);
    Int c;
    if (mpz_set_str(c.get_mpz_t(), tok.c_str(), 10) != 0)
      throw error("bad polynomial coefficient: " + tok);
    v.push_back(std::move(c));
  }
  return IntPoly(std::move(v));
}

const Int& IntPoly::coeff(std::size_t i) const {
  static const Int kZero(0);
  return i < c_.size() ? c_[i] : kZero;
}

const Int& IntPoly::leading() const {
  if (c_.empty()) throw error("zero polynomial has no leading coefficient");
  return c_.back();
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ",";
    out += c_[i].get_str();
  }
  return out;
}

std::strong_ordering IntPoly::operator<=>(const IntPoly& other) const {
  if (degree() != other.degree())
    return degree() <=> other.degree();
  for (std::size_t i = c_.size(); i-- > 0;) {
    int c = cmp(c_[i], other.c_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

IntPoly add(const IntPoly& p, const IntPoly& q) {
  std::vector<Int> v(std::max(p.coeffs().size(), q.coeffs().size()), Int(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.coeff(i) + q.coeff(i);
  return IntPoly(std::move(v));
}

IntPoly sub(const IntPoly& p, const IntPoly& q) {
  std::vector<Int> v(std::max(p.coeffs().size(), q.coeffs().size()), Int(0));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.coeff(i) - q.coeff(i);
  return IntPoly(std::move(v));
}

IntPoly neg(const IntPoly& p) {
  std::vector<Int> v = p.coeffs();
  for (auto& c : v) c = -c;
  return IntPoly(std::move(v));
}

IntPoly mul(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return IntPoly();
  std::vector<Int> v(p.coeffs().size() + q.coeffs().size() - 1, Int(0));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    for (std::size_t j = 0; j < q.coeffs().size(); ++j)
      v[i + j] += p.coeffs()[i] * q.coeffs()[j];
  return IntPoly(std::move(v));
}

IntPoly mul_scalar(const IntPoly& p, const Int& c) {
  if (c == 0) return IntPoly();
  std::vector<Int> v = p.coeffs();
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

IntPoly derivative(const IntPoly& p) {
  if (p.degree() < 1) return IntPoly();
  std::vector<Int> v(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i)
    v[i - 1] = p.coeffs()[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(v));
}

IntPoly reverse(const IntPoly& p) {
  std::vector<Int> v(p.coeffs().rbegin(), p.coeffs().rend());
  return IntPoly(std::move(v));
}

IntPoly negate_variable(const IntPoly& p) {
  std::vector<Int> v = p.coeffs();
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return IntPoly(std::move(v));
}

IntPoly inflate(const IntPoly& p, unsigned long n) {
  if (n == 0) throw error("inflate exponent must be positive");
  if (p.is_zero() || n == 1) return p;
  std::vector<Int> v(static_cast<std::size_t>(p.degree()) * n + 1, Int(0));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) v[i * n] = p.coeffs()[i];
  return IntPoly(std::move(v));
}

unsigned long decimation_exponent(const IntPoly& p) {
  unsigned long g = 0;
  for (std::size_t i = 1; i < p.coeffs().size(); ++i)
    if (p.coeffs()[i] != 0) g = std::gcd(g, static_cast<unsigned long>(i));
  return g == 0 ? 1 : g;
}

IntPoly deflate(const IntPoly& p, unsigned long n) {
  if (n == 0) throw error("deflate exponent must be positive");
  if (n == 1) return p;
  std::vector<Int> v(static_cast<std::size_t>(p.degree()) / n + 1, Int(0));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i] == 0) continue;
    if (i % n != 0) throw error("deflate: exponent does not divide support");
    v[i / n] = p.coeffs()[i];
  }
  return IntPoly(std::move(v));
}

Rat eval_rational(const IntPoly& p, const Rat& x) {
  Rat acc(0);
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + p.coeffs()[i];
  return acc;
}

Int eval_int(const IntPoly& p, const Int& x) {
  Int acc(0);
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + p.coeffs()[i];
  return acc;
}

int sign_at(const IntPoly& p, const Rat& x) {
  // Horner on the numerator of p(n/d) * d^deg.
  const Int& n = x.get_num();
  const Int& d = x.get_den();
  Int acc(0);
  Int dpow(1);
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    acc = acc * n + p.coeffs()[i] * dpow;
    dpow *= d;
  }
  return sgn(acc);
}

Int content(const IntPoly& p) {
  if (p.is_zero()) throw error("zero polynomial has no content");
  Int g(0);
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& p) {
  Int g = content(p);
  if (g == 1) return p;
  std::vector<Int> v = p.coeffs();
  for (auto& c : v) c /= g;
  return IntPoly(std::move(v));
}

std::optional<IntPoly> divide_exact(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw error("division by zero polynomial");
  if (num.is_zero()) return IntPoly();
  if (num.degree() < den.degree()) return std::nullopt;
  std::vector<Rat> rem(num.coeffs().begin(), num.coeffs().end());
  std::vector<Rat> quot(num.coeffs().size() - den.coeffs().size() + 1, Rat(0));
  Rat lead(den.leading());
  for (std::size_t i = quot.size(); i-- > 0;) {
    Rat q = rem[i + den.degree()] / lead;
    quot[i] = q;
    if (q != 0)
      for (std::size_t j = 0; j < den.coeffs().size(); ++j)
        rem[i + j] -= q * den.coeffs()[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  std::vector<Int> out(quot.size());
  for (std::size_t i = 0; i < quot.size(); ++i) {
    if (quot[i].get_den() != 1) return std::nullopt;
    out[i] = quot[i].get_num();
  }
  return IntPoly(std::move(out));
}

namespace {

// Pseudo-remainder: lc(den)^(deg num - deg den + 1) * num = q*den + r.
IntPoly pseudo_rem(const IntPoly& num, const IntPoly& den) {
  IntPoly r = num;
  Int d = den.leading();
  int e = num.degree() - den.degree() + 1;
  while (!r.is_zero() && r.degree() >= den.degree()) {
    IntPoly shifted = mul(IntPoly::monomial(r.leading(), r.degree() - den.degree()), den);
    r = sub(mul_scalar(r, d), shifted);
    --e;
  }
  if (e > 0) {
    Int scale;
    mpz_pow_ui(scale.get_mpz_t(), d.get_mpz_t(), e);
    r = mul_scalar(r, scale);
  }
  return r;
}

Int pow_int(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

Int resultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) throw error("resultant of zero polynomial");
  if (p.degree() == 0 && q.degree() == 0) return Int(1);
  if (p.degree() == 0) return pow_int(p.coeffs()[0], q.degree());
  if (q.degree() == 0) return pow_int(q.coeffs()[0], p.degree());

  IntPoly A = p, B = q;
  Int ca = content(A), cb = content(B);
  A = primitive_part(A);
  B = primitive_part(B);
  int s = 1;
  Int t = pow_int(ca, B.degree()) * pow_int(cb, A.degree());
  if (A.degree() < B.degree()) {
    if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
    std::swap(A, B);
  }
  Int g(1), h(1);
  while (B.degree() > 0) {
    int delta = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
    IntPoly R = pseudo_rem(A, B);
    A = B;
    Int divisor = g * pow_int(h, delta);
    if (R.is_zero()) return Int(0);
    auto Bnew = divide_exact(R, IntPoly::constant(divisor));
    if (!Bnew) throw error("subresultant invariant violated");
    B = *Bnew;
    g = A.leading();
    if (delta > 0) {
      // h = g^delta / h^(delta-1), exact.
      Int numv = pow_int(g, delta);
      Int denv = pow_int(h, delta - 1);
      h = numv / denv;
    }
    if (B.is_zero()) return Int(0);
  }
  // deg B == 0, A.degree() >= 1.
  Int numv = pow_int(B.coeffs()[0], A.degree());
  Int denv = pow_int(h, A.degree() - 1);
  Int out = t * (numv / denv);
  return s > 0 ? out : Int(-out);
}

IntPoly gcd(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() && q.is_zero()) throw error("gcd of two zero polynomials");
  if (p.is_zero()) return mul_scalar(primitive_part(q), Int(sgn(q.leading())));
  if (q.is_zero()) return mul_scalar(primitive_part(p), Int(sgn(p.leading())));
  IntPoly A = primitive_part(p), B = primitive_part(q);
  if (A.degree() < B.degree()) std::swap(A, B);
  while (!B.is_zero() && B.degree() > 0) {
    IntPoly R = pseudo_rem(A, B);
    A = B;
    B = R.is_zero() ? IntPoly() : primitive_part(R);
  }
  if (!B.is_zero()) return IntPoly::constant(Int(1));  // coprime
  Int cg;
  mpz_gcd(cg.get_mpz_t(), content(p).get_mpz_t(), content(q).get_mpz_t());
  // gcd convention here: primitive in t, positive leading coefficient.
  IntPoly g = A;
  if (sgn(g.leading()) < 0) g = neg(g);
  (void)cg;
  return g;
}

}  // namespace heights
