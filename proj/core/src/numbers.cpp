#include "heights/numbers.hpp"

#include <cctype>

namespace heights {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw error("empty rational literal");
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw error("bad rational literal: " + s);
    r.canonicalize();
    return r;
  }
  std::string intpart = s.substr(0, dot);
  std::string fracpart = s.substr(dot + 1);
  bool negative = !intpart.empty() && intpart[0] == '-';
  if (negative) intpart = intpart.substr(1);
  if (intpart.empty()) intpart = "0";
  for (char ch : intpart + fracpart)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw error("bad rational literal: " + s);
  Int num(intpart + fracpart);
  Int den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, fracpart.size());
  Rat r(num, den);
  r.canonicalize();
  return negative ? Rat(-r) : r;
}

Int floor_rat(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Int ceil_rat(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int iroot_floor(const Int& n, unsigned long k) {
  if (n < 0) throw error("iroot_floor of negative number");
  Int r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

void perfect_power_decompose(const Int& n, Int& base, unsigned long& exp) {
  if (n < 2) throw error("perfect_power_decompose requires n >= 2");
  unsigned long maxexp = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long e = maxexp; e >= 2; --e) {
    Int r = iroot_floor(n, e);
    Int back;
    mpz_pow_ui(back.get_mpz_t(), r.get_mpz_t(), e);
    if (back == n) {
      base = r;
      exp = e;
      return;
    }
  }
  base = n;
  exp = 1;
}

Int next_prime(const Int& n) {
  Int p;
  mpz_nextprime(p.get_mpz_t(), n.get_mpz_t());
  return p;
}

std::string decimal_string(const Rat& x, int digits) {
  bool negative = x < 0;
  Rat a = negative ? Rat(-x) : x;
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Int scaled = floor_rat(Rat(a * scale));
  std::string all = scaled.get_str();
  if (static_cast<int>(all.size()) <= digits)
    all = std::string(digits + 1 - all.size(), '0') + all;
  std::string out = all.substr(0, all.size() - digits);
  if (digits > 0) out += "." + all.substr(all.size() - digits);
  return negative ? "-" + out : out;
}

}  // namespace heights
