#include <doctest.h>

#include <algorithm>
#include <random>

#include "heights/factor.hpp"

using namespace heights;

namespace {

// Brute-force irreducibility oracle for primitive polynomials of degree <= 4:
// rational-root screen plus exhaustive search for quadratic divisors with
// the divisor's outer coefficients dividing the corresponding coefficients
// of p and the middle coefficient within the Mignotte bound.
bool has_rational_root(const IntPoly& p) {
  Int a0 = p.constant_term(), ad = p.leading();
  if (a0 == 0) return true;
  for (Int r(1); r * r <= abs(a0) * abs(a0); ++r) {
    if (r > abs(a0)) break;
    if (!mpz_divisible_p(a0.get_mpz_t(), r.get_mpz_t())) continue;
    for (Int s(1); s <= abs(ad); ++s) {
      if (!mpz_divisible_p(ad.get_mpz_t(), s.get_mpz_t())) continue;
      for (int sg : {1, -1}) {
        Rat x(sg * r, s);
        x.canonicalize();
        if (sign_at(p, x) == 0) return true;
      }
    }
  }
  return false;
}

bool brute_irreducible_deg_le4(const IntPoly& p) {
  int d = p.degree();
  REQUIRE(d >= 1);
  REQUIRE(d <= 4);
  if (d == 1) return true;
  if (has_rational_root(p)) return false;
  if (d <= 3) return true;  // cubic with no rational root is irreducible
  // quartic: search for a quadratic divisor b2 t^2 + b1 t + b0.
  Int norm2(0);
  for (const Int& c : p.coeffs()) norm2 += c * c;
  Int mig = 4 * (iroot_floor(norm2, 2) + 1);  // 2^deg(factor) * |p|_2 slack
  Int a0 = abs(p.constant_term()), ad = abs(p.leading());
  for (Int b2(1); b2 <= ad; ++b2) {
    if (!mpz_divisible_p(ad.get_mpz_t(), b2.get_mpz_t())) continue;
    for (Int b0a(1); b0a <= a0; ++b0a) {
      if (!mpz_divisible_p(a0.get_mpz_t(), b0a.get_mpz_t())) continue;
      for (int sg : {1, -1}) {
        Int b0 = sg * b0a;
        for (Int b1 = -mig; b1 <= mig; ++b1) {
          IntPoly q(std::vector<Int>{b0, b1, b2});
          if (divide_exact(p, q).has_value()) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("factor") {

TEST_CASE("squarefree decomposition") {
  IntPoly p = mul(mul(mul(IntPoly{-1, 1}, IntPoly{-1, 1}), IntPoly{2, 1}),
                  mul(mul(IntPoly{2, 1}, IntPoly{2, 1}), IntPoly::constant(Int(2))));
  Factorization sq = squarefree_decomposition(p);
  CHECK(sq.content == 2);
  REQUIRE(sq.factors.size() == 2);
  CHECK(sq.product() == p);
  for (const auto& [f, m] : sq.factors) {
    CHECK((m == 2 || m == 3));
    if (m == 2) CHECK(f == IntPoly{-1, 1});
    if (m == 3) CHECK(f == IntPoly{2, 1});
  }
  // squarefree input comes back with multiplicity 1
  Factorization sq2 = squarefree_decomposition(IntPoly{-2, 0, 1});
  REQUIRE(sq2.factors.size() == 1);
  CHECK(sq2.factors[0].second == 1);
}

TEST_CASE("known complete factorizations") {
  // t^6 - 1 = (t-1)(t+1)(t^2+t+1)(t^2-t+1)
  IntPoly p{-1, 0, 0, 0, 0, 0, 1};
  Factorization f = factor_over_Z(p);
  CHECK(f.content == 1);
  CHECK(f.product() == p);
  REQUIRE(f.factors.size() == 4);
  std::vector<IntPoly> got;
  for (const auto& [q, m] : f.factors) {
    CHECK(m == 1);
    got.push_back(q);
  }
  std::sort(got.begin(), got.end());
  std::vector<IntPoly> want{IntPoly{-1, 1}, IntPoly{1, 1}, IntPoly{1, 1, 1},
                            IntPoly{1, -1, 1}};
  std::sort(want.begin(), want.end());
  CHECK(got == want);

  // t^4 - 4 = (t^2-2)(t^2+2)
  Factorization g = factor_over_Z(IntPoly{-4, 0, 0, 0, 1});
  CHECK(g.factors.size() == 2);
  CHECK(g.product() == IntPoly{-4, 0, 0, 0, 1});

  // 6t^2 - 5t + 1 = (2t-1)(3t-1)
  Factorization h = factor_over_Z(IntPoly{1, -5, 6});
  CHECK(h.factors.size() == 2);
  CHECK(h.product() == IntPoly{1, -5, 6});

  // content extraction: 12t^2 - 12
  Factorization c = factor_over_Z(IntPoly{-12, 0, 12});
  CHECK(c.content == 12);
  CHECK(c.factors.size() == 2);
  CHECK(c.product() == IntPoly{-12, 0, 12});

  // sign lives in the content
  Factorization n = factor_over_Z(IntPoly{2, -2});
  CHECK(n.content == -2);
  CHECK(n.product() == IntPoly{2, -2});
}

TEST_CASE("known irreducibles") {
  CHECK(is_irreducible_over_Z(IntPoly{-2, 0, 0, 0, 0, 1}));    // t^5 - 2
  CHECK(is_irreducible_over_Z(IntPoly{1, 0, -10, 0, 1}));      // sqrt2+sqrt3
  CHECK(is_irreducible_over_Z(IntPoly{-6, -4, -4, 3, 1}));
  CHECK(is_irreducible_over_Z(IntPoly{-1, -1, 1}));
  CHECK(is_irreducible_over_Z(IntPoly{1, 1, 1, 1, 1, 1, 1}));  // Phi_7
  CHECK(!is_irreducible_over_Z(IntPoly{-1, 0, 0, 0, 1}));
  // Swinnerton-Dyer style: irreducible over Z but reducible mod every prime.
  CHECK(is_irreducible_over_Z(IntPoly{1, 0, -10, 0, 1}));
  CHECK_THROWS_AS(is_irreducible_over_Z(IntPoly{2, 0, 2}), heights::error);
  CHECK_THROWS_AS(is_irreducible_over_Z(IntPoly{5}), heights::error);
}

TEST_CASE("factoring recovers planted products") {
  std::vector<IntPoly> pool{
      IntPoly{-2, 0, 0, 0, 0, 1}, IntPoly{1, 0, -10, 0, 1},
      IntPoly{-1, -1, 1},         IntPoly{1, 1, 1},
      IntPoly{1, -1, 1},          IntPoly{-1, 3},
      IntPoly{2, 0, 0, 5},        IntPoly{1, -3, 1},
  };
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<IntPoly> chosen;
    IntPoly prod = IntPoly::constant(Int(1));
    int nf = 2 + static_cast<int>(trial % 2);
    for (int i = 0; i < nf; ++i) {
      chosen.push_back(pool[pick(rng)]);
      prod = mul(prod, chosen.back());
    }
    Factorization f = factor_over_Z(prod);
    CHECK(f.product() == prod);
    std::vector<IntPoly> got;
    for (const auto& [q, m] : f.factors)
      for (unsigned i = 0; i < m; ++i) got.push_back(q);
    std::sort(got.begin(), got.end());
    std::sort(chosen.begin(), chosen.end());
    CHECK(got == chosen);
  }
}

TEST_CASE("random reassembly and factor primitivity") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> coeff(-30, 30);
  std::uniform_int_distribution<int> deg(1, 8);
  for (int trial = 0; trial < 150; ++trial) {
    int d = deg(rng);
    std::vector<Int> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = coeff(rng);
    IntPoly p(std::move(c));
    if (p.is_zero() || p.degree() < 1) continue;
    Factorization f = factor_over_Z(p);
    CHECK(f.product() == p);
    for (const auto& [q, m] : f.factors) {
      CHECK(m >= 1);
      CHECK(q.degree() >= 1);
      CHECK(q.leading() > 0);
      CHECK(content(q) == 1);
    }
  }
}

TEST_CASE("irreducibility matches brute-force oracle on random quartics") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coeff(-10, 10);
  int done = 0;
  while (done < 300) {
    std::vector<Int> c(5);
    for (auto& x : c) x = coeff(rng);
    IntPoly p(std::move(c));
    if (p.degree() != 4) continue;
    if (p.constant_term() == 0) continue;
    if (content(p) != 1) continue;
    CHECK(is_irreducible_over_Z(p) == brute_irreducible_deg_le4(p));
    ++done;
  }
}

}  // TEST_SUITE
