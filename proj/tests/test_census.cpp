#include <doctest.h>

#include <map>

#include "heights/census.hpp"
#include "heights/factor.hpp"
#include "heights/io.hpp"
#include "heights/mahler.hpp"
#include "heights/rootloc.hpp"

using namespace heights;

TEST_SUITE("census") {

TEST_CASE("degree-1 closed form") {
  // H(p/q) = max(|p|, |q|) for p/q in lowest terms; k = 1 iff |p/q| < 1.
  const long N = 4;
  for (unsigned k : {0u, 1u}) {
    auto records = census_A(k, 1, Rat(N));
    std::map<long, unsigned long> brute;  // H -> count
    for (long q = 1; q <= N; ++q)
      for (long p = -N; p <= N; ++p) {
        Int g = gcd(Int(p), Int(q));
        if (g != 1) continue;
        long h = std::max(std::abs(p), q);
        if (h > N) continue;
        bool inside = std::abs(p) < q;
        if ((k == 1) == inside) brute[h] += 1;
      }
    unsigned long total = 0;
    for (const auto& r : records) {
      REQUIRE(r.key.is_rational());
      long h = r.key.rational_value().get_num().get_si();
      CHECK(brute.at(h) == r.count);
      total += r.count;
      CHECK(r.d == 1);
      CHECK(r.k == k);
    }
    unsigned long btotal = 0;
    for (auto& [h, c] : brute) btotal += c;
    CHECK(total == btotal);
  }
}

TEST_CASE("degree-2 census against independent enumeration") {
  const Rat Mmax(25, 4);  // Hmax = 5/2, so Mmax = Hmax^2 exactly
  for (unsigned k : {0u, 1u, 2u}) {
    auto records = census_A(k, 2, Rat(5, 2));
    // brute force over the same box with independent logic
    std::map<std::string, unsigned long> brute;
    for (long a = 1; a <= 6; ++a)
      for (long b = -13; b <= 13; ++b)
        for (long c = -6; c <= 6; ++c) {
          IntPoly p{c, b, a};
          if (p.degree() != 2) continue;
          if (content(p) != 1) continue;
          if (!is_irreducible_over_Z(p)) continue;
          if (static_cast<unsigned>(count_unit_disk(p).inside) != k) continue;
          RealAlgebraic m = mahler_exact(p);
          if (compare_to_rational(m, Mmax) > 0) continue;
          brute[nth_root_positive(m, 2).canonical_key()] += 2;
        }
    unsigned long total = 0, btotal = 0;
    for (const auto& r : records) {
      CHECK(brute.at(r.key.canonical_key()) == r.count);
      total += r.count;
    }
    for (auto& [key, c] : brute) btotal += c;
    CHECK(total == btotal);
    // keys sorted strictly ascending
    for (std::size_t i = 1; i < records.size(); ++i)
      CHECK(compare(records[i - 1].key, records[i].key) < 0);
  }
}

TEST_CASE("hmax below sqrt of box edge cases") {
  // Hmax < 1 is rejected (heights are always >= 1)
  CHECK_THROWS_AS(census_A(0, 2, Rat(9, 10)), heights::error);
  // Hmax = 1 yields exactly the cyclotomic degree-2 numbers for k = 0
  auto recs = census_A(0, 2, Rat(1));
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].key == RealAlgebraic::from_int(Int(1)));
  CHECK(recs[0].count == 6);  // Phi_3, Phi_4, Phi_6, two roots each
  CHECK(census_A(2, 2, Rat(1)).empty());
}

TEST_CASE("census_B is the distinct key set") {
  auto [keys, total] = census_B(0, 2, Rat(2));
  auto recs = census_A(0, 2, Rat(2));
  REQUIRE(keys.size() == recs.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    CHECK(keys[i] == recs[i].key);
  CHECK(total == keys.size());
}

TEST_CASE("mahler census small exact values") {
  // degree 1, all polynomials a t + b with a >= 1: M = max(a, |b|)
  auto recs = census_mahler(0, 1, Rat(3));
  std::map<long, unsigned long> got;
  unsigned long total = 0;
  for (const auto& r : recs) {
    REQUIRE(r.key.is_rational());
    got[r.key.rational_value().get_num().get_si()] += r.count;
    total += r.count;
  }
  std::map<long, unsigned long> brute;
  for (long a = 1; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      long m = std::max(a, std::abs(b));
      bool root_inside = std::abs(b) < a;  // root -b/a
      if (root_inside) continue;           // k = 0 wanted
      if (m <= 3) brute[m] += 1;
    }
  CHECK(got == brute);
  CHECK(total > 0);
}

TEST_CASE("enumerate_bounded filter") {
  int n = 0;
  enumerate_bounded(2, Rat(3), /*primitive_only=*/true, [&](const IntPoly& p) {
    CHECK(p.degree() == 2);
    CHECK(p.leading() > 0);
    CHECK(content(p) == 1);
    CHECK(compare_to_rational(mahler_exact(p), Rat(3)) <= 0);
    ++n;
  });
  CHECK(n > 0);
  int n_all = 0;
  enumerate_bounded(2, Rat(3), false, [&](const IntPoly&) { ++n_all; });
  CHECK(n_all > n);
}

TEST_CASE("thread determinism") {
  auto a = census_to_csv(census_A(1, 2, Rat(4), 1));
  auto b = census_to_csv(census_A(1, 2, Rat(4), 4));
  auto c = census_to_csv(census_A(1, 2, Rat(4), 8));
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a.find("key_minpoly") == 0);
}

TEST_CASE("fit_slope recovers exact power laws") {
  std::vector<std::pair<double, unsigned long>> pts;
  for (double x : {2.0, 4.0, 8.0, 16.0})
    pts.push_back({x, static_cast<unsigned long>(x * x)});
  auto est = fit_slope(pts);
  CHECK(est.slope == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(est.residual == doctest::Approx(0.0).epsilon(1e-9));
  // slope of y = 5 x^3
  pts.clear();
  for (double x : {2.0, 3.0, 5.0, 9.0})
    pts.push_back({x, static_cast<unsigned long>(5 * x * x * x)});
  est = fit_slope(pts);
  CHECK(est.slope == doctest::Approx(3.0).epsilon(1e-2));
}

}  // TEST_SUITE
