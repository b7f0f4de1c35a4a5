// End-to-end acceptance checks. Each criterion prints exactly one PASS/FAIL
// line; the exit status is the number of failed criteria.

#include <mpfr.h>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <vector>

#include "heights/census.hpp"
#include "heights/constructions.hpp"
#include "heights/factor.hpp"
#include "heights/heightdyn.hpp"
#include "heights/io.hpp"
#include "heights/mahler.hpp"
#include "heights/numroots.hpp"
#include "heights/rootloc.hpp"

using namespace heights;

namespace {

int failures = 0;

void report(int idx, const char* what, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion-" << idx << ": " << what;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++failures;
}

bool keys_are_roots_of_naturals(const std::vector<RealAlgebraic>& keys,
                                unsigned d, long lo, long hi) {
  if (keys.size() != static_cast<std::size_t>(hi - lo + 1)) return false;
  for (long n = lo; n <= hi; ++n) {
    RealAlgebraic want =
        nth_root_positive(RealAlgebraic::from_int(Int(n)), d);
    if (!(keys[static_cast<std::size_t>(n - lo)] == want)) return false;
  }
  return true;
}

// --- criterion 1: exact B-set identities ----------------------------------

void criterion1() {
  bool ok = true;
  std::string detail;
  // Hmax^2 in [10, 11): the attained squared heights for k=0, d=2 are the
  // naturals, so any such Hmax captures exactly {sqrt(n): 1 <= n <= 10}.
  auto [b02, n02] = census_B(0, 2, rat_from_string("3.163"));
  if (!keys_are_roots_of_naturals(b02, 2, 1, 10)) {
    ok = false;
    detail += "B(0,2,sqrt10) mismatch; ";
  }
  auto [b03, n03] = census_B(0, 3, Rat(2));
  if (!keys_are_roots_of_naturals(b03, 3, 2, 8)) {
    ok = false;
    detail += "B(0,3,2) mismatch; ";
  }
  auto [b33, n33] = census_B(3, 3, Rat(2));
  if (!keys_are_roots_of_naturals(b33, 3, 2, 8)) {
    ok = false;
    detail += "B(3,3,2) mismatch; ";
  }
  report(1, "exact height-value sets B(0,2,sqrt(10)), B(0,3,2), B(3,3,2)", ok,
         ok ? "10+7+7 values" : detail);
}

// --- criterion 2: root location vs certified numeric oracle ---------------

IntPoly cyclotomic(unsigned n, std::vector<IntPoly>& cache) {
  if (cache.size() > n && !cache[n].is_zero()) return cache[n];
  if (cache.size() <= n) cache.resize(n + 1);
  std::vector<Int> c(n + 1);
  c[0] = -1;
  c[n] = 1;
  IntPoly rem(std::move(c));
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) rem = *divide_exact(rem, cyclotomic(d, cache));
  cache[n] = rem;
  return rem;
}

void criterion2() {
  std::mt19937_64 rng(0xacce55);
  std::uniform_int_distribution<int> coeff(-20, 20);
  std::uniform_int_distribution<int> deg(1, 6);
  long done = 0, agreed = 0;
  while (done < 10000) {
    int d = deg(rng);
    std::vector<Int> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = coeff(rng);
    IntPoly p(std::move(c));
    if (p.is_zero() || p.degree() < 1) continue;
    RootCount exact = count_unit_disk(p);
    auto roots = approximate_roots(p, 192);
    if (!disks_pairwise_disjoint(roots)) continue;
    int in = 0, out = 0, unc = 0;
    for (const auto& rt : roots) {
      mpf_class r = sqrt(rt.re * rt.re + rt.im * rt.im);
      if (r + rt.radius < 1)
        ++in;
      else if (r - rt.radius > 1)
        ++out;
      else
        ++unc;
    }
    ++done;
    bool good = in <= exact.inside && out <= exact.outside &&
                exact.inside <= in + unc && exact.outside <= out + unc &&
                in + out + unc ==
                    exact.inside + exact.on_circle + exact.outside;
    if (good) ++agreed;
  }

  std::vector<IntPoly> cache;
  std::uniform_int_distribution<unsigned> pick(1, 20);
  std::uniform_int_distribution<int> small(-5, 5);
  long planted_ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    IntPoly prod = IntPoly::constant(Int(1));
    int planted = 0;
    for (int i = 0; i < 1 + trial % 3; ++i) {
      IntPoly f = cyclotomic(pick(rng), cache);
      prod = mul(prod, f);
      planted += f.degree();
    }
    // optionally mix in an off-circle factor
    if (trial % 2) {
      std::vector<Int> c{small(rng), 1, small(rng), 1};
      IntPoly extra{std::move(c)};
      if (count_unit_disk(extra).on_circle == 0) prod = mul(prod, extra);
    }
    if (count_unit_disk(prod).on_circle == planted) ++planted_ok;
  }
  bool ok = agreed == done && planted_ok == 100;
  report(2, "unit-disk root counts vs certified numeric oracle", ok,
         std::to_string(agreed) + "/" + std::to_string(done) + " random, " +
             std::to_string(planted_ok) + "/100 cyclotomic");
}

// --- criterion 3: Mahler multiplicativity ---------------------------------

void criterion3() {
  std::mt19937_64 rng(0x3a41e5);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> deg(1, 3);
  long done = 0, good = 0;
  while (done < 1000) {
    auto draw = [&]() {
      int d = deg(rng);
      std::vector<Int> c(static_cast<std::size_t>(d) + 1);
      for (auto& x : c) x = coeff(rng);
      return IntPoly(std::move(c));
    };
    IntPoly p = draw(), q = draw();
    if (p.is_zero() || q.is_zero()) continue;
    ++done;
    if (mahler_exact(mul(p, q)) == mul(mahler_exact(p), mahler_exact(q)))
      ++good;
  }
  report(3, "M(AB) = M(A)M(B) on 1000 random pairs", good == done,
         std::to_string(good) + "/" + std::to_string(done));
}

// --- criterion 4: growth slopes -------------------------------------------

void criterion4() {
  // (a) |B(0,2,Hmax)| at Hmax ~ sqrt(20), sqrt(40), sqrt(80)
  std::vector<std::pair<double, unsigned long>> pa;
  for (const char* h : {"4.48", "6.33", "8.95"}) {
    auto [keys, total] = census_B(0, 2, rat_from_string(h));
    pa.push_back({std::stod(h), keys.size()});
  }
  double slope_a = fit_slope(pa).slope;
  bool ok_a = slope_a >= 1.8 && slope_a <= 2.2;

  // (b) cumulative |A(1,2,T)| for T = 2..6
  auto recs = census_A(1, 2, Rat(6));
  std::vector<std::pair<double, unsigned long>> pb;
  for (long T = 2; T <= 6; ++T) {
    unsigned long cum = 0;
    for (const auto& r : recs)
      if (compare_to_rational(r.key, Rat(T)) <= 0) cum += r.count;
    pb.push_back({static_cast<double>(T), cum});
  }
  double slope_b = fit_slope(pb).slope;
  bool ok_b = slope_b >= 5.0 && slope_b <= 7.0;

  // (c) |B~(1,2,M)| for M = 5, 10, 20, 30
  auto mrecs = census_mahler(1, 2, Rat(30));
  std::vector<std::pair<double, unsigned long>> pc;
  for (long M : {5, 10, 20, 30}) {
    unsigned long distinct = 0;
    for (const auto& r : mrecs)
      if (compare_to_rational(r.key, Rat(M)) <= 0) ++distinct;
    pc.push_back({static_cast<double>(M), distinct});
  }
  double slope_c = fit_slope(pc).slope;
  bool ok_c = slope_c >= 2.3 && slope_c <= 3.7;

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "a=%.3f (want 2), b=%.3f (want 6), c=%.3f (want 3)", slope_a,
                slope_b, slope_c);
  report(4, "growth-order slopes", ok_a && ok_b && ok_c, buf);
}

// --- criterion 5: quartic family ------------------------------------------

void criterion5() {
  QuarticFamily fam = quartic_family(2);
  RealAlgebraic beta = RealAlgebraic::from_root_of(IntPoly{1, -34, 1},
                                                   Rat(33), Rat(34));
  RealAlgebraic want_h = nth_root_positive(beta, 4);
  int irreducible = 0, with_k2 = 0, same_height = 0;
  for (const IntPoly& p : fam.polys) {
    if (!is_irreducible_over_Z(p)) continue;
    ++irreducible;
    if (count_unit_disk(p).inside == 2) ++with_k2;
    if (height_exact(p) == want_h) ++same_height;
  }
  bool ok = fam.polys.size() == 11 && irreducible >= 9 &&
            with_k2 == irreducible && same_height == irreducible;
  report(5, "quartic family r=2: 11 members, >=9 irreducible with k=2, one "
            "exact height key",
         ok,
         std::to_string(irreducible) + " irreducible, " +
             std::to_string(with_k2) + " with k=2, " +
             std::to_string(same_height) + " at (17+12*sqrt2)^(1/4)");
}

// --- criterion 6: dynamics -------------------------------------------------

void criterion6a() {
  bool ok = true;
  for (long a = 1; a <= 10 && ok; ++a)
    for (unsigned long q = 1; q <= 4 && ok; ++q)
      for (unsigned long p = 1; p <= 5 && ok; ++p) {
        Int g = gcd(Int(p), Int(q));
        if (g != 1) continue;
        RealAlgebraic x = surd(Int(a), p, q);
        if (!(height_of(x) == x)) ok = false;
      }
  report(6, "fixed points: H(a^(p/q)) = a^(p/q) for a<=10, q<=4, p<=5", ok,
         "");
}

void criterion6b() {
  long checked = 0, bad_order = 0, bad_equality = 0;
  for (unsigned d = 1; d <= 3; ++d) {
    enumerate_bounded(d, Rat(10), /*primitive_only=*/true,
                      [&](const IntPoly& p) {
      if (!is_irreducible_over_Z(p)) return;
      RealAlgebraic h1 = height_exact(p);
      RealAlgebraic h2 = height_of(h1);
      ++checked;
      int cmp = compare(h2, h1);
      if (cmp > 0) ++bad_order;
      bool natural = is_natural_power(h1).has_value();
      if ((cmp == 0) != natural) ++bad_equality;
    });
  }
  bool ok = checked > 0 && bad_order == 0 && bad_equality == 0;
  report(6, "H(H(alpha)) <= H(alpha), equality iff H(alpha) = a^b "
            "(deg <= 3, M <= 10)",
         ok,
         std::to_string(checked) + " checked, " + std::to_string(bad_order) +
             " order violations, " + std::to_string(bad_equality) +
             " equality mismatches");
}

void criterion6c() {
  RealAlgebraic phi = real_root_by_index(IntPoly{-1, -1, 1}, 1);
  OrbitReport rep = iterate(phi, 10, Rat(1, 20));
  bool ok = rep.classification == OrbitClass::TendingToOne &&
            rep.trajectory.size() >= 5 &&
            rep.trajectory[0].minpoly() == IntPoly{-1, -1, 1} &&
            rep.trajectory[1].minpoly() == IntPoly{-1, 0, -1, 0, 1} &&
            rep.decreasing_verified && rep.envelope_verified;
  // decimal agreement with an independent phi^(2^-n) computation, 20 digits
  if (ok) {
    mpfr_t v;
    mpfr_init2(v, 320);
    mpfr_sqrt_ui(v, 5, MPFR_RNDN);
    mpfr_add_ui(v, v, 1, MPFR_RNDN);
    mpfr_div_ui(v, v, 2, MPFR_RNDN);
    Int scale(1);
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, 25);
    for (std::size_t n = 0; n < 5 && n < rep.trajectory.size(); ++n) {
      if (n > 0) mpfr_sqrt(v, v, MPFR_RNDN);
      mpfr_t w;
      mpfr_init2(w, 320);
      mpfr_mul_z(w, v, scale.get_mpz_t(), MPFR_RNDN);
      Int zi;
      mpfr_get_z(zi.get_mpz_t(), w, MPFR_RNDD);
      mpfr_clear(w);
      Rat ref(zi, scale);  // below phi^(2^-n) by < 1e-25
      ref.canonicalize();
      auto [lo, hi] = rep.trajectory[n].refine(Rat(1, Int("10000000000000000000000")));
      Rat tol(1, 1);
      for (int i = 0; i < 20; ++i) tol /= 10;
      if (hi < ref - tol || lo > ref + tol) ok = false;
    }
    mpfr_clear(v);
  }
  report(6, "golden-ratio orbit: exact minpolys, 20-digit values, "
            "TendingToOne, d!-envelope",
         ok, "");
}

// --- criterion 7: degree of Q(H^d) ----------------------------------------

void criterion7() {
  QuarticFamily fam = quartic_family(2);
  bool ok = true;
  std::string detail;
  for (const IntPoly& p : fam.polys) {
    if (!is_irreducible_over_Z(p)) continue;
    if (deg_of_height_power(p) != 2) {
      ok = false;
      detail += "family member not 2; ";
      break;
    }
  }
  if (deg_of_height_power(IntPoly{-8, 0, 0, 0, 0, 1}) != 1) {
    ok = false;
    detail += "t^5-8 not 1; ";
  }
  IntPoly generic{-6, -4, -4, 3, 1};
  RealAlgebraic mg = mahler_exact(generic);
  if (deg_of_height_power(generic) != 6 ||
      !(mg.minpoly() == IntPoly{-216, -144, 36, -86, -6, -4, 1})) {
    ok = false;
    detail += "generic quartic mismatch; ";
  }
  report(7, "deg of Q(H^d): 2 on the quartic family, 1 on t^5-8, 6 on a "
            "generic S4 quartic",
         ok, detail);
}

// --- criterion 8: determinism ----------------------------------------------

void criterion8() {
  auto csv1 = census_to_csv(census_A(1, 2, Rat(5), 1));
  auto csv4 = census_to_csv(census_A(1, 2, Rat(5), 4));
  auto csv8 = census_to_csv(census_A(1, 2, Rat(5), 8));
  auto m1 = census_to_csv(census_mahler(0, 3, Rat(4), 1));
  auto m4 = census_to_csv(census_mahler(0, 3, Rat(4), 4));
  auto m8 = census_to_csv(census_mahler(0, 3, Rat(4), 8));
  bool ok = csv1 == csv4 && csv1 == csv8 && m1 == m4 && m1 == m8;
  report(8, "byte-identical census CSV across --threads 1, 4, 8", ok, "");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6a();
  criterion6b();
  criterion6c();
  criterion7();
  criterion8();
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED"
                              : "FAILURES: " + std::to_string(failures))
            << std::endl;
  return failures;
}
