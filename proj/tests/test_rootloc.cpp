#include <doctest.h>

#include <random>

#include "heights/factor.hpp"
#include "heights/numroots.hpp"
#include "heights/rootloc.hpp"

using namespace heights;

namespace {

// Cyclotomic polynomials by repeated exact division of t^n - 1.
IntPoly cyclotomic(unsigned n, std::vector<IntPoly>& cache) {
  if (cache.size() > n && !cache[n].is_zero()) return cache[n];
  if (cache.size() <= n) cache.resize(n + 1);
  std::vector<Int> c(n + 1);
  c[0] = -1;
  c[n] = 1;
  IntPoly rem(std::move(c));
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    rem = *divide_exact(rem, cyclotomic(d, cache));
  }
  cache[n] = rem;
  return rem;
}

}  // namespace

TEST_SUITE("rootloc") {

TEST_CASE("known counts") {
  auto rc = count_unit_disk(IntPoly{-1, -1, 1});  // golden ratio
  CHECK(rc.inside == 1);
  CHECK(rc.on_circle == 0);
  CHECK(rc.outside == 1);

  rc = count_unit_disk(IntPoly{1, 0, 1});  // +-i
  CHECK(rc.inside == 0);
  CHECK(rc.on_circle == 2);
  CHECK(rc.outside == 0);

  // (t-1)^2 (2t-1): root 1/2 inside, double root 1 on the circle
  IntPoly p = mul(mul(IntPoly{-1, 1}, IntPoly{-1, 1}), IntPoly{-1, 2});
  rc = count_unit_disk(p);
  CHECK(rc.inside == 1);
  CHECK(rc.on_circle == 2);
  CHECK(rc.outside == 0);

  rc = count_unit_disk(IntPoly{0, 1});  // t: root 0
  CHECK(rc.inside == 1);
  CHECK(rc.on_circle == 0);
  CHECK(rc.outside == 0);

  rc = count_unit_disk(IntPoly{0, -1, 1});  // t(t-1)
  CHECK(rc.inside == 1);
  CHECK(rc.on_circle == 1);
  CHECK(rc.outside == 0);

  rc = count_unit_disk(IntPoly{-2, 0, 0, 0, 0, 1});  // t^5 - 2
  CHECK(rc.inside == 0);
  CHECK(rc.on_circle == 0);
  CHECK(rc.outside == 5);

  rc = count_unit_disk(IntPoly{1, 0, 0, -2});  // -2t^3+1: all inside
  CHECK(rc.inside == 3);
  CHECK(rc.outside == 0);

  // Salem quartic t^4 - t^3 - t^2 - t + 1: one in, two on, one out
  rc = count_unit_disk(IntPoly{1, -1, -1, -1, 1});
  CHECK(rc.inside == 1);
  CHECK(rc.on_circle == 2);
  CHECK(rc.outside == 1);

  // Lehmer's polynomial: Salem number, 1 in, 8 on, 1 out
  rc = count_unit_disk(IntPoly{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
  CHECK(rc.inside == 1);
  CHECK(rc.on_circle == 8);
  CHECK(rc.outside == 1);

  CHECK_THROWS_AS(count_unit_disk(IntPoly{}), heights::error);
}

TEST_CASE("constants and scaling do not matter") {
  CHECK(count_unit_disk(IntPoly{7}).inside == 0);
  auto a = count_unit_disk(IntPoly{-1, -1, 1});
  auto b = count_unit_disk(mul_scalar(IntPoly{-1, -1, 1}, Int(-6)));
  CHECK(a.inside == b.inside);
  CHECK(a.on_circle == b.on_circle);
  CHECK(a.outside == b.outside);
}

TEST_CASE("cyclotomic products sit exactly on the circle") {
  std::vector<IntPoly> cache;
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<unsigned> pick(1, 20);
  for (int trial = 0; trial < 100; ++trial) {
    IntPoly prod = IntPoly::constant(Int(1));
    int planted = 0;
    int nf = 1 + static_cast<int>(trial % 3);
    for (int i = 0; i < nf; ++i) {
      IntPoly f = cyclotomic(pick(rng), cache);
      prod = mul(prod, f);
      planted += f.degree();
    }
    auto rc = count_unit_disk(prod);
    CHECK(rc.inside == 0);
    CHECK(rc.outside == 0);
    CHECK(rc.on_circle == planted);
  }
}

TEST_CASE("counts add over products and flip under reversal") {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> deg(1, 4);
  int done = 0;
  while (done < 100) {
    auto draw = [&]() {
      int d = deg(rng);
      std::vector<Int> c(static_cast<std::size_t>(d) + 1);
      for (auto& x : c) x = coeff(rng);
      return IntPoly(std::move(c));
    };
    IntPoly p = draw(), q = draw();
    if (p.degree() < 1 || q.degree() < 1) continue;
    auto rp = count_unit_disk(p), rq = count_unit_disk(q),
         rpq = count_unit_disk(mul(p, q));
    CHECK(rpq.inside == rp.inside + rq.inside);
    CHECK(rpq.on_circle == rp.on_circle + rq.on_circle);
    CHECK(rpq.outside == rp.outside + rq.outside);
    if (p.constant_term() != 0) {
      auto rrev = count_unit_disk(reverse(p));
      CHECK(rrev.inside == rp.outside);
      CHECK(rrev.on_circle == rp.on_circle);
      CHECK(rrev.outside == rp.inside);
    }
    ++done;
  }
}

TEST_CASE("agrees with certified numeric oracle") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> coeff(-20, 20);
  std::uniform_int_distribution<int> deg(1, 6);
  int done = 0;
  while (done < 500) {
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
    CHECK(in <= exact.inside);
    CHECK(out <= exact.outside);
    CHECK(in + out + unc == exact.inside + exact.on_circle + exact.outside);
    CHECK(exact.inside <= in + unc);
    CHECK(exact.outside <= out + unc);
    ++done;
  }
}

TEST_CASE("trace polynomial") {
  // z^4+z^3+z^2+z+1 = z^2 ((z^2+1/z^2) + (z+1/z) + 1) -> x^2 + x - 1
  CHECK(trace_polynomial(IntPoly{1, 1, 1, 1, 1}) == IntPoly{-1, 1, 1});
  // z^2 + 1 -> x
  CHECK(trace_polynomial(IntPoly{1, 0, 1}) == IntPoly{0, 1});
  CHECK_THROWS_AS(trace_polynomial(IntPoly{1, 2, 3}), heights::error);
  CHECK_THROWS_AS(trace_polynomial(IntPoly{1, 1}), heights::error);
}

TEST_CASE("circle root factor") {
  IntPoly p = mul(IntPoly{1, 0, 1}, IntPoly{-2, 0, 1});
  auto [on, rest] = circle_root_factor(p);
  CHECK(on == IntPoly{1, 0, 1});
  CHECK(rest == IntPoly{-2, 0, 1});

  // no circle roots: trivial on-part
  auto [on2, rest2] = circle_root_factor(IntPoly{-1, -1, 1});
  CHECK(on2.degree() == 0);
  CHECK(rest2 == IntPoly{-1, -1, 1});

  // content and sign are dropped
  auto [on3, rest3] = circle_root_factor(mul_scalar(p, Int(-3)));
  CHECK(on3 == IntPoly{1, 0, 1});
  CHECK(rest3 == IntPoly{-2, 0, 1});

  // Salem quartic: the on-circle pair is not split off by any integer factor
  CHECK_THROWS_AS(circle_root_factor(IntPoly{1, -1, -1, -1, 1}),
                  heights::error);
}

}  // TEST_SUITE
