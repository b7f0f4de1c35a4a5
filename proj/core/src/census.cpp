#include "heights/census.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <thread>

#include "heights/factor.hpp"
#include "heights/mahler.hpp"
#include "heights/rootloc.hpp"

namespace heights {

namespace {

unsigned resolve_threads(unsigned threads) {
  if (threads > 0) return threads;
  if (const char* env = std::getenv("HEIGHT_CENSUS_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// All roots certified strictly inside the unit circle by the dominant
// leading coefficient: |a_d| > sum of the other |a_i|.
bool all_inside_cheap(const IntPoly& p) {
  Int s(0);
  for (int i = 0; i < p.degree(); ++i) s += abs(p.coeff(static_cast<std::size_t>(i)));
  return abs(p.leading()) > s;
}

// All roots certified not inside the closed unit disk: |a_0| > sum rest.
bool all_outside_cheap(const IntPoly& p) {
  Int s(0);
  for (int i = 1; i <= p.degree(); ++i) s += abs(p.coeff(static_cast<std::size_t>(i)));
  return abs(p.coeff(0)) > s;
}

// Runs fn over the coefficient box of degree-d polynomials with positive
// leading coefficient a congruent to (shard mod nshards), |a_i| <=
// binom(d,i)*Mmax. Lexicographic order within a shard.
void for_each_candidate(unsigned d, const Rat& Mmax, unsigned shard,
                        unsigned nshards,
                        const std::function<void(const IntPoly&)>& fn) {
  Int amax = floor_rat(Mmax);
  std::vector<Int> bound(d + 1);
  for (unsigned i = 0; i <= d; ++i) bound[i] = floor_rat(Rat(binomial(d, i)) * Mmax);
  std::vector<Int> c(d + 1);
  for (Int a = 1; a <= amax; ++a) {
    // shard by leading coefficient value
    Int rem;
    mpz_mod_ui(rem.get_mpz_t(), a.get_mpz_t(), nshards);
    if (rem.get_ui() != shard) continue;
    c[d] = a;
    // odometer over the remaining coefficients, most significant first
    std::vector<Int> cur(d);
    for (unsigned i = 0; i < d; ++i) cur[i] = -bound[d - 1 - i];
    bool exhausted = false;
    while (!exhausted) {
      for (unsigned i = 0; i < d; ++i) c[d - 1 - i] = cur[i];
      fn(IntPoly(std::vector<Int>(c.begin(), c.end())));
      unsigned pos = d;
      for (;;) {
        if (pos == 0) {
          exhausted = true;
          break;
        }
        --pos;
        if (cur[pos] < bound[d - 1 - pos]) {
          ++cur[pos];
          for (unsigned j = pos + 1; j < d; ++j) cur[j] = -bound[d - 1 - j];
          break;
        }
      }
    }
  }
}

struct Accum {
  RealAlgebraic key;
  unsigned deg_Hd = 0;
  unsigned long count = 0;
};

using LocalMap = std::map<std::string, Accum>;

LocalMap merge(std::vector<LocalMap>& parts) {
  LocalMap out;
  for (auto& part : parts)
    for (auto& [k, v] : part) {
      auto [it, fresh] = out.emplace(k, v);
      if (!fresh) it->second.count += v.count;
    }
  return out;
}

std::vector<CensusRecord> finalize(LocalMap&& m, unsigned d, unsigned k) {
  std::vector<CensusRecord> out;
  out.reserve(m.size());
  for (auto& [key, acc] : m) {
    CensusRecord r;
    r.key = acc.key;
    r.d = d;
    r.k = k;
    r.count = acc.count;
    r.deg_Hd = acc.deg_Hd;
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const CensusRecord& a, const CensusRecord& b) {
    return a.key < b.key;
  });
  return out;
}

template <typename PerPoly>
LocalMap run_sharded(unsigned d, const Rat& Mmax, unsigned threads,
                     const PerPoly& per_poly) {
  unsigned n = resolve_threads(threads);
  std::vector<LocalMap> parts(n);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t)
    pool.emplace_back([&, t] {
      for_each_candidate(d, Mmax, t % n, n,
                         [&](const IntPoly& p) { per_poly(p, parts[t]); });
    });
  for (auto& th : pool) th.join();
  return merge(parts);
}

}  // namespace

void enumerate_bounded(unsigned d, const Rat& Mmax, bool primitive_only,
                       const std::function<void(const IntPoly&)>& yield) {
  if (d < 1) throw error("enumeration requires degree >= 1");
  if (Mmax < 1) throw error("Mahler bound must be >= 1");
  for_each_candidate(d, Mmax, 0, 1, [&](const IntPoly& p) {
    if (static_cast<unsigned>(p.degree()) != d) return;
    if (primitive_only && content(p) != 1) return;
    if (compare_to_rational(mahler_exact(p), Mmax) > 0) return;
    yield(p);
  });
}

std::vector<CensusRecord> census_A(unsigned k, unsigned d, const Rat& Hmax,
                                   unsigned threads) {
  if (k > d) throw error("k exceeds the degree");
  if (Hmax < 1) throw error("height bound must be >= 1");
  Rat Mmax;
  mpz_pow_ui(mpq_numref(Mmax.get_mpq_t()), mpq_numref(Hmax.get_mpq_t()), d);
  mpz_pow_ui(mpq_denref(Mmax.get_mpq_t()), mpq_denref(Hmax.get_mpq_t()), d);

  LocalMap all = run_sharded(d, Mmax, threads, [&](const IntPoly& p, LocalMap& local) {
    if (content(p) != 1) return;
    if (k != d && all_inside_cheap(p)) return;
    if (k != 0 && all_outside_cheap(p)) return;
    Factorization fac = factor_over_Z(p);
    if (fac.content != 1 || fac.factors.size() != 1 || fac.factors[0].second != 1)
      return;  // not irreducible
    RootCount rc = count_unit_disk(p);
    if (rc.inside != static_cast<int>(k)) return;
    RealAlgebraic M = mahler_exact(p);
    if (compare_to_rational(M, Mmax) > 0) return;
    RealAlgebraic H = nth_root_positive(M, d);
    Accum& acc = local[H.canonical_key()];
    if (acc.count == 0) {
      acc.key = H;
      acc.deg_Hd = static_cast<unsigned>(M.degree());
    }
    acc.count += d;
  });
  return finalize(std::move(all), d, k);
}

std::pair<std::vector<RealAlgebraic>, std::size_t> census_B(unsigned k,
                                                            unsigned d,
                                                            const Rat& Hmax,
                                                            unsigned threads) {
  std::vector<RealAlgebraic> values;
  for (const CensusRecord& r : census_A(k, d, Hmax, threads))
    values.push_back(r.key);
  std::size_t n = values.size();
  return {std::move(values), n};
}

std::vector<CensusRecord> census_mahler(unsigned k, unsigned d,
                                        const Rat& Mmax, unsigned threads) {
  if (k > d) throw error("k exceeds the degree");
  if (Mmax < 1) throw error("Mahler bound must be >= 1");
  LocalMap all = run_sharded(d, Mmax, threads, [&](const IntPoly& p, LocalMap& local) {
    if (k != d && all_inside_cheap(p)) return;
    if (k != 0 && all_outside_cheap(p)) return;
    RootCount rc = count_unit_disk(p);
    if (rc.inside != static_cast<int>(k)) return;
    RealAlgebraic M = mahler_exact(p);
    if (compare_to_rational(M, Mmax) > 0) return;
    Accum& acc = local[M.canonical_key()];
    if (acc.count == 0) acc.key = M;
    acc.count += 1;
  });
  return finalize(std::move(all), d, k);
}

SlopeEstimate fit_slope(
    const std::vector<std::pair<double, unsigned long>>& points) {
  if (points.size() < 2) throw error("slope fit needs at least two points");
  SlopeEstimate est;
  est.points = points;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(points.size());
  for (const auto& [x, y] : points) {
    if (x <= 1.0 || y < 1) throw error("slope fit needs x > 1 and count >= 1");
    double lx = std::log(x), ly = std::log(static_cast<double>(y));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  est.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  est.intercept = (sy - est.slope * sx) / n;
  double ss = 0;
  for (const auto& [x, y] : points) {
    double r = std::log(static_cast<double>(y)) -
               (est.intercept + est.slope * std::log(x));
    ss += r * r;
  }
  est.residual = std::sqrt(ss / n);
  return est;
}

}  // namespace heights
