// Command-line frontend for the heights library: exhaustive censuses of
// algebraic numbers and integer polynomials by height / Mahler measure,
// growth-slope estimation, explicit polynomial families, orbits of the
// height map, and built-in verification suites.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "heights/census.hpp"
#include "heights/constructions.hpp"
#include "heights/factor.hpp"
#include "heights/heightdyn.hpp"
#include "heights/io.hpp"
#include "heights/mahler.hpp"
#include "heights/numroots.hpp"
#include "heights/rootloc.hpp"

namespace {

using nlohmann::json;
using namespace heights;

[[noreturn]] void usage_error(const std::string& message) {
  json err;
  err["error"] = message;
  std::cerr << err.dump() << "\n";
  std::exit(2);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) usage_error("cannot open output file: " + out_path);
  f << text;
}

std::string render_census(const std::vector<CensusRecord>& records,
                          const std::string& format) {
  if (format == "csv") return census_to_csv(records);
  if (format == "json") return census_to_json(records);
  if (format == "gnuplot") return census_to_gnuplot(records);
  usage_error("unknown format: " + format);
}

struct CensusArgs {
  unsigned degree = 0;
  unsigned k = 0;
  std::string bound;
  unsigned threads = 0;
  bool identify_sign = false;
  std::string format = "csv";
  std::string out;
};

void add_census_flags(CLI::App* cmd, CensusArgs& a, const char* bound_name,
                      const char* bound_desc) {
  cmd->add_option("--degree", a.degree, "degree d of the census")->required();
  cmd->add_option("--k", a.k, "number of conjugates strictly inside the disk")
      ->required();
  cmd->add_option(bound_name, a.bound, bound_desc)->required();
  cmd->add_option("--threads", a.threads,
                  "worker threads (0 = HEIGHT_CENSUS_THREADS or hardware)");
  cmd->add_flag("--identify-sign", a.identify_sign,
                "identify p with -p (the default; counts are unchanged)");
  cmd->add_option("--format", a.format, "csv, json, or gnuplot")
      ->check(CLI::IsMember({"csv", "json", "gnuplot"}));
  cmd->add_option("--out", a.out, "write to this file instead of stdout");
}

int run_census(const std::string& which, const CensusArgs& a) {
  Rat bound = rat_from_string(a.bound);
  if (bound <= 0) usage_error("bound must be positive");
  if (a.degree < 1) usage_error("degree must be at least 1");
  if (a.k > a.degree) usage_error("k cannot exceed the degree");
  std::vector<CensusRecord> records;
  if (which == "mahler") {
    records = census_mahler(a.k, a.degree, bound, a.threads);
  } else {
    // census-a and census-b share rows: one row per distinct height key.
    records = census_A(a.k, a.degree, bound, a.threads);
    if (which == "b")
      for (auto& r : records) r.count = 1;
  }
  emit(render_census(records, a.format), a.out);
  return 0;
}

int run_slopes(const std::string& input, const std::string& window) {
  std::ifstream f(input);
  if (!f) usage_error("cannot open input file: " + input);
  std::stringstream ss;
  ss << f.rdbuf();
  auto points = slope_points_from_csv(ss.str());
  if (window == "upper-half" && points.size() > 2) {
    double xmin = points.front().first, xmax = points.front().first;
    for (const auto& [x, y] : points) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
    }
    double cut = std::sqrt(xmin * xmax);  // midpoint of the log-x range
    std::vector<std::pair<double, unsigned long>> kept;
    for (const auto& pt : points)
      if (pt.first >= cut) kept.push_back(pt);
    if (kept.size() >= 2) points = std::move(kept);
  }
  SlopeEstimate est = fit_slope(points);
  json out;
  out["slope"] = est.slope;
  out["intercept"] = est.intercept;
  out["residual"] = est.residual;
  out["points"] = json::array();
  for (const auto& [x, y] : est.points)
    out["points"].push_back({{"x", x}, {"count", y}});
  std::cout << out.dump(2) << "\n";
  return 0;
}

const char* orbit_class_name(OrbitClass c) {
  switch (c) {
    case OrbitClass::FixedSurd:
      return "fixed-surd";
    case OrbitClass::TendingToOne:
      return "tending-to-one";
    default:
      return "budget-exhausted";
  }
}

int run_orbit(const std::string& minpoly_text, int root_index,
              unsigned max_steps, const std::string& eps_text) {
  IntPoly p;
  try {
    p = IntPoly::from_string(minpoly_text);
  } catch (const heights::error& e) {
    usage_error(std::string("bad --minpoly: ") + e.what());
  }
  if (p.degree() < 1) usage_error("--minpoly must have degree >= 1");
  Rat eps = rat_from_string(eps_text);
  if (eps <= 0) usage_error("--eps must be positive");
  RealAlgebraic seed;
  try {
    seed = real_root_by_index(p, root_index);
  } catch (const heights::error& e) {
    usage_error(std::string("bad --root-index: ") + e.what());
  }
  OrbitReport rep = iterate(seed, max_steps, eps);
  for (std::size_t n = 0; n < rep.trajectory.size(); ++n) {
    const RealAlgebraic& x = rep.trajectory[n];
    std::cout << n << "  minpoly=" << x.minpoly().to_string()
              << "  value=" << x.approx(30) << "  degree=" << x.degree()
              << "\n";
  }
  std::cout << "classification: " << orbit_class_name(rep.classification)
            << "\n";
  if (rep.classification == OrbitClass::FixedSurd) {
    std::cout << "fixed value: " << rep.surd_a.get_str() << "^("
              << rep.surd_b.get_str() << ") from step " << rep.settled_at
              << "\n";
  } else if (rep.classification == OrbitClass::TendingToOne) {
    std::cout << "final interval: (" << rep.last_interval.first.get_str()
              << ", " << rep.last_interval.second.get_str() << "]\n";
  }
  std::cout << "monotone decreasing from step 1: "
            << (rep.decreasing_verified ? "yes" : "no") << "\n";
  std::cout << "envelope bound satisfied: "
            << (rep.envelope_verified ? "yes" : "no") << "\n";
  return 0;
}

int run_family(const std::string& name, const std::string& N_text,
               unsigned degree, unsigned r) {
  if (name == "eisenstein") {
    if (N_text.empty() || degree == 0)
      usage_error("eisenstein family needs --N and --degree");
    Int N(N_text);
    IntPoly p = eisenstein_family(N, degree);
    std::cout << p.to_string() << "\n";
    return 0;
  }
  if (name == "quartic") {
    if (r == 0) usage_error("quartic family needs --r >= 1");
    QuarticFamily fam = quartic_family(r);
    std::cout << "# measure = " << fam.b1.get_str() << " + "
              << fam.b2.get_str() << "*sqrt(2)\n";
    for (const IntPoly& p : fam.polys) std::cout << p.to_string() << "\n";
    return 0;
  }
  usage_error("unknown family: " + name);
}

// --- verification suites ---------------------------------------------------

bool suite_lemma22() {
  // Heights of degree-d numbers with all conjugates inside (k = d) or all
  // outside (k = 0) the unit disk are exactly the d-th roots of integers.
  struct Case {
    unsigned k, d;
    Rat hmax;
    long lo_n, hi_n;  // expected keys n^(1/d) for n in [lo_n, hi_n]
  };
  std::vector<Case> cases = {
      {0, 2, Rat(2), 1, 4},       // 1 (cyclotomic), sqrt(2), sqrt(3), 2
      {2, 2, Rat(2), 2, 4},       // no height 1: all-inside forces M >= 2
      {0, 3, rat_from_string("1.5"), 2, 3},  // 2^(1/3), 3^(1/3)
      {3, 3, rat_from_string("1.5"), 2, 3},
  };
  for (const auto& c : cases) {
    auto [keys, total] = census_B(c.k, c.d, c.hmax);
    std::vector<RealAlgebraic> expect;
    for (long n = c.lo_n; n <= c.hi_n; ++n)
      expect.push_back(nth_root_positive(RealAlgebraic::from_int(Int(n)),
                                         c.d));
    if (keys.size() != expect.size()) return false;
    for (std::size_t i = 0; i < keys.size(); ++i)
      if (!(keys[i] == expect[i])) return false;
  }
  return true;
}

bool suite_multiplicativity() {
  std::mt19937_64 rng(0x6d61686c6572ull);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> deg(1, 3);
  int done = 0;
  while (done < 50) {
    auto draw = [&]() {
      int d = deg(rng);
      std::vector<Int> c(d + 1);
      for (int i = 0; i <= d; ++i) c[i] = coeff(rng);
      return IntPoly(std::move(c));
    };
    IntPoly p = draw(), q = draw();
    if (p.is_zero() || q.is_zero()) continue;
    RealAlgebraic lhs = mahler_exact(mul(p, q));
    RealAlgebraic rhs = mul(mahler_exact(p), mahler_exact(q));
    if (!(lhs == rhs)) return false;
    ++done;
  }
  return true;
}

bool suite_dynamics() {
  // a^(p/q) with a not a perfect power is a fixed point of the height map.
  for (long a : {2, 3, 5, 6, 7, 10}) {
    for (unsigned long q : {1ul, 2ul, 3ul}) {
      for (unsigned long p : {1ul, 2ul, 3ul}) {
        RealAlgebraic x = surd(Int(a), p, q);
        OrbitReport rep = iterate(x, 3, rat_from_string("0.01"));
        if (rep.classification != OrbitClass::FixedSurd) return false;
        if (rep.settled_at != 0) return false;
      }
    }
  }
  // The golden ratio decreases monotonically toward 1.
  RealAlgebraic phi = real_root_by_index(IntPoly{-1, -1, 1}, 1);
  OrbitReport rep = iterate(phi, 6, rat_from_string("0.05"));
  if (!rep.decreasing_verified || !rep.envelope_verified) return false;
  return rep.classification == OrbitClass::TendingToOne;
}

bool suite_rootloc_oracle() {
  std::mt19937_64 rng(0x726f6f746c6f63ull);
  std::uniform_int_distribution<int> coeff(-20, 20);
  std::uniform_int_distribution<int> deg(1, 6);
  int done = 0;
  while (done < 500) {
    int d = deg(rng);
    std::vector<Int> c(d + 1);
    for (int i = 0; i <= d; ++i) c[i] = coeff(rng);
    IntPoly p(std::move(c));
    if (p.is_zero()) continue;
    if (p.degree() < 1) continue;
    RootCount exact = count_unit_disk(p);
    auto roots = approximate_roots(p, 192);
    // Use the numeric roots only where they certify a side of the circle.
    int in = 0, out = 0, uncertain = 0;
    for (const auto& rt : roots) {
      mpf_class r = sqrt(rt.re * rt.re + rt.im * rt.im);
      if (r + rt.radius < 1)
        ++in;
      else if (r - rt.radius > 1)
        ++out;
      else
        ++uncertain;
    }
    if (!disks_pairwise_disjoint(roots)) continue;
    if (in > exact.inside || out > exact.outside) return false;
    if (in + out + uncertain != exact.inside + exact.on_circle + exact.outside)
      return false;
    ++done;
  }
  return true;
}

int run_verify(const std::string& suite) {
  bool ok;
  if (suite == "lemma22")
    ok = suite_lemma22();
  else if (suite == "multiplicativity")
    ok = suite_multiplicativity();
  else if (suite == "dynamics")
    ok = suite_dynamics();
  else if (suite == "rootloc-oracle")
    ok = suite_rootloc_oracle();
  else
    usage_error("unknown suite: " + suite);
  json out;
  out["suite"] = suite;
  out["pass"] = ok;
  std::cout << out.dump() << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact censuses, heights, and Mahler measures of algebraic "
               "numbers"};
  app.require_subcommand(1);

  CensusArgs ca, cb, cm;
  auto* cmd_a = app.add_subcommand(
      "census-a", "count degree-d numbers by height and disk location");
  add_census_flags(cmd_a, ca, "--max-height", "height bound (e.g. 3.16)");
  auto* cmd_b = app.add_subcommand(
      "census-b", "distinct height values attained (one row per value)");
  add_census_flags(cmd_b, cb, "--max-height", "height bound (e.g. 3.16)");
  auto* cmd_m = app.add_subcommand(
      "census-mahler", "count degree-d integer polynomials by Mahler measure");
  add_census_flags(cmd_m, cm, "--max-measure", "Mahler measure bound");

  std::string slopes_input, slopes_window = "upper-half";
  auto* cmd_s = app.add_subcommand("slopes",
                                   "log-log slope fit of a census CSV");
  cmd_s->add_option("--input", slopes_input, "census CSV file")->required();
  cmd_s->add_option("--window", slopes_window, "upper-half or all")
      ->check(CLI::IsMember({"upper-half", "all"}));

  std::string orbit_minpoly, orbit_eps = "0.01";
  int orbit_root_index = 0;
  unsigned orbit_max_steps = 10;
  auto* cmd_o = app.add_subcommand("orbit", "iterate the height map");
  cmd_o->add_option("--minpoly", orbit_minpoly,
                    "seed minimal polynomial, constant term first (a0,a1,...)")
      ->required();
  cmd_o->add_option("--root-index", orbit_root_index,
                    "0-based index among ascending real roots");
  cmd_o->add_option("--max-steps", orbit_max_steps, "iteration budget");
  cmd_o->add_option("--eps", orbit_eps,
                    "closeness-to-1 threshold for convergence");

  std::string family_name, family_N;
  unsigned family_degree = 0, family_r = 0;
  auto* cmd_f = app.add_subcommand("family",
                                   "explicit polynomial families");
  cmd_f->add_option("--name", family_name, "eisenstein or quartic")
      ->required();
  cmd_f->add_option("--N", family_N, "leading coefficient (eisenstein)");
  cmd_f->add_option("--degree", family_degree, "degree (eisenstein)");
  cmd_f->add_option("--r", family_r, "power of 3+2*sqrt(2) (quartic)");

  std::string verify_suite;
  auto* cmd_v = app.add_subcommand("verify", "built-in verification suites");
  cmd_v
      ->add_option("--suite", verify_suite,
                   "lemma22, dynamics, multiplicativity, or rootloc-oracle")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    json err;
    err["error"] = e.what();
    std::cerr << err.dump() << "\n";
    return 2;
  }

  try {
    if (cmd_a->parsed()) return run_census("a", ca);
    if (cmd_b->parsed()) return run_census("b", cb);
    if (cmd_m->parsed()) return run_census("mahler", cm);
    if (cmd_s->parsed()) return run_slopes(slopes_input, slopes_window);
    if (cmd_o->parsed())
      return run_orbit(orbit_minpoly, orbit_root_index, orbit_max_steps,
                       orbit_eps);
    if (cmd_f->parsed())
      return run_family(family_name, family_N, family_degree, family_r);
    if (cmd_v->parsed()) return run_verify(verify_suite);
  } catch (const heights::error& e) {
    json err;
    err["error"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 0;
}
