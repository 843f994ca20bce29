// End-to-end acceptance run: one PASS/FAIL line per criterion.
// Usage: acceptance [path-to-fermat_zeta]

#include <gmpxx.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fermat/arith.hpp"
#include "fermat/bounds.hpp"
#include "fermat/cache.hpp"
#include "fermat/equidist.hpp"
#include "fermat/orbits.hpp"
#include "fermat/stick.hpp"
#include "fermat/verify.hpp"
#include "fermat/zeta.hpp"

using namespace fermat;
namespace fs = std::filesystem;

namespace {

struct Criterion {
  int id;
  long checks = 0;
  long failures = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ < 5) notes.push_back(what);
  }
};

struct GridPoint {
  long q;
  int d;
};

// q in {2,3,4,5}, 2 <= d <= 10, coprime, every orbit order at most 12
std::vector<GridPoint> grid() {
  std::vector<GridPoint> g;
  for (long q : {2, 3, 4, 5})
    for (int d = 2; d <= 10; ++d)
      if (gcd(q, d) == 1 && mult_order(q, d) <= 12) g.push_back({q, d});
  return g;
}

std::string at(long q, int d) { return "q=" + std::to_string(q) + " d=" + std::to_string(d); }

mpq_class rq(long n, long d) {
  mpq_class r(n, d);
  r.canonicalize();
  return r;
}

IntPoly pow_linear(long c, int k) {  // (1 + c T)^k
  IntPoly r{1};
  for (int i = 0; i < k; ++i) r = poly_mul(r, IntPoly{1, c});
  return r;
}

bool divides_q_power_plus_one(long q, int d) {
  long x = q % d;
  for (int n = 1; n <= d; ++n, x = x * q % d)
    if ((x + 1) % d == 0) return true;
  return false;
}

fs::path make_temp_dir() {
  std::string tmpl = (fs::temp_directory_path() / "fermat_acceptance_XXXXXX").string();
  if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
  return tmpl;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// 1. point counts against enumeration
void point_counts(Criterion& c) {
  Limits lim;
  for (const auto& [q, d] : grid()) {
    JacobiEngine E(q, lim);
    const ZetaFactorization Z = assemble(E, d, Lambda::full());
    for (int n = 1;; ++n) {
      const mpz_class q3n = mpz_pow(q, 3UL * n);
      if (q3n > 100000000) break;
      const mpz_class want = predicted_point_count(Z, n), got = brute_point_count(q, d, n, lim);
      c.expect(want == got, at(q, d) + " n=" + std::to_string(n) + ": " + want.get_str() + " vs " + got.get_str());
    }
  }
  c.expect(brute_point_count(2, 3, 1) == 7, "#F_3(F_2) != 7");
  c.expect(brute_point_count(2, 5, 1) == 7, "#F_5(F_2) != 7");
  JacobiEngine E2(2);
  c.expect(predicted_point_count(assemble(E2, 3, Lambda::full()), 1) == 7, "predicted #F_3(F_2) != 7");
  c.expect(predicted_point_count(assemble(E2, 5, Lambda::full()), 1) == 7, "predicted #F_5(F_2) != 7");
}

// 2. exact invariants
void invariants(Criterion& c) {
  JacobiEngine E2(2), E3(3);
  {
    const ZetaFactorization Z = assemble(E2, 3, Lambda::full());
    const FermatInvariants inv = fermat_invariants(Z);
    c.expect(Z.poly == poly_mul(pow_linear(-2, 4), pow_linear(2, 3)), "P for q=2 d=3");
    c.expect(inv.rank == 4, "rank for q=2 d=3");
    c.expect(inv.br_reg == 8, "|Br| Reg for q=2 d=3");
  }
  {
    const FermatInvariants inv = fermat_invariants(E2, 5);
    c.expect(inv.rank == 14, "rank for q=2 d=5");
    c.expect(inv.pstar.to_mpq() == mpq_class(mpz_pow(2, 26)), "P* for q=2 d=5");
    c.expect(inv.br_reg == mpz_pow(2, 30), "|Br| Reg for q=2 d=5");
    // log(2^30) / log(2^4) is exactly 7.5 in binary floating point
    c.expect(inv.bs_ratio && *inv.bs_ratio == 7.5, "bs_ratio for q=2 d=5");
  }
  {
    const ZetaFactorization Z = assemble(E3, 2, Lambda::full());
    const FermatInvariants inv = fermat_invariants(Z);
    c.expect(Z.poly == pow_linear(-3, 2), "P for q=3 d=2");
    c.expect(inv.rank == 2, "rank for q=3 d=2");
    c.expect(inv.br_reg == 1, "|Br| Reg for q=3 d=2");
  }
}

// 3, 4 and the norm half of 5 share one verify pass per grid point
void identities(Criterion& c3, Criterion& c4, Criterion& c5) {
  VerifyOptions opt;
  opt.galois_sample = 0;
  opt.point_counts = false;
  for (const auto& [q, d] : grid()) {
    JacobiEngine E(q);
    const VerifyReport r = verify_surface(E, d, opt);
    auto take = [&](Criterion& c, const char* name) {
      const CheckTally& t = r.at(name);
      c.checks += t.run;
      if (t.failed) c.expect(false, at(q, d) + " " + name + ": " + t.first_failure);
    };
    for (const char* n : {"riemann", "galois", "q_invariance", "davenport_hasse", "gauss_vs_direct"}) take(c3, n);
    for (const char* n : {"trivial_bound", "refined_bound", "supersingular"}) take(c4, n);
    take(c5, "norm_valuation");
    c3.expect(r.at("riemann").run > 0 || d < 2, at(q, d) + ": no circ orbits checked");
    if (divides_q_power_plus_one(q, d)) c4.expect(r.at("supersingular").run == 1, at(q, d) + ": supersingular case skipped");
  }
}

// 5. Stickelberger pairs for d <= 60
void stickelberger_pairs(Criterion& c) {
  for (long p : {2, 3, 5})
    for (int d = 2; d <= 60; ++d) {
      if (gcd(p, d) != 1) continue;
      for_each_G(d, [&](const Tuple4& b) {
        if (!b.is_circ()) return;
        c.expect(stickelberger_valuation(b, p) + stickelberger_valuation(b.negated(), p) == 2,
                 "p=" + std::to_string(p) + " " + b.str());
      });
    }
}

// 6. explicit constants, natural logs, |Lambda| >= 16
void constants(Criterion& c) {
  for (const auto& [q, d] : grid()) {
    JacobiEngine E(q);
    for (const Lambda& L : {Lambda::full(), Lambda::circ()}) {
      const auto os = orbits(q, d, L);
      long size = 0;
      for (const auto& o : os) size += o.len;
      if (size < 16) continue;
      const std::string tag = at(q, d) + " " + L.name();
      const double lq = std::log(static_cast<double>(q)), n = static_cast<double>(size);
      const double ll = std::log(std::log(n));
      double sum_log = 0;
      for (const auto& o : os) sum_log += std::log(static_cast<double>(o.len));
      c.expect(static_cast<double>(os.size()) <= 1 + 9 * lq * n / std::log(n), tag + ": orbit count");
      c.expect(sum_log <= 18 * lq * n * ll / std::log(n), tag + ": sum of log lengths");
      const OrbitStats s = orbit_stats(q, os);
      c.expect(s.count_ok && s.sum_log_ok && !s.loglog_clamped, tag + ": orbit_stats verdicts");
      const ZetaFactorization Z = assemble(E, d, L);
      const double log_pstar = static_cast<double>(Z.pstar.log_abs());
      c.expect(log_pstar <= 25 * lq * n * ll / std::log(n), tag + ": log P*");
      c.expect(upper_bound_check(Z).ok, tag + ": upper_bound_check");
    }
    const FermatInvariants inv = fermat_invariants(E, d);
    const double bound = 3 * std::log(static_cast<double>(q)) * d * d * d / std::log(static_cast<double>(d));
    c.expect(inv.rank <= bound, at(q, d) + ": rank");
    c.expect(rank_bound_check(inv).ok, at(q, d) + ": rank_bound_check");
  }
}

// 7. equidistribution
void equidistribution(Criterion& c) {
  std::mt19937_64 rng(20261016);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  auto sample = [&](long N, long den) {
    std::vector<mpq_class> pts;
    for (long i = 0; i < N; ++i) pts.push_back(rq(uniform(0, den), den));
    return PointSample::make(pts);
  };
  auto function = [&](int k) {
    std::vector<long> cuts;
    while (static_cast<int>(cuts.size()) < k - 1) {
      const long x = uniform(1, 999);
      if (std::find(cuts.begin(), cuts.end(), x) == cuts.end()) cuts.push_back(x);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<mpq_class> t{0}, v{rq(uniform(-50, 50), 7)};
    for (long x : cuts) {
      t.push_back(rq(x, 1000));
      v.push_back(rq(uniform(-50, 50), 7));
    }
    t.push_back(1);
    v.push_back(rq(uniform(-50, 50), 7));
    return BVFunction::make(t, v);
  };

  for (int i = 0; i < 200; ++i) {
    const BVFunction F = function(static_cast<int>(uniform(1, 10)));
    const PointSample S = sample(uniform(1, 100), 360);
    mpq_class avg = 0;
    for (const auto& x : S.points) avg += F(x);
    avg /= static_cast<long>(S.size());
    const mpq_class lhs = abs(F.integral() - avg), rhs = total_variation(F) * discrepancy(S);
    const KoksmaResult k = koksma_check(F, S);
    c.expect(lhs <= rhs && k.ok && k.lhs == lhs && k.rhs == rhs, "Koksma case " + std::to_string(i));
  }
  for (int i = 0; i < 200; ++i) {
    const PointSample S = sample(uniform(1, 60), 1000);
    const double D = discrepancy(S).get_d();
    for (int K : {1, 5, 20}) {
      const ErdosTuran e = erdos_turan_bound(S, K);
      c.expect(D <= e.bound + 1e-9 && e.ok, "Erdos-Turan case " + std::to_string(i) + " K=" + std::to_string(K));
    }
  }
  for (int i = 0; i < 100; ++i) {
    const PointSample S = sample(uniform(1, 50), 97);
    c.expect(discrepancy(S) == discrepancy_brute(S), "discrepancy case " + std::to_string(i));
  }
  const BVFunction id = BVFunction::identity();
  for (int i = 0; i < 50; ++i) {
    const int d = static_cast<int>(uniform(3, 80));
    const auto U = units_mod(d);
    const long a = U[uniform(0, static_cast<long>(U.size()) - 1)];
    const long g = U[uniform(0, static_cast<long>(U.size()) - 1)];
    const auto H = cyclic_subgroup(g, d);
    c.expect(theta_average(d, a, H, id) == theta_average(d, 1, H, id), "theta case d=" + std::to_string(d));
  }
  for (int d : {31, 127, 257})
    c.expect(equidis_bound_check(d, subgroup_generated(2, d), 0.125).ok, "equidis d=" + std::to_string(d));
  for (const auto& [q, d] : grid()) {
    const long p = prime_power(q).first;
    for_each_G(d, [&](const Tuple4& a) {
      if (!a.is_circ()) return;
      mpq_class s = 0;
      for (int x : a.a) s += theta_p(x, d, p);
      c.expect(w_single(a, p) <= s, at(q, d) + " " + a.str());
    });
  }
}

// 8. bad-set lemma
void bad_set(Criterion& c) {
  for (int d = 2; d <= 200; ++d) {
    const auto hist = max_gcd_histogram(d);
    for (auto [num, den] : {std::pair{3L, 10L}, {1L, 2L}, {7L, 10L}}) {
      const BadSetReport r = bad_set_count_pow(d, num, den, &hist);
      const std::string tag = "d=" + std::to_string(d) + " u=" + std::to_string(num) + "/" + std::to_string(den);
      c.expect(r.ok, tag);
      if (is_prime(d)) c.expect(r.count == 0, tag + ": prime d with nonempty bad set");
    }
  }
}

// 9. sweep integrity, cold then warm cache
void sweep(Criterion& c, const char* cli) {
  std::vector<int> ds;
  for (int d = 5; d <= 15; d += 2) ds.push_back(d);
  const fs::path dir = make_temp_dir();
  std::string out[2];
  for (int pass = 0; pass < 2; ++pass) {
    JacobiCache cache(dir / "lib", true);
    JacobiEngine E(2, Limits{}, &cache);
    const SweepResult r = bs_sweep(E, ds);
    out[pass] = sweep_csv(r);
    c.expect(!r.cap_exceeded && r.rows.size() == ds.size(), "sweep rows missing");
    for (const auto& row : r.rows) c.expect(row.in_window, "d=" + std::to_string(row.d) + " outside its window");
    const EngineCounters k = E.counters();
    if (pass == 1) c.expect(k.cache_hits > 0 && k.gauss == 0 && k.direct == 0, "warm run recomputed sums");
  }
  c.expect(out[0] == out[1], "library sweep differs between cold and warm cache");

  if (cli) {
    const std::string base = std::string("\"") + cli + "\" --quiet --cache-dir \"" + (dir / "cli").string() +
                             "\" --emit csv sweep --q 2 --d-from 5 --d-to 15 --step 2 > \"";
    for (int pass = 0; pass < 2; ++pass) {
      const fs::path file = dir / ("cli" + std::to_string(pass) + ".csv");
      const int rc = std::system((base + file.string() + "\"").c_str());
      c.expect(rc == 0, "CLI sweep exited with status " + std::to_string(rc));
      out[pass] = slurp(file);
    }
    c.expect(out[0] == out[1], "CLI sweep differs between cold and warm cache");
    JacobiEngine E(2);
    c.expect(out[0] == sweep_csv(bs_sweep(E, ds)), "CLI and library sweeps differ");
  }
  fs::remove_all(dir);
}

}  // namespace

int main(int argc, char** argv) {
  unsetenv("FERMAT_ZETA_CACHE");
  const char* cli = argc > 1 ? argv[1] : nullptr;
  std::vector<Criterion> crit;
  for (int i = 1; i <= 9; ++i) crit.push_back(Criterion{i, 0, 0, {}});
  auto C = [&](int id) -> Criterion& { return crit[id - 1]; };

  struct Step {
    const char* name;
    std::vector<int> feeds;
    std::function<void()> run;
  };
  const std::vector<Step> steps = {
      {"point counts", {1}, [&] { point_counts(C(1)); }},
      {"exact invariants", {2}, [&] { invariants(C(2)); }},
      {"identities, bounds, norms", {3, 4, 5}, [&] { identities(C(3), C(4), C(5)); }},
      {"Stickelberger pairs", {5}, [&] { stickelberger_pairs(C(5)); }},
      {"explicit constants", {6}, [&] { constants(C(6)); }},
      {"equidistribution", {7}, [&] { equidistribution(C(7)); }},
      {"bad set", {8}, [&] { bad_set(C(8)); }},
      {"sweep", {9}, [&] { sweep(C(9), cli); }},
  };
  const char* titles[] = {"point counts match enumeration",
                          "exact invariants",
                          "character-sum identities",
                          "lower bounds for P*",
                          "Stickelberger consistency",
                          "explicit-constant bounds",
                          "equidistribution suite",
                          "bad-set lemma",
                          "sweep integrity"};
  for (const auto& step : steps) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      step.run();
    } catch (const std::exception& e) {
      for (int id : step.feeds) C(id).expect(false, std::string(step.name) + " threw: " + e.what());
    }
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "[" << step.name << "] " << sec << " s\n";
  }

  bool all = true;
  for (const auto& c : crit) {
    const bool ok = c.failures == 0 && c.checks > 0;
    all = all && ok;
    std::cout << "criterion " << c.id << " " << (ok ? "PASS" : "FAIL") << ": " << titles[c.id - 1] << " (" << c.checks
              << " checks, " << c.failures << " failed)\n";
    for (const auto& n : c.notes) std::cout << "    " << n << "\n";
  }
  return all ? 0 : 1;
}
