#include "fermat/verify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "fermat/arith.hpp"
#include "fermat/stick.hpp"
#include "fermat/zeta.hpp"

namespace fermat {

void CheckTally::record(bool ok, const std::string& what) {
  ++run;
  if (!ok) {
    if (failed == 0) first_failure = what;
    ++failed;
  }
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckTally& c) { return c.failed == 0; });
}

const CheckTally& VerifyReport::at(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("VerifyReport: no check named " + name);
}

VerifyReport verify_surface(JacobiEngine& engine, int d, const VerifyOptions& opt) {
  const long q = engine.q();
  const Limits& lim = engine.limits();
  const int p = engine.p();
  if (d < 1 || gcd(q, d) != 1) throw std::invalid_argument("verify: d must be >= 1 and coprime to q");

  VerifyReport r;
  r.q = q;
  r.d = d;
  auto tally = [](const char* name) {
    CheckTally t;
    t.name = name;
    return t;
  };
  CheckTally points = tally("point_counts");
  CheckTally riemann = tally("riemann");
  CheckTally galois = tally("galois");
  CheckTally qinv = tally("q_invariance");
  CheckTally dh = tally("davenport_hasse");
  CheckTally fast = tally("gauss_vs_direct");
  CheckTally feq = tally("functional_equation");
  CheckTally pairs = tally("stickelberger_pairs");
  CheckTally norms = tally("norm_valuation");
  CheckTally trivial = tally("trivial_bound");
  CheckTally refined = tally("refined_bound");
  CheckTally ss = tally("supersingular");

  const ZetaFactorization Z = assemble(engine, d, Lambda::full());
  feq.record(functional_equation_sign(Z.poly, q) != 0, "P does not satisfy the functional equation");

  for (int n = 1; opt.point_counts; ++n) {
    const std::uint64_t Qn = ipow(static_cast<std::uint64_t>(q), static_cast<unsigned>(n));
    if (Qn > 1000000 || Qn * Qn * Qn > lim.brute_budget) break;
    const mpz_class want = predicted_point_count(Z, n), got = brute_point_count(q, d, n, lim);
    points.record(want == got, "n = " + std::to_string(n) + ": predicted " + want.get_str() + ", counted " + got.get_str());
  }

  const auto units = units_mod(d);
  std::vector<long> sample = units;
  if (opt.galois_sample && sample.size() > opt.galois_sample) {
    std::mt19937_64 rng(opt.seed);
    std::shuffle(sample.begin(), sample.end(), rng);
    sample.resize(opt.galois_sample);
    std::sort(sample.begin(), sample.end());
  }

  for (const auto& f : Z.factors) {
    if (f.orbit.cls != OrbitClass::circ) continue;
    const Tuple4& a = f.orbit.rep;
    const int L = f.orbit.len;
    const std::string tag = a.str();
    const CycElement j = engine.jacobi_at(a);

    riemann.record((j * j.conj()).as_rational_integer() == mpz_pow(q, 2UL * L), tag);
    qinv.record(engine.jacobi_at(a.scaled(q)) == j, tag);
    for (long t : sample) galois.record(engine.jacobi_at(a.scaled(t)) == j.galois(t), tag + ", t = " + std::to_string(t));

    const auto F = engine.field(L);
    if (F->size() <= lim.direct_cap) fast.record(jacobi_direct(*F, a.primitive()).embed(d) == j, tag);

    const std::uint64_t Q = F->size();
    if (Q <= opt.dh_field_cap / Q && Q * Q <= lim.max_field) {
      const CycElement e = engine.jacobi_extension(a, 2);  // throws if the relation fails
      dh.record((e * e.conj()).as_rational_integer() == mpz_pow(q, 4UL * L), tag);
    }

    const NormCheck nc = norm_valuation_check(engine, a);
    norms.record(nc.ok(), tag + ": ord " + std::to_string(nc.ord_p) + " vs " + nc.predicted_ord.get_str());
  }

  for_each_G(d, [&](const Tuple4& b) {
    if (!b.is_circ()) return;
    pairs.record(stickelberger_valuation(b, p) + stickelberger_valuation(b.negated(), p) == 2, b.str());
  });

  const WeightReport w = w_total(Z, Lambda::full());
  trivial.record(w.trivial_ok, "q^|G_d| |P*| < 1");
  refined.record(w.refined_ok, "q^w |P*| < 1 with w = " + w.w_total.get_str());
  if (is_supersingular(q, d)) {
    const bool integral = Z.pstar.exponent() <= 0 && Z.pstar.num() > 0;
    ss.record(w.w_total == 0 && integral, "w = " + w.w_total.get_str() + ", P* = " + Z.pstar.to_mpq().get_str());
  }

  r.checks = {points, riemann, galois, qinv, dh, fast, feq, pairs, norms, trivial, refined, ss};
  return r;
}

nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json checks = nlohmann::json::object();
  for (const auto& c : r.checks) {
    nlohmann::json j = {{"run", c.run}, {"failed", c.failed}};
    if (c.failed) j["first_failure"] = c.first_failure;
    checks[c.name] = j;
  }
  return {{"q", r.q}, {"d", r.d}, {"checks", checks}, {"ok", r.ok()}};
}

}  // namespace fermat
