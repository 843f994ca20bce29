#include "fermat/stick.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "fermat/arith.hpp"

namespace fermat {

std::vector<long> fractional_table(int d, long p) {
  if (gcd(p, d) != 1) throw std::invalid_argument("fractional_table: p and d must be coprime");
  const auto H = cyclic_subgroup(mod(p, d), d);
  std::vector<long> T(d, 0);
  for (long x = 0; x < d; ++x)
    for (long pi : H) T[x] += x * pi % d;
  return T;
}

mpq_class stickelberger_valuation(const Tuple4& b, long p) {
  if (!b.is_circ()) throw std::invalid_argument("stickelberger_valuation: " + b.str() + " is not in G_d^circ");
  const int d = b.d;
  if (gcd(p, d) != 1) throw std::invalid_argument("stickelberger_valuation: p and d must be coprime");
  const auto H = cyclic_subgroup(mod(p, d), d);
  // sum_pi (3 d - sum_i (b_i pi mod d)) / (d |H|)
  long num = 0;
  for (long pi : H) {
    num += 3L * d;
    for (int x : b.a) num -= static_cast<long>(x) * pi % d;
  }
  mpq_class v(num, static_cast<long>(H.size()) * d);
  v.canonicalize();
  return v;
}

mpq_class w_single(const Tuple4& a, long p) {
  if (!a.is_circ()) throw std::invalid_argument("w_single: " + a.str() + " is not in G_d^circ");
  const int d = a.d;
  const auto T = fractional_table(d, p);
  const long D1 = static_cast<long>(cyclic_subgroup(mod(p, d), d).size()) * d;
  const auto units = units_mod(d);
  long W = 0;
  for (long g : units) {
    long s = -2 * D1;
    for (int x : a.a) s += T[static_cast<long>(x) * g % d];
    if (s > 0) W += s;
  }
  mpq_class w(W, static_cast<long>(units.size()) * D1);
  w.canonicalize();
  return w;
}

bool is_supersingular(long q, int d) {
  if (gcd(q, d) != 1) return false;
  for (long x : cyclic_subgroup(mod(q, d), d))
    if (x == mod(-1, d)) return true;
  return false;
}

bool qpow_lower_bound_holds(const QPowRational& pstar, const mpq_class& w) {
  if (pstar.is_zero()) return false;
  if (w < 0) throw std::invalid_argument("qpow_lower_bound_holds: w must be >= 0");
  const mpz_class N = abs(pstar.num());
  const mpz_class& W = w.get_num();
  const mpz_class& D = w.get_den();
  // N^D >= q^{eD - W}
  const mpz_class k = mpz_class(pstar.exponent()) * D - W;
  if (k <= 0) return true;
  const long double lhs = D.get_d() * log_abs(N);
  const long double rhs = k.get_d() * std::log(static_cast<long double>(pstar.q()));
  const long double margin = 1e-9L * (std::fabs(lhs) + std::fabs(rhs) + 1);
  if (lhs > rhs + margin) return true;
  if (lhs < rhs - margin) return false;
  if (!D.fits_ulong_p() || !k.fits_ulong_p()) throw std::overflow_error("qpow_lower_bound_holds: exponent too large");
  mpz_class a, b;
  mpz_pow_ui(a.get_mpz_t(), N.get_mpz_t(), D.get_ui());
  b = mpz_pow(pstar.q(), k.get_ui());
  return a >= b;
}

bool trivial_bound_check(const ZetaFactorization& Z) {
  return qpow_lower_bound_holds(Z.pstar, mpq_class(Z.lambda_size));
}

WeightReport w_total(const ZetaFactorization& Z, const Lambda& lambda) {
  if (Z.lambda != lambda.name()) throw std::invalid_argument("w_total: Lambda does not match the factorization");
  WeightReport r;
  r.q = Z.q;
  r.d = Z.d;
  r.p = prime_power(Z.q).first;
  r.lambda = Z.lambda;
  r.lambda_size = Z.lambda_size;
  r.pstar_num = Z.pstar.num();
  r.pstar_e = Z.pstar.exponent();

  const auto units = units_mod(Z.d);
  std::map<Tuple4, long> classes;
  for_each_G(Z.d, [&](const Tuple4& a) {
    if (!a.is_circ() || !lambda.contains(a)) return;
    Tuple4 key = a;
    for (long t : units) key = std::min(key, a.scaled(t));
    ++classes[key];
  });
  r.w_total = 0;
  for (const auto& [rep, mult] : classes) {
    WeightEntry e{rep, mult, w_single(rep, r.p)};
    if (e.w < 0 || e.w > 1) throw VerificationFailure("w_total: weight outside [0, 1]");
    r.w_total += e.w * mult;
    r.weights.push_back(std::move(e));
  }
  r.w_total.canonicalize();
  r.trivial_ok = trivial_bound_check(Z);
  r.refined_ok = qpow_lower_bound_holds(Z.pstar, r.w_total);
  return r;
}

NormCheck norm_valuation_check(JacobiEngine& engine, const Tuple4& a) {
  if (!a.is_circ()) throw std::invalid_argument("norm_valuation_check: " + a.str() + " is not in G_d^circ");
  const int d = a.d;
  const long q = engine.q();
  auto [p, f] = prime_power(q);
  const int dA = a.d_a();
  const int L = mult_order(q, dA);
  const auto units = units_mod(d);

  CycElement prod = CycElement::constant(dA, 1);
  for (long t : units) prod = prod * engine.jacobi(a.scaled(t)).value;
  auto N = prod.as_rational_integer();
  if (!N) throw VerificationFailure("norm_valuation_check: norm is not a rational integer");

  NormCheck r;
  r.norm = *N;
  mpz_class n = abs(*N);
  const mpz_class P = p;
  while (n != 0 && mpz_divisible_p(n.get_mpz_t(), P.get_mpz_t())) {
    n /= P;
    ++r.ord_p;
  }
  // cosets of <p> in the units mod d
  const auto H = cyclic_subgroup(mod(p, d), d);
  std::vector<char> covered(d, 0);
  mpq_class sum = 0;
  const long vA = static_cast<long>(f) * L;
  for (long g : units) {
    if (covered[g]) continue;
    for (long pi : H) covered[g * pi % d] = 1;
    sum += vA * stickelberger_valuation(a.scaled(g), p);
  }
  r.predicted_ord = sum * static_cast<long>(H.size());
  r.predicted_ord.canonicalize();
  r.ord_ok = r.predicted_ord == mpq_class(r.ord_p);
  r.abs_ok = abs(r.norm) == mpz_pow(q, static_cast<unsigned long>(L) * units.size());
  return r;
}

HypothesisH hypothesis_h_check(int d, double u, double eps, const BoundConstants& k) {
  if (!(u > 0 && u < 1)) throw std::invalid_argument("hypothesis_h_check: u must lie in (0, 1)");
  if (!(eps > 0 && eps < 0.25)) throw std::invalid_argument("hypothesis_h_check: eps must lie in (0, 1/4)");
  if (d < 2) throw std::invalid_argument("hypothesis_h_check: d must be >= 2");
  const auto rep = bad_set_count(d, std::pow(static_cast<double>(d), u), k);
  HypothesisH h;
  h.fraction = mpq_class(rep.count, rep.total);
  h.fraction.canonicalize();
  h.bound = k.c4 * static_cast<double>(divisor_count(d)) / std::pow(static_cast<double>(d), u);
  h.ok = rep.ok;
  return h;
}

}  // namespace fermat
