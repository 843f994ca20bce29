#include "fermat/zeta.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "fermat/arith.hpp"

namespace fermat {

int multiplicity_of_one_minus_qT(const IntPoly& P, long q) {
  IntPoly cur = P;
  poly_trim(cur);
  int k = 0;
  while (cur.size() >= 2) {
    // cur = (1 - qT) r  <=>  r_j = cur_j + q r_{j-1}, and the top coefficient closes
    IntPoly r(cur.size() - 1);
    mpz_class prev = 0;
    for (std::size_t j = 0; j + 1 < cur.size(); ++j) {
      r[j] = cur[j] + q * prev;
      prev = r[j];
    }
    if (cur.back() + q * prev != 0) break;
    cur = std::move(r);
    ++k;
  }
  return k;
}

IntPoly divide_one_minus_qT(IntPoly P, long q, int k) {
  poly_trim(P);
  for (int step = 0; step < k; ++step) {
    if (P.size() < 2) throw VerificationFailure("divide_one_minus_qT: not divisible");
    IntPoly r(P.size() - 1);
    mpz_class prev = 0;
    for (std::size_t j = 0; j + 1 < P.size(); ++j) {
      r[j] = P[j] + q * prev;
      prev = r[j];
    }
    if (P.back() + q * prev != 0) throw VerificationFailure("divide_one_minus_qT: not divisible");
    P = std::move(r);
  }
  return P;
}

mpq_class evaluate(const IntPoly& P, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t j = P.size(); j-- > 0;) {
    acc = acc * x + mpq_class(P[j]);
    acc.canonicalize();
  }
  return acc;
}

int functional_equation_sign(const IntPoly& P0, long q) {
  IntPoly P = P0;
  poly_trim(P);
  if (P.empty()) return 0;
  const std::size_t D = P.size() - 1;
  const mpz_class qD = mpz_pow(q, D);
  int s;
  if (P[D] == qD)
    s = 1;
  else if (P[D] == -qD)
    s = -1;
  else
    return 0;
  // c_{D-k} q^{2k} = c_D c_k
  for (std::size_t k = 0; k <= D; ++k)
    if (P[D - k] * mpz_pow(q, 2 * k) != P[D] * P[k]) return 0;
  return s;
}

namespace {

mpz_class certify(const CycElement& x, const char* what) {
  auto n = x.as_rational_integer();
  if (!n) throw VerificationFailure(std::string(what) + ": value " + to_string(x) + " is not a rational integer");
  return *n;
}

}  // namespace

ZetaFactorization assemble(JacobiEngine& engine, int d, const Lambda& lambda) {
  const long q = engine.q();
  if (d < 2) throw std::invalid_argument("assemble: d must be >= 2");
  if (gcd(q, d) != 1) throw std::invalid_argument("assemble: q and d must be coprime");
  if (!unit_stable(d, lambda)) throw std::invalid_argument("assemble: Lambda (" + lambda.name() + ") is not unit-stable");

  ZetaFactorization Z;
  Z.q = q;
  Z.d = d;
  Z.lambda = lambda.name();
  const auto orbs = orbits(q, d, lambda);
  if (orbs.empty()) throw std::invalid_argument("assemble: Lambda is empty");

  const auto units = units_mod(d);
  std::map<Tuple4, std::vector<std::size_t>> groups;
  for (const auto& o : orbs) {
    ZetaFactor f;
    f.orbit = o;
    f.ja = engine.jacobi(o.rep);
    auto v = f.ja.value.as_rational_integer();
    f.in_lambda0 = v && *v == mpz_pow(q, static_cast<unsigned long>(o.len));
    Z.lambda_size += o.len;
    Tuple4 key = o.rep;
    for (long t : units) key = std::min(key, o.rep.scaled(t));
    groups[key].push_back(Z.factors.size());
    Z.factors.push_back(std::move(f));
  }

  Z.poly = {1};
  long expected_degree = 0;
  mpz_class num = 1;
  long e = 0;
  int rho = 0;
  for (const auto& [key, members] : groups) {
    const ZetaFactor& first = Z.factors[members.front()];
    const int L = first.orbit.len;
    const int m = first.ja.value.conductor();
    const bool zero_values = first.orbit.cls == OrbitClass::mixed;
    for (std::size_t i : members) {
      const ZetaFactor& f = Z.factors[i];
      if (f.orbit.len != L || f.ja.value.conductor() != m || f.in_lambda0 != first.in_lambda0)
        throw VerificationFailure("assemble: a unit orbit mixes orbit lengths or Lambda_0 membership");
    }
    if (zero_values) continue;  // factors 1 - 0 T^|A|
    const long count = static_cast<long>(members.size());
    expected_degree += L * count;

    // prod (1 - J U) as a polynomial in U = T^L
    std::vector<CycElement> c{CycElement::constant(m, 1)};
    for (std::size_t i : members) {
      const CycElement& J = Z.factors[i].ja.value;
      c.push_back(CycElement(m));
      for (std::size_t k = c.size() - 1; k >= 1; --k) c[k] -= J * c[k - 1];
    }
    IntPoly g(static_cast<std::size_t>(L) * count + 1, 0);
    for (std::size_t k = 0; k < c.size(); ++k) g[k * L] = certify(c[k], "assemble");
    Z.poly = poly_mul(Z.poly, g);

    if (first.in_lambda0) {
      rho += static_cast<int>(count);
      num *= mpz_pow(L, static_cast<unsigned long>(count));
    } else {
      CycElement prod = CycElement::constant(m, 1);
      const CycElement qL = CycElement::constant(m, mpz_pow(q, static_cast<unsigned long>(L)));
      for (std::size_t i : members) prod = prod * (qL - Z.factors[i].ja.value);
      num *= certify(prod, "special value");
      e += L * count;
    }
  }
  poly_trim(Z.poly);
  if (Z.poly.empty() || Z.poly[0] != 1) throw VerificationFailure("assemble: P(0) != 1");
  if (static_cast<long>(Z.poly.size()) - 1 != expected_degree)
    throw VerificationFailure("assemble: degree differs from the number of nonzero Jacobi sums");

  Z.rho = rho;
  if (multiplicity_of_one_minus_qT(Z.poly, q) != rho)
    throw VerificationFailure("assemble: orbit count of Lambda_0 differs from the multiplicity of 1 - qT");
  Z.pstar = QPowRational::make(num, e, q);
  if (Z.pstar.num() <= 0) throw VerificationFailure("assemble: special value is not positive");
  const IntPoly R = divide_one_minus_qT(Z.poly, q, rho);
  if (evaluate(R, mpq_class(1, q)) != Z.pstar.to_mpq())
    throw VerificationFailure("assemble: special value disagrees with the reduced polynomial at 1/q");
  return Z;
}

int vanishing_order(const ZetaFactorization& Z) {
  int rho = 0;
  for (const auto& f : Z.factors) rho += f.in_lambda0;
  if (rho != multiplicity_of_one_minus_qT(Z.poly, Z.q))
    throw VerificationFailure("vanishing_order: orbit count and root multiplicity disagree");
  return rho;
}

QPowRational special_value(const ZetaFactorization& Z) { return Z.pstar; }

long geometric_genus(int d) { return static_cast<long>(d - 1) * (d - 2) * (d - 3) / 6; }

long second_betti(int d) { return static_cast<long>(d - 1) * (static_cast<long>(d) * d - 3L * d + 3) + 1; }

FermatInvariants fermat_invariants(const ZetaFactorization& Z) {
  if (Z.lambda != "full") throw std::invalid_argument("fermat_invariants: needs the factorization over all of G_d");
  FermatInvariants inv;
  inv.q = Z.q;
  inv.d = Z.d;
  inv.p_g = geometric_genus(Z.d);
  inv.b2 = second_betti(Z.d);
  inv.rank = Z.rho;
  inv.pstar = Z.pstar;
  inv.degree = static_cast<long>(Z.poly.size()) - 1;
  mpq_class br = Z.pstar.to_mpq() * mpq_class(mpz_pow(Z.q, static_cast<unsigned long>(inv.p_g)));
  br.canonicalize();
  if (br.get_den() != 1 || br <= 0)
    throw VerificationFailure("fermat_invariants: q^{p_g} P* is not a positive integer");
  inv.br_reg = br.get_num();
  if (inv.rank < 1 || inv.rank > inv.b2) throw VerificationFailure("fermat_invariants: rank outside [1, b2]");
  if (inv.degree != inv.b2) throw VerificationFailure("fermat_invariants: deg P_2 != b2");
  if (inv.p_g >= 1)
    inv.bs_ratio = static_cast<double>(log_abs(inv.br_reg) /
                                       (static_cast<long double>(inv.p_g) * std::log(static_cast<long double>(Z.q))));
  return inv;
}

FermatInvariants fermat_invariants(JacobiEngine& engine, int d) {
  return fermat_invariants(assemble(engine, d, Lambda::full()));
}

mpz_class predicted_point_count(const ZetaFactorization& Z, int n) {
  if (Z.lambda != "full") throw std::invalid_argument("predicted_point_count: needs Lambda = G_d");
  if (n < 1) throw std::invalid_argument("predicted_point_count: n must be >= 1");
  CycElement sum(Z.d);
  for (const auto& f : Z.factors) {
    const int L = f.orbit.len;
    if (n % L != 0 || f.orbit.cls == OrbitClass::mixed) continue;
    sum += f.ja.value.pow(static_cast<unsigned long>(n / L)).embed(Z.d).scaled(L);
  }
  auto s = sum.as_rational_integer();
  if (!s) throw VerificationFailure("predicted_point_count: trace is not rational");
  return 1 + mpz_pow(Z.q, 2UL * n) + *s;
}

mpz_class brute_point_count(long q, int d, int n, const Limits& lim) {
  auto [p, f] = prime_power(q);
  const std::uint64_t Q = ipow(static_cast<std::uint64_t>(q), static_cast<unsigned>(n));
  if (Q > 1000000 || Q * Q * Q > lim.brute_budget)
    throw CapExceeded("brute_point_count: q^{3n} = " + std::to_string(Q) + "^3 exceeds the enumeration budget");
  const FieldTable F = build_field(p, f * n, lim.max_field);
  std::vector<Elem> pw(Q);
  for (Elem x = 0; x < Q; ++x) pw[x] = F.pow(x, static_cast<std::uint64_t>(d));
  std::vector<Elem> add(Q * Q);
  for (Elem x = 0; x < Q; ++x)
    for (Elem y = 0; y < Q; ++y) add[x * Q + y] = F.add(x, y);

  std::uint64_t count = 0;
  // (1, x1, x2, x3)
  for (Elem x1 = 0; x1 < Q; ++x1) {
    const Elem s1 = add[1 * Q + pw[x1]];
    for (Elem x2 = 0; x2 < Q; ++x2) {
      const Elem* row = &add[static_cast<std::uint64_t>(add[s1 * Q + pw[x2]]) * Q];
      for (Elem x3 = 0; x3 < Q; ++x3) count += row[pw[x3]] == 0;
    }
  }
  // (0, 1, x2, x3)
  for (Elem x2 = 0; x2 < Q; ++x2) {
    const Elem* row = &add[static_cast<std::uint64_t>(add[1 * Q + pw[x2]]) * Q];
    for (Elem x3 = 0; x3 < Q; ++x3) count += row[pw[x3]] == 0;
  }
  // (0, 0, 1, x3); (0, 0, 0, 1) never lies on the surface
  for (Elem x3 = 0; x3 < Q; ++x3) count += add[1 * Q + pw[x3]] == 0;
  return mpz_class(static_cast<unsigned long>(count));
}

}  // namespace fermat
