#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fermat/charsum.hpp"
#include "fermat/cyclo.hpp"
#include "fermat/orbits.hpp"

namespace fermat {

struct ZetaFactor {
  OrbitRecord orbit;
  JacobiRecord ja;  // conductor d_a
  bool in_lambda0 = false;  // Ja = q^|A|
};

struct ZetaFactorization {
  long q = 0;
  int d = 0;
  std::string lambda;
  long lambda_size = 0;
  std::vector<ZetaFactor> factors;
  IntPoly poly;  // P(Lambda, T), low degree first
  int rho = 0;
  QPowRational pstar;
};

/// P(Lambda, T) = prod over q-orbits of (1 - Ja(a) T^|A|), expanded one unit
/// orbit at a time (each such partial product is certified to have rational
/// integer coefficients). Also fills rho and P*, each cross-checked: rho
/// against repeated exact division by 1 - qT, P* against the quotient
/// evaluated at T = 1/q.
ZetaFactorization assemble(JacobiEngine& engine, int d, const Lambda& lambda);

/// Number of orbits with Ja(a) = q^|A|, re-verified as the multiplicity of
/// the factor 1 - qT in the polynomial.
int vanishing_order(const ZetaFactorization& Z);

/// prod_{Lambda_0} |A| * prod_{Lambda*} (q^|A| - Ja(a)) / q^{sum |A|}.
QPowRational special_value(const ZetaFactorization& Z);

/// Multiplicity of 1 - qT in P, by synthetic division.
int multiplicity_of_one_minus_qT(const IntPoly& P, long q);
/// P(T) / (1 - qT)^k; throws if the division is not exact.
IntPoly divide_one_minus_qT(IntPoly P, long q, int k);
mpq_class evaluate(const IntPoly& P, const mpq_class& x);

/// s with P(T) = s q^D T^D P(1/(q^2 T)), D = deg P, or 0 when the roots are
/// not symmetric under alpha -> q^2/alpha.
int functional_equation_sign(const IntPoly& P, long q);

long geometric_genus(int d);
long second_betti(int d);

struct FermatInvariants {
  long q = 0;
  int d = 0;
  long p_g = 0;
  long b2 = 0;
  int rank = 0;
  mpz_class br_reg;  // |Br| Reg = q^{p_g} P*
  std::optional<double> bs_ratio;  // log(|Br| Reg) / log q^{p_g}; undefined for p_g = 0
  QPowRational pstar;
  long degree = 0;
};

FermatInvariants fermat_invariants(const ZetaFactorization& full);
FermatInvariants fermat_invariants(JacobiEngine& engine, int d);

/// #F_d(F_{q^n}) = 1 + q^{2n} + sum over orbits with |A| | n of |A| Ja(a)^{n/|A|}.
/// Requires Lambda = G_d.
mpz_class predicted_point_count(const ZetaFactorization& Z, int n);

/// Projective points of X0^d + X1^d + X2^d + X3^d = 0 over F_{q^n}, counted by
/// enumeration with the first nonzero coordinate scaled to 1. Throws
/// CapExceeded when q^{3n} exceeds the brute-force budget.
mpz_class brute_point_count(long q, int d, int n, const Limits& lim = {});

}  // namespace fermat
