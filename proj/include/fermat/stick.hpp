#pragma once

#include <gmpxx.h>

#include <vector>

#include "fermat/charsum.hpp"
#include "fermat/orbits.hpp"
#include "fermat/zeta.hpp"

namespace fermat {

/// T[x] = sum over pi in <p> mod d of (x pi mod d), for x in [0, d).
/// The average (1/|<p>|) sum_pi <x pi / d> equals T[x] / (|<p>| d).
std::vector<long> fractional_table(int d, long p);

/// ord_P(Ja(b)) / v_B = (1/|<p>|) sum_pi (3 - sum_i <b_i pi / d>), b in G_d^circ.
mpq_class stickelberger_valuation(const Tuple4& b, long p);

/// w_p(a, d): average over units g of max(0, sum_i (-1/2 + avg_pi <a_i pi g / d>)).
mpq_class w_single(const Tuple4& a, long p);

/// True when -1 is a power of q mod d, i.e. d | q^n + 1 for some n.
bool is_supersingular(long q, int d);

struct WeightEntry {
  Tuple4 rep;  // least element of its unit orbit
  long multiplicity = 0;  // size of the unit orbit
  mpq_class w;
};

struct WeightReport {
  long q = 0;
  int d = 0;
  long p = 0;
  std::string lambda;
  std::vector<WeightEntry> weights;  // one per unit orbit of Lambda^circ
  mpq_class w_total;  // sum over Lambda^circ
  mpz_class pstar_num;
  long pstar_e = 0;  // P* = pstar_num / q^pstar_e
  long lambda_size = 0;
  bool trivial_ok = false;  // q^|Lambda| |P*| >= 1
  bool refined_ok = false;  // q^w |P*| >= 1
};

/// Exact test of q^w * |num / q^e| >= 1 for rational w >= 0.
bool qpow_lower_bound_holds(const QPowRational& pstar, const mpq_class& w);

bool trivial_bound_check(const ZetaFactorization& Z);

/// Weights over Lambda^circ and both lower bounds for the special value in Z.
WeightReport w_total(const ZetaFactorization& Z, const Lambda& lambda);

struct NormCheck {
  mpz_class norm;  // prod over units t of Ja(t a)
  long ord_p = 0;
  mpq_class predicted_ord;  // o_p(d) sum over cosets g of v_A stick(g a)
  bool ord_ok = false;
  bool abs_ok = false;  // |N| = q^{|A| phi(d)}
  bool ok() const { return ord_ok && abs_ok; }
};

NormCheck norm_valuation_check(JacobiEngine& engine, const Tuple4& a);

struct HypothesisH {
  mpq_class fraction;  // |G_d^dagger(d^u)| / |G_d|
  double bound = 0;  // c4 tau(d) / d^u
  bool ok = false;
};

HypothesisH hypothesis_h_check(int d, double u, double eps, const BoundConstants& k = {});

}  // namespace fermat
