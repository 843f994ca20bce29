#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "fermat/charsum.hpp"
#include "fermat/common.hpp"
#include "fermat/zeta.hpp"

namespace fermat {

struct UpperBoundCheck {
  long lambda_size = 0;
  double log_pstar = 0;
  double bound = 0;  // C2 log q |Lambda| loglog|Lambda| / log|Lambda|
  bool loglog_clamped = false;
  bool ok = false;
};

/// Requires |Lambda| >= 2; log log |Lambda| is clamped below as in orbit_stats.
UpperBoundCheck upper_bound_check(const ZetaFactorization& Z, const BoundConstants& k = {});

struct RankBoundCheck {
  int rank = 0;
  double bound = 0;  // c3 log q d^3 / log d
  bool ok = false;
};

RankBoundCheck rank_bound_check(const FermatInvariants& inv, const BoundConstants& k = {});

struct SupersingularReport {
  long q = 0;
  int n = 0;
  int d = 0;  // q^n + 1
  int order = 0;  // o_q(d)
  bool order_ok = false;  // order = 2n
  bool all_q_power = false;  // Ja(a) = q^|A| on all of G_d^circ
  int rank = 0;
  long circ_size = 0;  // |G_d^circ|
  long circ_orbits = 0;  // |O_q(G_d^circ)|
  long all_orbits = 0;  // |O_q(G_d)|, the count used in the optimality argument
  bool rank_ok = false;  // rank = 1 + circ_orbits
  bool growth_ok = false;  // rank - 1 >= |G_d^circ| / (2n)
  bool ok() const { return order_ok && all_q_power && rank_ok && growth_ok; }
};

SupersingularReport supersingular_family(JacobiEngine& engine, int n);

struct SweepRow {
  int d = 0;
  long p_g = 0;
  int rank = 0;
  mpz_class br_reg;
  double bs_ratio = 0;
  mpq_class w_total;
  double window_lo = 0;  // 1 - w / p_g
  double window_hi = 0;  // 1 + C2 |G_d| loglog|G_d| / (log|G_d| p_g)
  bool in_window = false;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<std::pair<int, std::string>> skipped;
  bool cap_exceeded = false;  // some entry of skipped broke a size cap
};

/// One row per d with p_g >= 1; d sharing a factor with q, with p_g = 0, or
/// breaking a cap, are listed in skipped with the reason.
SweepResult bs_sweep(JacobiEngine& engine, const std::vector<int>& ds, const BoundConstants& k = {});

std::string sweep_csv_header();
std::string sweep_csv(const SweepResult& r);

/// Shortest round-trip decimal form of a double, used for all CSV/JSON floats.
std::string format_double(double x);

}  // namespace fermat
