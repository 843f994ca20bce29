#include "fermat/bounds.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fermat/arith.hpp"
#include "fermat/stick.hpp"

namespace fermat {

UpperBoundCheck upper_bound_check(const ZetaFactorization& Z, const BoundConstants& k) {
  UpperBoundCheck r;
  r.lambda_size = Z.lambda_size;
  if (r.lambda_size < 2) throw std::invalid_argument("upper_bound_check: |Lambda| must be >= 2");
  const double L = static_cast<double>(r.lambda_size);
  const double ll = clamped_loglog(L, k.loglog_floor, &r.loglog_clamped);
  r.log_pstar = static_cast<double>(Z.pstar.log_abs());
  r.bound = k.C2 * std::log(static_cast<double>(Z.q)) * L * ll / std::log(L);
  r.ok = r.log_pstar <= r.bound;
  return r;
}

RankBoundCheck rank_bound_check(const FermatInvariants& inv, const BoundConstants& k) {
  if (inv.d < 2) throw std::invalid_argument("rank_bound_check: d must be >= 2");
  RankBoundCheck r;
  r.rank = inv.rank;
  const double d = inv.d;
  r.bound = k.c3 * std::log(static_cast<double>(inv.q)) * d * d * d / std::log(d);
  r.ok = r.rank <= r.bound;
  return r;
}

SupersingularReport supersingular_family(JacobiEngine& engine, int n) {
  const long q = engine.q();
  if (n < 1) throw std::invalid_argument("supersingular_family: n must be >= 1");
  SupersingularReport r;
  r.q = q;
  r.n = n;
  r.d = static_cast<int>(ipow(static_cast<std::uint64_t>(q), static_cast<unsigned>(n)) + 1);
  if (2 * n > engine.limits().max_orbit_order)
    throw CapExceeded("supersingular_family: orbit order 2n = " + std::to_string(2 * n) + " exceeds the cap");
  r.order = mult_order(q, r.d);
  r.order_ok = r.order == 2 * n;

  const ZetaFactorization Z = assemble(engine, r.d, Lambda::full());
  r.all_q_power = true;
  for (const auto& f : Z.factors) {
    if (f.orbit.cls != OrbitClass::circ) continue;
    ++r.circ_orbits;
    r.circ_size += f.orbit.len;
    if (!f.in_lambda0) r.all_q_power = false;
  }
  r.all_orbits = static_cast<long>(Z.factors.size());
  r.rank = Z.rho;
  r.rank_ok = r.rank == 1 + r.circ_orbits;
  // rank - 1 >= |G_d^circ| / (2n), in integers
  r.growth_ok = static_cast<long>(r.rank - 1) * 2 * n >= r.circ_size;
  return r;
}

SweepResult bs_sweep(JacobiEngine& engine, const std::vector<int>& ds, const BoundConstants& k) {
  SweepResult out;
  const long q = engine.q();
  for (int d : ds) {
    if (gcd(q, d) != 1) {
      out.skipped.emplace_back(d, "not coprime to q");
      continue;
    }
    if (geometric_genus(d) < 1) {
      out.skipped.emplace_back(d, "p_g = 0");
      continue;
    }
    try {
      const ZetaFactorization Z = assemble(engine, d, Lambda::full());
      const FermatInvariants inv = fermat_invariants(Z);
      const WeightReport w = w_total(Z, Lambda::full());
      SweepRow row;
      row.d = d;
      row.p_g = inv.p_g;
      row.rank = inv.rank;
      row.br_reg = inv.br_reg;
      row.bs_ratio = *inv.bs_ratio;
      row.w_total = w.w_total;
      const double pg = static_cast<double>(inv.p_g);
      const double lq = std::log(static_cast<double>(q));
      const double alt = 1 + static_cast<double>(Z.pstar.log_abs()) / (pg * lq);
      if (std::fabs(alt - row.bs_ratio) > 1e-9 * std::max(1.0, std::fabs(alt)))
        throw VerificationFailure("bs_sweep: ratio identity fails at d = " + std::to_string(d));
      const double G = static_cast<double>(d) * d * d;
      row.window_lo = 1 - w.w_total.get_d() / pg;
      row.window_hi = 1 + k.C2 * G * clamped_loglog(G, k.loglog_floor) / (std::log(G) * pg);
      row.in_window = row.window_lo <= row.bs_ratio && row.bs_ratio <= row.window_hi;
      out.rows.push_back(std::move(row));
    } catch (const CapExceeded& e) {
      out.skipped.emplace_back(d, e.what());
      out.cap_exceeded = true;
    }
  }
  return out;
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string sweep_csv_header() { return "d,p_g,rank,br_reg,bs_ratio,w_total,window_lo,window_hi,in_window"; }

std::string sweep_csv(const SweepResult& r) {
  std::ostringstream out;
  out << sweep_csv_header() << "\n";
  for (const auto& row : r.rows)
    out << row.d << "," << row.p_g << "," << row.rank << "," << row.br_reg.get_str() << ","
        << format_double(row.bs_ratio) << "," << row.w_total.get_str() << "," << format_double(row.window_lo) << ","
        << format_double(row.window_hi) << "," << (row.in_window ? "true" : "false") << "\n";
  return out.str();
}

}  // namespace fermat
