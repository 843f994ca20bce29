#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <utility>

#include "fermat/common.hpp"
#include "fermat/cyclo.hpp"
#include "fermat/ffield.hpp"
#include "fermat/orbits.hpp"

namespace fermat {

class JacobiCache;

// Characters are chi_i(gamma^k) = zeta_{d_a}^{a_i k}, gamma the generator of the
// view, a a primitive tuple at level d_a with d_a | |F| - 1.

/// Dehomogenized O(Q^2) sum: x3 = 1, x0 = y0, x1 = y1, x2 = -1 - y0 - y1.
/// Requires a in G_{d_a}^circ. Result at conductor d_a.
CycElement jacobi_direct(const FieldView& F, const Tuple4& prim);

/// The raw definition, (1/(Q-1)) sum over x0 + x1 + x2 + x3 = 0 in F^4 with
/// chi_i(0) = 0. O(Q^3); meant as a test oracle for tiny fields.
CycElement jacobi_raw(const FieldView& F, const Tuple4& prim);

/// All Gauss sums of characters of order dividing d_a on one field, from a
/// single pass over the trace table.
class GaussTable {
 public:
  GaussTable(const FieldView& F, int d_a);
  int d_a() const { return d_a_; }
  int p() const { return p_; }
  std::uint64_t field_size() const { return Q_; }
  /// g(chi^c) = sum_{x != 0} zeta_{d_a}^{c dlog x} zeta_p^{Tr x}, conductor d_a * p.
  /// c = 0 mod d_a is rejected.
  CycElement gauss(long c) const;

 private:
  int d_a_;
  int p_;
  std::uint64_t Q_;
  std::vector<std::uint64_t> hist_;  // hist_[r * p + t] = #{k : k = r mod d_a, Tr(gamma^k) = t}
};

/// Gauss sum for the character gamma^k -> zeta_{Q-1}^{e k}; e != 0 mod Q-1.
/// Conductor lcm(ord, p) written as ord * p, ord the order of the character.
CycElement gauss_sum(const FieldView& F, std::uint64_t e);

/// g(chi_0) g(chi_1) g(chi_2) g(chi_3) / Q, brought down to conductor d_a.
CycElement jacobi_gauss(const GaussTable& G, const Tuple4& prim);

/// Standalone entry points on the field F_{q^|A|}. a is any tuple in G_d; the
/// result is at conductor d_a.
CycElement jacobi_direct(long q, const Tuple4& a, const Limits& lim = {});
CycElement jacobi_fast(long q, const Tuple4& a, const Limits& lim = {});

/// Ja relative to F_{q^{s|A|}}, checked against Ja(a)^s with both sums taken
/// inside the same field so that the characters are norm-compatible. Throws
/// VerificationFailure on mismatch, CapExceeded if q^{s|A|} is too large.
CycElement jacobi_extension(long q, const Tuple4& a, int s, const Limits& lim = {});

enum class Provenance { convention, direct, gauss, cache };
const char* to_string(Provenance p);

struct JacobiRecord {
  CycElement value;  // conductor d_a
  Provenance provenance = Provenance::convention;
};

struct EngineCounters {
  long direct = 0;
  long gauss = 0;
  long cache_hits = 0;
  long spot_checks = 0;
};

/// Memoizing Jacobi-sum evaluator for one q. Thread-safe: distinct orbits may
/// be requested concurrently; fields and Gauss tables are shared read-only.
class JacobiEngine {
 public:
  explicit JacobiEngine(long q, Limits lim = {}, JacobiCache* cache = nullptr);

  long q() const { return q_; }
  int p() const { return p_; }
  const Limits& limits() const { return lim_; }

  /// Ja(a) at conductor d_a.
  JacobiRecord jacobi(const Tuple4& a);
  /// Ja(a) embedded at conductor d.
  CycElement jacobi_at(const Tuple4& a) { return jacobi(a).value.embed(a.d); }

  /// Ja relative to F_{q^{s|A|}}, checked against Ja(a)^s inside one field
  /// (see the free function). Result at conductor d_a.
  CycElement jacobi_extension(const Tuple4& a, int s);

  /// The degree-L subfield of F_{q^big}; view(L, L) is F_{q^L} itself.
  std::shared_ptr<const FieldView> view(int big, int L);
  std::shared_ptr<const FieldView> field(int L) { return view(L, L); }
  std::shared_ptr<const GaussTable> gauss_table(int big, int L, int d_a);

  EngineCounters counters() const;

 private:
  long q_;
  int p_, f_;
  Limits lim_;
  JacobiCache* cache_;
  mutable std::mutex mu_;
  // Sums on a view with at most direct_cap elements go through the direct
  // path, larger ones through Gauss sums.
  CycElement evaluate(int big, int L, const Tuple4& prim);

  std::map<int, std::shared_ptr<const FieldTable>> tables_;
  std::map<std::pair<int, int>, std::shared_ptr<const FieldView>> views_;
  std::map<std::tuple<int, int, int>, std::shared_ptr<const GaussTable>> gauss_;
  std::map<Tuple4, JacobiRecord> memo_;
  std::map<std::pair<int, int>, bool> calibrated_;
  EngineCounters counters_;
};

}  // namespace fermat
