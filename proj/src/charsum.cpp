#include "fermat/charsum.hpp"

#include <stdexcept>
#include <string>

#include "fermat/arith.hpp"
#include "fermat/cache.hpp"

namespace fermat {
namespace {

void require_circ(const Tuple4& prim, const FieldView& F) {
  if (!prim.is_circ()) throw std::invalid_argument("Jacobi sum: " + prim.str() + " has a zero coordinate");
  if (F.order() % static_cast<std::uint64_t>(prim.d) != 0)
    throw std::invalid_argument("Jacobi sum: d_a = " + std::to_string(prim.d) + " does not divide |F^x| = " +
                                std::to_string(F.order()));
}

CycElement from_counts(int m, const std::vector<std::uint64_t>& cnt) {
  CycElement x(m);
  std::vector<mpz_class> c(m);
  for (int r = 0; r < m; ++r) c[r] = static_cast<unsigned long>(cnt[r]);
  return CycElement(m, c);
}

}  // namespace

CycElement jacobi_direct(const FieldView& F, const Tuple4& prim) {
  require_circ(prim, F);
  const FieldTable& T = F.field();
  const int m = prim.d;
  const std::int64_t n = static_cast<std::int64_t>(F.order());
  const std::uint64_t stride = F.stride();

  // Zech logarithms of the subfield, relative to gamma
  std::vector<std::int32_t> zv(n);
  for (std::int64_t i = 0; i < n; ++i) {
    std::int64_t z = T.zech(static_cast<std::uint64_t>(i) * stride);
    if (z == FieldTable::kNoLog) {
      zv[i] = -1;
    } else {
      if (static_cast<std::uint64_t>(z) % stride != 0) throw VerificationFailure("jacobi_direct: subfield not closed");
      zv[i] = static_cast<std::int32_t>(static_cast<std::uint64_t>(z) / stride);
    }
  }
  const std::int64_t h = (T.p() == 2) ? 0 : n / 2;  // log of -1
  const long a0 = prim.a[0], a1 = prim.a[1], a2 = prim.a[2];
  std::vector<std::int32_t> t1(n), t2(n);
  for (std::int64_t j = 0; j < n; ++j) {
    t1[j] = static_cast<std::int32_t>(a1 * (j % m) % m);
    t2[j] = static_cast<std::int32_t>(a2 * (j % m) % m);
  }
  std::vector<std::uint64_t> cnt3(3 * m, 0);
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int32_t zi = zv[i];
    if (zi < 0) {
      // 1 + y0 = 0, so y2 = -y1
      const std::int64_t c = (a0 * (i % m) + a2 * (h % m)) % m;
      for (std::int64_t j = 0; j < n; ++j) ++cnt3[c + t1[j] + t2[j]];
    } else {
      // 1 + y0 + y1 = gamma^zi (1 + gamma^{j - zi})
      const std::int64_t c = (a0 * (i % m) + a2 * ((h + zi) % m)) % m;
      std::int64_t u = n - zi;
      for (std::int64_t j = 0; j < n; ++j, ++u) {
        if (u >= n) u -= n;
        const std::int32_t t = zv[u];
        if (t < 0) continue;
        ++cnt3[c + t1[j] + t2[t]];
      }
    }
  }
  std::vector<std::uint64_t> cnt(m, 0);
  for (int r = 0; r < 3 * m; ++r) cnt[r % m] += cnt3[r];
  return from_counts(m, cnt);
}

CycElement jacobi_raw(const FieldView& F, const Tuple4& prim) {
  require_circ(prim, F);
  const FieldTable& T = F.field();
  const int m = prim.d;
  const std::uint64_t n = F.order();
  std::vector<Elem> elems{0};
  for (std::uint64_t k = 0; k < n; ++k) elems.push_back(F.element(k));
  // character exponent of a nonzero element, or -1 for zero
  auto lg = [&](Elem x) -> std::int64_t { return x == 0 ? -1 : static_cast<std::int64_t>(F.dlog(x) % m); };
  std::vector<std::uint64_t> cnt(m, 0);
  for (Elem x0 : elems)
    for (Elem x1 : elems)
      for (Elem x2 : elems) {
        Elem x3 = T.neg(T.add(T.add(x0, x1), x2));
        const Elem xs[4] = {x0, x1, x2, x3};
        long e = 0;
        bool vanish = false;
        for (int i = 0; i < 4; ++i) {
          std::int64_t l = lg(xs[i]);
          if (l < 0) {
            vanish = true;  // every chi_i is nontrivial
            break;
          }
          e += prim.a[i] * l;
        }
        if (!vanish) ++cnt[e % m];
      }
  return from_counts(m, cnt).divexact(static_cast<unsigned long>(n));
}

GaussTable::GaussTable(const FieldView& F, int d_a) : d_a_(d_a), p_(F.field().p()), Q_(F.size()) {
  if (d_a < 1 || F.order() % static_cast<std::uint64_t>(d_a) != 0)
    throw std::invalid_argument("GaussTable: d_a must divide |F^x|");
  const auto tr = F.traces();
  hist_.assign(static_cast<std::size_t>(d_a) * p_, 0);
  for (std::uint64_t k = 0; k < tr.size(); ++k) ++hist_[(k % d_a) * p_ + tr[k]];
}

CycElement GaussTable::gauss(long c) const {
  c = mod(c, d_a_);
  if (c == 0) throw std::invalid_argument("gauss_sum: trivial character");
  const int M = d_a_ * p_;
  std::vector<mpz_class> coeffs(M);
  // zeta_M^{i p + j d_a} = zeta_{d_a}^i zeta_p^j
  for (int r = 0; r < d_a_; ++r) {
    const long i = c * r % d_a_;
    for (int t = 0; t < p_; ++t) {
      std::uint64_t h = hist_[static_cast<std::size_t>(r) * p_ + t];
      if (h) coeffs[(i * p_ + static_cast<long>(t) * d_a_) % M] += static_cast<unsigned long>(h);
    }
  }
  return CycElement(M, coeffs);
}

CycElement gauss_sum(const FieldView& F, std::uint64_t e) {
  const std::uint64_t n = F.order();
  e %= n;
  if (e == 0) throw std::invalid_argument("gauss_sum: trivial character");
  const std::uint64_t g = static_cast<std::uint64_t>(gcd(static_cast<long>(e), static_cast<long>(n)));
  return GaussTable(F, static_cast<int>(n / g)).gauss(static_cast<long>(e / g));
}

CycElement jacobi_gauss(const GaussTable& G, const Tuple4& prim) {
  if (prim.d != G.d_a()) throw std::invalid_argument("jacobi_gauss: level mismatch");
  if (!prim.is_circ()) throw std::invalid_argument("jacobi_gauss: " + prim.str() + " has a zero coordinate");
  CycElement prod = G.gauss(prim.a[0]);
  for (int i = 1; i < 4; ++i) prod = prod * G.gauss(prim.a[i]);
  return descend(prod, prim.d).divexact(static_cast<unsigned long>(G.field_size()));
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::convention:
      return "convention";
    case Provenance::direct:
      return "direct";
    case Provenance::gauss:
      return "gauss";
    case Provenance::cache:
      return "cache";
  }
  return "?";
}

JacobiEngine::JacobiEngine(long q, Limits lim, JacobiCache* cache) : q_(q), lim_(lim), cache_(cache) {
  auto [p, f] = prime_power(q);
  p_ = p;
  f_ = f;
}

std::shared_ptr<const FieldView> JacobiEngine::view(int big, int L) {
  if (big < 1 || L < 1 || big % L != 0) throw std::invalid_argument("JacobiEngine::view: L must divide big");
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = views_.find({big, L});
    if (it != views_.end()) return it->second;
  }
  std::shared_ptr<const FieldTable> table;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = tables_.find(big);
    if (it != tables_.end()) table = it->second;
  }
  if (!table) {
    auto built = std::make_shared<const FieldTable>(build_field(p_, f_ * big, lim_.max_field));
    std::lock_guard<std::mutex> lock(mu_);
    table = tables_.emplace(big, built).first->second;
  }
  auto v = std::make_shared<const FieldView>(table, f_ * L);
  std::lock_guard<std::mutex> lock(mu_);
  return views_.emplace(std::make_pair(big, L), v).first->second;
}

std::shared_ptr<const GaussTable> JacobiEngine::gauss_table(int big, int L, int d_a) {
  const auto key = std::make_tuple(big, L, d_a);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = gauss_.find(key);
    if (it != gauss_.end()) return it->second;
  }
  auto g = std::make_shared<const GaussTable>(*view(big, L), d_a);
  std::lock_guard<std::mutex> lock(mu_);
  return gauss_.emplace(key, g).first->second;
}

CycElement JacobiEngine::evaluate(int big, int L, const Tuple4& prim) {
  auto F = view(big, L);
  if (F->size() <= lim_.direct_cap) {
    std::lock_guard<std::mutex> lock(mu_);
    ++counters_.direct;
  } else {
    std::lock_guard<std::mutex> lock(mu_);
    ++counters_.gauss;
  }
  if (F->size() <= lim_.direct_cap) return jacobi_direct(*F, prim);
  return jacobi_gauss(*gauss_table(big, L, prim.d), prim);
}

JacobiRecord JacobiEngine::jacobi(const Tuple4& a) {
  if (a.is_zero()) return {CycElement::constant(1, q_), Provenance::convention};
  const int dA = a.d_a();
  if (gcd(q_, dA) != 1) throw std::invalid_argument("jacobi: q and d must be coprime");
  if (!a.is_circ()) return {CycElement(dA), Provenance::convention};
  const Tuple4 prim = a.primitive();
  const int L = mult_order(q_, dA);
  if (L > lim_.max_orbit_order)
    throw CapExceeded("orbit of " + a.str() + " mod " + std::to_string(a.d) + " has order " + std::to_string(L) +
                      " > max orbit order " + std::to_string(lim_.max_orbit_order));
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(prim);
    if (it != memo_.end()) return it->second;
  }
  const mpz_class qL2 = mpz_pow(q_, 2UL * L);
  auto riemann_ok = [&](const CycElement& v) {
    auto n = (v * v.conj()).as_rational_integer();
    return n && *n == qL2;
  };

  JacobiRecord rec;
  bool have = false;
  if (cache_) {
    if (auto v = cache_->get(p_, q_, prim)) {
      if (v->conductor() == dA && riemann_ok(*v)) {
        rec = {*v, Provenance::cache};
        have = true;
        std::lock_guard<std::mutex> lock(mu_);
        ++counters_.cache_hits;
      }
    }
  }
  if (!have) {
    auto F = field(L);
    const CycElement v = jacobi_gauss(*gauss_table(L, L, dA), prim);
    bool check = F->size() <= lim_.spot_check_cap;
    {
      std::lock_guard<std::mutex> lock(mu_);
      ++counters_.gauss;
      if (!check && F->size() <= lim_.direct_cap && !calibrated_[{L, dA}]) check = true;
    }
    if (check) {
      const CycElement w = jacobi_direct(*F, prim);
      if (!(w == v))
        throw VerificationFailure("Gauss-sum path disagrees with the direct sum for " + prim.str() + " mod " +
                                  std::to_string(dA) + " over F_" + std::to_string(F->size()));
      std::lock_guard<std::mutex> lock(mu_);
      ++counters_.direct;
      ++counters_.spot_checks;
      calibrated_[{L, dA}] = true;
    }
    if (!riemann_ok(v))
      throw VerificationFailure("Jacobi sum for " + prim.str() + " mod " + std::to_string(dA) +
                                " does not have absolute value q^|A|");
    rec = {v.canonical(), Provenance::gauss};
    if (cache_) cache_->put(p_, q_, prim, rec.value);
  }
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.emplace(prim, rec).first->second;
}

CycElement JacobiEngine::jacobi_extension(const Tuple4& a, int s) {
  if (s < 1) throw std::invalid_argument("jacobi_extension: s must be >= 1");
  if (a.is_zero()) return CycElement::constant(1, mpz_pow(q_, static_cast<unsigned long>(s)));
  const int dA = a.d_a();
  if (!a.is_circ()) return CycElement(dA);
  const Tuple4 prim = a.primitive();
  const int L = mult_order(q_, dA);
  if (L > lim_.max_orbit_order) throw CapExceeded("jacobi_extension: orbit order above cap");
  const CycElement small = evaluate(L * s, L, prim);
  const CycElement large = evaluate(L * s, L * s, prim);
  if (!(large == small.pow(static_cast<unsigned long>(s))))
    throw VerificationFailure("Davenport-Hasse relation fails for " + prim.str() + " mod " + std::to_string(dA) +
                              ", s = " + std::to_string(s));
  return large.canonical();
}

EngineCounters JacobiEngine::counters() const {
  std::lock_guard<std::mutex> lock(mu_);
  return counters_;
}

CycElement jacobi_direct(long q, const Tuple4& a, const Limits& lim) {
  if (a.is_zero()) return CycElement::constant(1, q);
  if (!a.is_circ()) return CycElement(a.d_a());
  const Tuple4 prim = a.primitive();
  const int L = mult_order(q, prim.d);
  if (L > lim.max_orbit_order) throw CapExceeded("jacobi_direct: orbit order above cap");
  auto [p, f] = prime_power(q);
  const std::uint64_t Q = ipow(static_cast<std::uint64_t>(q), static_cast<unsigned>(L));
  if (Q > lim.direct_cap)
    throw CapExceeded("jacobi_direct: field of " + std::to_string(Q) + " elements exceeds the direct-sum cap");
  auto T = std::make_shared<const FieldTable>(build_field(p, f * L, lim.max_field));
  return jacobi_direct(FieldView(T, f * L), prim);
}

CycElement jacobi_fast(long q, const Tuple4& a, const Limits& lim) {
  if (!a.is_circ()) throw std::invalid_argument("jacobi_fast: " + a.str() + " is not in G_d^circ");
  const Tuple4 prim = a.primitive();
  const int L = mult_order(q, prim.d);
  if (L > lim.max_orbit_order) throw CapExceeded("jacobi_fast: orbit order above cap");
  auto [p, f] = prime_power(q);
  auto T = std::make_shared<const FieldTable>(build_field(p, f * L, lim.max_field));
  return jacobi_gauss(GaussTable(FieldView(T, f * L), prim.d), prim);
}

CycElement jacobi_extension(long q, const Tuple4& a, int s, const Limits& lim) {
  JacobiEngine engine(q, lim);
  return engine.jacobi_extension(a, s);
}

}  // namespace fermat
