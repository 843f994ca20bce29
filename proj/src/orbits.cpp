#include "fermat/orbits.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fermat/arith.hpp"

namespace fermat {

Tuple4 Tuple4::make(int d, std::array<long, 4> a) {
  if (d < 1) throw std::invalid_argument("Tuple4: modulus must be >= 1");
  Tuple4 t;
  t.d = d;
  long s = 0;
  for (int i = 0; i < 4; ++i) {
    t.a[i] = static_cast<int>(mod(a[i], d));
    s += t.a[i];
  }
  if (s % d != 0) throw std::invalid_argument("Tuple4: " + t.str() + " is not in G_" + std::to_string(d));
  return t;
}

Tuple4 Tuple4::scaled(long t) const {
  Tuple4 r = *this;
  for (auto& x : r.a) x = static_cast<int>(mod(static_cast<long>(x) * t, d));
  return r;
}

int Tuple4::d_a() const {
  long g = d;
  for (int x : a) g = gcd(g, x);
  return static_cast<int>(d / g);
}

Tuple4 Tuple4::primitive() const {
  const int da = d_a();
  const int c = d / da;
  Tuple4 r;
  r.d = da;
  for (int i = 0; i < 4; ++i) r.a[i] = a[i] / c;
  return r;
}

std::string Tuple4::str() const {
  std::ostringstream out;
  out << "(" << a[0] << "," << a[1] << "," << a[2] << "," << a[3] << ")";
  return out.str();
}

const char* to_string(OrbitClass c) {
  switch (c) {
    case OrbitClass::zero:
      return "zero";
    case OrbitClass::mixed:
      return "mixed";
    case OrbitClass::circ:
      return "circ";
  }
  return "?";
}

Lambda Lambda::full() {
  Lambda l;
  l.name_ = "full";
  l.test_ = [](const Tuple4&) { return true; };
  return l;
}

Lambda Lambda::circ() {
  Lambda l;
  l.name_ = "circ";
  l.test_ = [](const Tuple4& a) { return a.is_circ(); };
  return l;
}

Lambda Lambda::subgroup(std::vector<std::array<long, 4>> generators) {
  Lambda l;
  std::ostringstream name;
  name << "subgroup:";
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (k) name << ";";
    const auto& h = generators[k];
    name << h[0] << "," << h[1] << "," << h[2] << "," << h[3];
  }
  l.name_ = name.str();
  l.test_ = [gens = std::move(generators)](const Tuple4& a) {
    for (const auto& h : gens) {
      long s = 0;
      for (int i = 0; i < 4; ++i) s += static_cast<long>(a.a[i]) * mod(h[i], a.d);
      if (s % a.d != 0) return false;
    }
    return true;
  };
  return l;
}

Lambda Lambda::predicate(std::string name, std::function<bool(const Tuple4&)> test) {
  Lambda l;
  l.name_ = std::move(name);
  l.test_ = std::move(test);
  return l;
}

Lambda parse_lambda(const std::string& text) {
  if (text == "full") return Lambda::full();
  if (text == "circ") return Lambda::circ();
  const std::string prefix = "subgroup:";
  if (text.rfind(prefix, 0) != 0) throw std::invalid_argument("unknown Lambda '" + text + "'");
  std::vector<std::array<long, 4>> gens;
  std::istringstream groups(text.substr(prefix.size()));
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::array<long, 4> h{};
    std::istringstream in(group);
    std::string field;
    int k = 0;
    while (std::getline(in, field, ',')) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(field, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (k >= 4 || used == 0 || used != field.size())
        throw std::invalid_argument("Lambda generator '" + group + "' must be four integers");
      h[k++] = v;
    }
    if (k != 4) throw std::invalid_argument("Lambda generator '" + group + "' must be four integers");
    gens.push_back(h);
  }
  return Lambda::subgroup(std::move(gens));
}

void for_each_G(int d, const std::function<void(const Tuple4&)>& f) {
  Tuple4 t;
  t.d = d;
  for (int a0 = 0; a0 < d; ++a0)
    for (int a1 = 0; a1 < d; ++a1)
      for (int a2 = 0; a2 < d; ++a2) {
        t.a = {a0, a1, a2, static_cast<int>(mod(-(a0 + a1 + a2), d))};
        f(t);
      }
}

long lambda_size(int d, const Lambda& lambda) {
  long n = 0;
  for_each_G(d, [&](const Tuple4& a) { n += lambda.contains(a); });
  return n;
}

bool unit_stable(int d, const Lambda& lambda) {
  const auto units = units_mod(d);
  bool ok = true;
  for_each_G(d, [&](const Tuple4& a) {
    if (!ok || !lambda.contains(a)) return;
    for (long t : units)
      if (!lambda.contains(a.scaled(t))) {
        ok = false;
        return;
      }
  });
  return ok;
}

std::vector<OrbitRecord> orbits(long q, int d, const Lambda& lambda) {
  if (d < 1) throw std::invalid_argument("orbits: d must be >= 1");
  if (gcd(q, d) != 1) throw std::invalid_argument("orbits: q and d must be coprime");
  auto index = [d](const Tuple4& t) { return (static_cast<std::size_t>(t.a[0]) * d + t.a[1]) * d + t.a[2]; };
  std::vector<char> seen(static_cast<std::size_t>(d) * d * d, 0);
  std::vector<OrbitRecord> out;
  for_each_G(d, [&](const Tuple4& a) {
    if (seen[index(a)] || !lambda.contains(a)) return;
    OrbitRecord rec;
    rec.rep = a;
    Tuple4 b = a;
    int len = 0;
    do {
      if (!lambda.contains(b))
        throw std::invalid_argument("orbits: Lambda (" + lambda.name() + ") is not closed under multiplication by q");
      seen[index(b)] = 1;
      rec.rep = std::min(rec.rep, b);
      b = b.scaled(q);
      ++len;
    } while (b != a);
    rec.d_a = a.d_a();
    rec.len = len;
    if (len != mult_order(q, rec.d_a)) throw VerificationFailure("orbits: orbit length differs from o_q(d_a)");
    rec.cls = a.is_zero() ? OrbitClass::zero : a.is_circ() ? OrbitClass::circ : OrbitClass::mixed;
    out.push_back(rec);
  });
  // for_each_G visits in lexicographic order, so the first member seen is
  // already the minimum; sorting keeps that explicit.
  std::sort(out.begin(), out.end(), [](const OrbitRecord& x, const OrbitRecord& y) { return x.rep < y.rep; });
  return out;
}

double clamped_loglog(double x, double floor, bool* clamped) {
  double v = (x > 1) ? std::log(std::log(x)) : -INFINITY;
  bool c = !(v >= floor);
  if (clamped) *clamped = c;
  return c ? floor : v;
}

OrbitStats orbit_stats(long q, const std::vector<OrbitRecord>& orbs, const BoundConstants& k) {
  OrbitStats s;
  for (const auto& o : orbs) {
    s.lambda_size += o.len;
    s.sum_log_len += std::log(static_cast<double>(o.len));
  }
  s.count = static_cast<long>(orbs.size());
  if (s.lambda_size < 2) throw std::invalid_argument("orbit_stats: |Lambda| must be >= 2");
  const double L = static_cast<double>(s.lambda_size);
  const double lq = std::log(static_cast<double>(q));
  const double ll = clamped_loglog(L, k.loglog_floor, &s.loglog_clamped);
  s.count_bound = 1 + k.c5 * lq * L / std::log(L);
  s.sum_log_bound = k.c6 * lq * L * ll / std::log(L);
  s.count_ok = static_cast<double>(s.count) <= s.count_bound;
  s.sum_log_ok = s.sum_log_len <= s.sum_log_bound;
  return s;
}

std::vector<long> max_gcd_histogram(int d) {
  std::vector<int> g(d);
  for (int x = 0; x < d; ++x) g[x] = static_cast<int>(gcd(d, x));
  std::vector<long> hist(d + 1, 0);
  for (int a0 = 0; a0 < d; ++a0)
    for (int a1 = 0; a1 < d; ++a1) {
      const int m01 = std::max(g[a0], g[a1]);
      const int s = (a0 + a1) % d;
      for (int a2 = 0; a2 < d; ++a2) {
        int a3 = d - s - a2;
        if (a3 < 0) a3 += d;
        if (a3 >= d) a3 -= d;
        ++hist[std::max({m01, g[a2], g[a3]})];
      }
    }
  return hist;
}

BadSetReport bad_set_count(int d, double X, const BoundConstants& k) {
  if (d < 2 || !(X >= 1) || !(X < d)) throw std::invalid_argument("bad_set_count: need 1 <= X < d");
  const auto hist = max_gcd_histogram(d);
  BadSetReport r;
  r.d = d;
  r.total = static_cast<long>(d) * d * d;
  for (int g = 1; g < d; ++g)
    if (g > X) r.count += hist[g];
  r.bound = k.c4 * static_cast<double>(r.total) / X * static_cast<double>(divisor_count(d));
  r.ok = static_cast<double>(r.count) <= r.bound;
  return r;
}

BadSetReport bad_set_count_pow(int d, long u_num, long u_den, const std::vector<long>* hist_in,
                               const BoundConstants& k) {
  if (d < 2 || u_den < 1 || u_num <= 0 || u_num >= u_den)
    throw std::invalid_argument("bad_set_count_pow: need d >= 2 and 0 < u < 1");
  const long c4 = static_cast<long>(k.c4);
  if (static_cast<double>(c4) != k.c4) throw std::invalid_argument("bad_set_count_pow: c4 must be an integer");
  std::vector<long> local;
  if (!hist_in) local = max_gcd_histogram(d);
  const auto& hist = hist_in ? *hist_in : local;

  BadSetReport r;
  r.d = d;
  r.total = static_cast<long>(d) * d * d;
  const unsigned long un = static_cast<unsigned long>(u_num), ud = static_cast<unsigned long>(u_den);
  mpz_class dn;
  mpz_ui_pow_ui(dn.get_mpz_t(), static_cast<unsigned long>(d), un);
  for (int g = 1; g < d; ++g) {
    if (hist[g] == 0) continue;
    mpz_class gd;
    mpz_ui_pow_ui(gd.get_mpz_t(), static_cast<unsigned long>(g), ud);
    if (gd > dn) r.count += hist[g];
  }
  const double X = std::pow(static_cast<double>(d), static_cast<double>(u_num) / static_cast<double>(u_den));
  const long tau = divisor_count(d);
  r.bound = k.c4 * static_cast<double>(r.total) / X * static_cast<double>(tau);
  mpz_class lhs, rhs, base = mpz_class(c4) * r.total * tau;
  mpz_ui_pow_ui(lhs.get_mpz_t(), static_cast<unsigned long>(r.count), ud);
  lhs *= dn;
  mpz_pow_ui(rhs.get_mpz_t(), base.get_mpz_t(), ud);
  r.ok = lhs <= rhs;
  return r;
}

}  // namespace fermat
