#include "fermat/equidist.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "fermat/arith.hpp"

namespace fermat {

PointSample PointSample::make(std::vector<mpq_class> pts) {
  if (pts.empty()) throw std::invalid_argument("PointSample: empty sample");
  for (auto& x : pts) {
    x.canonicalize();
    if (x < 0 || x > 1) throw std::invalid_argument("PointSample: point " + x.get_str() + " outside [0, 1]");
  }
  return PointSample{std::move(pts)};
}

BVFunction BVFunction::make(std::vector<mpq_class> t, std::vector<mpq_class> v) {
  if (t.size() < 2 || t.size() != v.size()) throw std::invalid_argument("BVFunction: need matching breakpoints");
  if (t.front() != 0 || t.back() != 1) throw std::invalid_argument("BVFunction: domain must be [0, 1]");
  for (std::size_t j = 1; j < t.size(); ++j)
    if (!(t[j - 1] < t[j])) throw std::invalid_argument("BVFunction: breakpoints must increase strictly");
  return BVFunction{std::move(t), std::move(v)};
}

BVFunction BVFunction::identity() { return make({0, 1}, {0, 1}); }

mpq_class BVFunction::operator()(const mpq_class& x) const {
  if (x < 0 || x > 1) throw std::invalid_argument("BVFunction: argument outside [0, 1]");
  auto it = std::upper_bound(t.begin(), t.end(), x);
  std::size_t j = (it == t.end()) ? t.size() - 1 : static_cast<std::size_t>(it - t.begin());
  if (j == 0) j = 1;
  mpq_class r = v[j - 1] + (v[j] - v[j - 1]) * (x - t[j - 1]) / (t[j] - t[j - 1]);
  r.canonicalize();
  return r;
}

mpq_class BVFunction::integral() const {
  mpq_class s = 0;
  for (std::size_t j = 1; j < t.size(); ++j) s += (t[j] - t[j - 1]) * (v[j] + v[j - 1]) / 2;
  s.canonicalize();
  return s;
}

mpq_class total_variation(const BVFunction& F) {
  mpq_class s = 0;
  for (std::size_t j = 1; j < F.v.size(); ++j) s += abs(F.v[j] - F.v[j - 1]);
  return s;
}

mpq_class discrepancy(const PointSample& S) {
  std::vector<mpq_class> x = S.points;
  std::sort(x.begin(), x.end());
  const long N = static_cast<long>(x.size());
  mpq_class hi, lo;
  for (long i = 1; i <= N; ++i) {
    mpq_class v = mpq_class(i, N) - x[i - 1];
    v.canonicalize();
    if (i == 1 || v > hi) hi = v;
    if (i == 1 || v < lo) lo = v;
  }
  mpq_class D = mpq_class(1, N) + hi - lo;
  D.canonicalize();
  return D;
}

mpq_class discrepancy_brute(const PointSample& S) {
  std::vector<mpq_class> x = S.points;
  std::sort(x.begin(), x.end());
  const long N = static_cast<long>(x.size());
  std::vector<mpq_class> ends = x;
  ends.push_back(0);
  ends.push_back(1);
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());

  auto below = [&](const mpq_class& b, bool inclusive) {
    return inclusive ? std::upper_bound(x.begin(), x.end(), b) - x.begin()
                     : std::lower_bound(x.begin(), x.end(), b) - x.begin();
  };
  mpq_class best = 0;
  for (std::size_t i = 0; i < ends.size(); ++i)
    for (std::size_t j = i; j < ends.size(); ++j) {
      const mpq_class& a = ends[i];
      const mpq_class& b = ends[j];
      const mpq_class len = b - a;
      for (int closed_a = 0; closed_a < 2; ++closed_a)
        for (int closed_b = 0; closed_b < 2; ++closed_b) {
          if (i == j && !(closed_a && closed_b)) continue;  // empty interval
          long cnt = below(b, closed_b) - below(a, !closed_a);
          mpq_class dev = abs(len - mpq_class(cnt, N));
          if (dev > best) best = dev;
        }
    }
  best.canonicalize();
  return best;
}

namespace {

// exp(2 pi i r) for a rational r, reduced mod 1 exactly first
std::complex<double> unit_circle(const mpq_class& r) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  mpq_class frac = r - fl;
  const double ang = 2 * std::numbers::pi * frac.get_d();
  return {std::cos(ang), std::sin(ang)};
}

}  // namespace

ErdosTuran erdos_turan_bound(const PointSample& S, int K) {
  if (K < 1) throw std::invalid_argument("erdos_turan_bound: K must be >= 1");
  const double N = static_cast<double>(S.size());
  double sum = 0, comp = 0;
  for (int k = 1; k <= K; ++k) {
    std::complex<double> acc = 0, c = 0;
    for (const auto& x : S.points) {
      // compensated summation of the exponential sum
      std::complex<double> y = unit_circle(x * k) - c;
      std::complex<double> t = acc + y;
      c = (t - acc) - y;
      acc = t;
    }
    double term = std::abs(acc) / N / k;
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  ErdosTuran r;
  r.bound = 6.0 / (K + 1) + 4.0 / std::numbers::pi * sum;
  r.discrepancy = discrepancy(S).get_d();
  r.ok = r.discrepancy <= r.bound + 1e-9;
  return r;
}

KoksmaResult koksma_check(const BVFunction& F, const PointSample& S) {
  mpq_class avg = 0;
  for (const auto& x : S.points) avg += F(x);
  avg /= static_cast<long>(S.size());
  KoksmaResult r;
  r.lhs = abs(F.integral() - avg);
  r.lhs.canonicalize();
  r.rhs = total_variation(F) * discrepancy(S);
  r.rhs.canonicalize();
  r.ok = r.lhs <= r.rhs;
  return r;
}

std::vector<long> subgroup_generated(long p, int d) {
  if (gcd(p, d) != 1) throw std::invalid_argument("subgroup_generated: p and d must be coprime");
  return cyclic_subgroup(mod(p, d), d);
}

mpq_class theta_average(int d, long a_d, const std::vector<long>& H, const BVFunction& F) {
  if (d < 2) throw std::invalid_argument("theta_average: d must be >= 2");
  if (H.empty()) throw std::invalid_argument("theta_average: H is empty");
  if (gcd(a_d, d) != 1) throw std::invalid_argument("theta_average: a_d must be a unit");
  for (long h : H)
    if (gcd(h, d) != 1) throw std::invalid_argument("theta_average: H contains the non-unit " + std::to_string(h));
  const mpq_class I = F.integral();
  const auto units = units_mod(d);
  const long ad = mod(a_d, d);
  mpq_class total = 0;
  for (long g : units) {
    mpq_class s = 0;
    for (long h : H) s += F(mpq_class(ad * g % d * mod(h, d) % d, d));
    s /= static_cast<long>(H.size());
    total += abs(I - s);
  }
  total /= static_cast<long>(units.size());
  total.canonicalize();
  return total;
}

EquidisCheck equidis_bound_check(int d, const std::vector<long>& H, double eps) {
  if (d < 16) throw std::invalid_argument("equidis_bound_check: d must be >= 16");
  if (!(eps > 0 && eps < 0.25)) throw std::invalid_argument("equidis_bound_check: eps must lie in (0, 1/4)");
  EquidisCheck c;
  c.theta = theta_average(d, 1, H, BVFunction::identity());
  const double pi = std::numbers::pi;
  c.c7 = 12 + std::exp(std::numbers::egamma) / (36 * pi * pi * pi) / (eps * eps);
  c.f = std::log(std::log(static_cast<double>(d))) / static_cast<double>(H.size());
  c.bound = c.c7 * std::pow(c.f, 0.25 - eps);
  c.ok = c.theta.get_d() <= c.bound + 1e-9;
  return c;
}

FourierCheck fourier_avg_check(int d, const std::vector<long>& H, long k, double beta) {
  if (d < 16) throw std::invalid_argument("fourier_avg_check: d must be >= 16");
  if (mod(k, d) == 0) throw std::invalid_argument("fourier_avg_check: k must be nonzero mod d");
  if (!(beta > 0 && beta <= 1)) throw std::invalid_argument("fourier_avg_check: beta must lie in (0, 1]");
  if (H.empty()) throw std::invalid_argument("fourier_avg_check: H is empty");
  const auto units = units_mod(d);
  double total = 0;
  for (long g : units) {
    const long y = mod(k * g, d);
    std::complex<double> acc = 0;
    for (long h : H) acc += unit_circle(mpq_class(mod(h, d) * y % d, d));
    total += std::abs(acc) / static_cast<double>(H.size());
  }
  FourierCheck r;
  r.lhs = total / static_cast<double>(units.size());
  r.rhs = beta + std::exp(std::numbers::egamma) * std::log(std::log(static_cast<double>(d))) *
                     static_cast<double>(gcd(k, d)) / (static_cast<double>(H.size()) * beta * beta);
  r.ok = r.lhs <= r.rhs + 1e-9;
  return r;
}

mpq_class theta_p(long a, int d, long p) {
  if (d < 2 || mod(a, d) == 0) throw std::invalid_argument("theta_p: a must be nonzero mod d");
  const auto H = subgroup_generated(p, d);
  const long D1 = static_cast<long>(H.size()) * d;
  const auto units = units_mod(d);
  const long aa = mod(a, d);
  long total = 0;
  for (long g : units) {
    long s = 0;
    for (long pi : H) s += aa * pi % d * g % d;
    total += std::labs(D1 - 2 * s);
  }
  mpq_class r(total, 2 * D1 * static_cast<long>(units.size()));
  r.canonicalize();
  return r;
}

std::string equidist_csv_header() { return "d,H_size,theta,bound,ok"; }

std::string equidist_csv_row(int d, const std::vector<long>& H, const EquidisCheck& c) {
  std::ostringstream out;
  out.precision(17);
  out << d << "," << H.size() << "," << c.theta.get_str() << "," << c.bound << "," << (c.ok ? "true" : "false");
  return out.str();
}

}  // namespace fermat
