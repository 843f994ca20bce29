#include "fermat/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "fermat/arith.hpp"
#include "fermat/common.hpp"

namespace fermat {

void poly_trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  poly_trim(r);
  return r;
}

IntPoly poly_rem_monic(IntPoly a, const IntPoly& f) {
  poly_trim(a);
  const std::size_t n = f.size() - 1;
  for (std::size_t i = a.size(); i-- > n;) {
    if (a[i] == 0) continue;
    mpz_class c = a[i];
    for (std::size_t j = 0; j <= n; ++j) a[i - n + j] -= c * f[j];
  }
  if (a.size() > n) a.resize(n);
  poly_trim(a);
  return a;
}

namespace {

// Quotient of a by a monic divisor f; the division must be exact.
IntPoly poly_div_monic(IntPoly a, const IntPoly& f) {
  poly_trim(a);
  const std::size_t n = f.size() - 1;
  if (a.size() < f.size()) return {};
  IntPoly quo(a.size() - n, 0);
  for (std::size_t i = a.size(); i-- > n;) {
    mpz_class c = a[i];
    quo[i - n] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= n; ++j) a[i - n + j] -= c * f[j];
  }
  poly_trim(a);
  if (!a.empty()) throw VerificationFailure("poly_div_monic: inexact division");
  return quo;
}

std::mutex phi_mutex;
std::map<int, IntPoly> phi_cache;

long inverse_mod(long a, long m) {
  if (m == 1) return 0;
  a = mod(a, m);
  for (long x = 1; x < m; ++x)
    if (a * x % m == 1) return x;
  throw std::invalid_argument("inverse_mod: not invertible");
}

}  // namespace

const IntPoly& cyclotomic_poly(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_poly: m must be >= 1");
  {
    std::lock_guard<std::mutex> lock(phi_mutex);
    auto it = phi_cache.find(m);
    if (it != phi_cache.end()) return it->second;
  }
  // X^m - 1 divided by Phi_k for the proper divisors k of m
  IntPoly r(m + 1, 0);
  r[0] = -1;
  r[m] = 1;
  for (long k : divisors(m))
    if (k < m) r = poly_div_monic(std::move(r), cyclotomic_poly(static_cast<int>(k)));
  std::lock_guard<std::mutex> lock(phi_mutex);
  return phi_cache.emplace(m, std::move(r)).first->second;
}

CycElement::CycElement(int m) : m_(m), c_(m, 0) {
  if (m < 1) throw std::invalid_argument("CycElement: conductor must be >= 1");
}

CycElement::CycElement(int m, const std::vector<mpz_class>& coeffs) : CycElement(m) {
  for (std::size_t k = 0; k < coeffs.size(); ++k) c_[k % m] += coeffs[k];
}

CycElement CycElement::constant(int m, const mpz_class& n) {
  CycElement x(m);
  x.c_[0] = n;
  return x;
}

CycElement CycElement::root(int m, long k) {
  CycElement x(m);
  x.c_[mod(k, m)] = 1;
  return x;
}

CycElement CycElement::canonical() const {
  IntPoly r = poly_rem_monic(c_, cyclotomic_poly(m_));
  CycElement out(m_);
  for (std::size_t k = 0; k < r.size(); ++k) out.c_[k] = r[k];
  return out;
}

bool CycElement::is_zero() const {
  for (const auto& v : canonical().c_)
    if (v != 0) return false;
  return true;
}

std::optional<mpz_class> CycElement::as_rational_integer() const {
  CycElement c = canonical();
  for (int k = 1; k < m_; ++k)
    if (c.c_[k] != 0) return std::nullopt;
  return c.c_[0];
}

CycElement CycElement::embed(int m2) const {
  if (m2 < 1 || m2 % m_ != 0)
    throw std::invalid_argument("embed: " + std::to_string(m_) + " does not divide " + std::to_string(m2));
  CycElement out(m2);
  const int step = m2 / m_;
  for (int k = 0; k < m_; ++k) out.c_[k * step] = c_[k];
  return out;
}

CycElement CycElement::galois(long t) const {
  if (gcd(t, m_) != 1)
    throw std::invalid_argument("galois_apply: t = " + std::to_string(t) + " is not a unit mod " + std::to_string(m_));
  CycElement out(m_);
  const long tt = mod(t, m_);
  for (long k = 0; k < m_; ++k) out.c_[k * tt % m_] = c_[k];
  return out;
}

CycElement CycElement::pow(unsigned long e) const {
  CycElement r = constant(m_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

CycElement CycElement::scaled(const mpz_class& k) const {
  CycElement out = *this;
  for (auto& v : out.c_) v *= k;
  return out;
}

CycElement CycElement::divexact(const mpz_class& k) const {
  CycElement out = canonical();
  for (auto& v : out.c_) {
    if (!mpz_divisible_p(v.get_mpz_t(), k.get_mpz_t()))
      throw VerificationFailure("CycElement::divexact: not divisible by " + k.get_str());
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), k.get_mpz_t());
  }
  return out;
}

CycElement& CycElement::operator+=(const CycElement& o) {
  if (o.m_ != m_) throw std::invalid_argument("CycElement: conductor mismatch");
  for (int k = 0; k < m_; ++k) c_[k] += o.c_[k];
  return *this;
}

CycElement& CycElement::operator-=(const CycElement& o) {
  if (o.m_ != m_) throw std::invalid_argument("CycElement: conductor mismatch");
  for (int k = 0; k < m_; ++k) c_[k] -= o.c_[k];
  return *this;
}

CycElement CycElement::operator-() const {
  CycElement out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

CycElement operator*(const CycElement& a, const CycElement& b) {
  if (a.m_ != b.m_) throw std::invalid_argument("CycElement: conductor mismatch");
  const int m = a.m_;
  CycElement out(m);
  for (int i = 0; i < m; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < m; ++j) {
      if (b.c_[j] == 0) continue;
      int k = i + j;
      if (k >= m) k -= m;
      mpz_addmul(out.c_[k].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return out;
}

bool operator==(const CycElement& a, const CycElement& b) {
  if (a.m_ != b.m_) return false;
  return (a - b).is_zero();
}

CycElement galois_apply(long t, const CycElement& x) { return x.galois(t); }

CycElement descend(const CycElement& x, int m) {
  const int M = x.conductor();
  if (m < 1 || M % m != 0) throw std::invalid_argument("descend: bad target conductor");
  const int p = M / m;
  if (p == 1) return x;
  if (!is_prime(p) || gcd(p, m) != 1) throw std::invalid_argument("descend: M/m must be a prime coprime to m");
  // zeta_M^k = zeta_m^i zeta_p^j with k = i p + j m (mod M)
  const long inv_p = inverse_mod(p, m), inv_m = inverse_mod(m, p);
  std::vector<std::vector<mpz_class>> slice(p, std::vector<mpz_class>(m, 0));
  for (long k = 0; k < M; ++k) {
    const auto& v = x.coeffs()[k];
    if (v == 0) continue;
    slice[k * inv_m % p][k * inv_p % m] += v;
  }
  // 1 + zeta_p + ... + zeta_p^{p-1} = 0 removes the last slice
  for (int j = 0; j + 1 < p; ++j)
    for (int i = 0; i < m; ++i) slice[j][i] -= slice[p - 1][i];
  for (int j = 1; j + 1 < p; ++j)
    if (!CycElement(m, slice[j]).is_zero())
      throw VerificationFailure("descend: element does not lie in Q(zeta_" + std::to_string(m) + ")");
  return CycElement(m, slice[0]);
}

std::string to_string(const CycElement& x) {
  const CycElement c = x.canonical();
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k < c.conductor(); ++k) {
    const mpz_class& v = c.coeffs()[k];
    if (v == 0) continue;
    mpz_class a = abs(v);
    if (first)
      out << (v < 0 ? "-" : "");
    else
      out << (v < 0 ? " - " : " + ");
    if (k == 0)
      out << a;
    else {
      if (a != 1) out << a << "*";
      out << "z";
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  if (first) out << "0";
  out << " (m=" << c.conductor() << ")";
  return out.str();
}

long double log_abs(const mpz_class& n) {
  if (n == 0) throw std::domain_error("log_abs: zero");
  mpz_class a = abs(n);
  const std::size_t bits = mpz_sizeinbase(a.get_mpz_t(), 2);
  if (bits <= 64) return std::log(static_cast<long double>(mpz_get_ui(a.get_mpz_t())));
  const std::size_t shift = bits - 64;
  mpz_class top = a >> static_cast<mp_bitcnt_t>(shift);
  return std::log(static_cast<long double>(mpz_get_ui(top.get_mpz_t()))) +
         static_cast<long double>(shift) * std::log(2.0L);
}

mpz_class mpz_pow(long base, unsigned long e) {
  mpz_class r;
  mpz_class b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

QPowRational QPowRational::make(mpz_class num, long e, long q) {
  if (q < 2) throw std::invalid_argument("QPowRational: q must be >= 2");
  QPowRational r;
  r.q_ = q;
  if (num == 0) return r;
  const mpz_class Q = q;
  while (mpz_divisible_p(num.get_mpz_t(), Q.get_mpz_t())) {
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
    --e;
  }
  r.num_ = std::move(num);
  r.e_ = e;
  return r;
}

QPowRational QPowRational::operator*(const QPowRational& o) const {
  if (o.q_ != q_) throw std::invalid_argument("QPowRational: mismatched q");
  return make(num_ * o.num_, e_ + o.e_, q_);
}

int QPowRational::cmp_abs_one() const {
  if (num_ == 0) return -1;
  mpz_class a = abs(num_);
  if (e_ <= 0) {
    mpz_class v = a * mpz_pow(q_, static_cast<unsigned long>(-e_));
    return v == 1 ? 0 : 1;
  }
  int c = cmp(a, mpz_pow(q_, static_cast<unsigned long>(e_)));
  return (c > 0) - (c < 0);
}

mpq_class QPowRational::to_mpq() const {
  if (e_ >= 0) {
    mpq_class r(num_, mpz_pow(q_, static_cast<unsigned long>(e_)));
    r.canonicalize();
    return r;
  }
  return mpq_class(num_ * mpz_pow(q_, static_cast<unsigned long>(-e_)));
}

long double QPowRational::log_abs() const {
  return fermat::log_abs(num_) - static_cast<long double>(e_) * std::log(static_cast<long double>(q_));
}

}  // namespace fermat
