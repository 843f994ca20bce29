#include "fermat/arith.hpp"

#include <stdexcept>
#include <string>

namespace fermat {

long gcd(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm(long a, long b) { return a / gcd(a, b) * b; }

bool is_prime(long n) {
  if (n < 2) return false;
  for (long k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  unsigned __int128 r = 1, b = base % m;
  while (exp) {
    if (exp & 1) r = r * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) {
      out.push_back(k);
      while (n % k == 0) n /= k;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<long> divisors(long n) {
  std::vector<long> lo, hi;
  for (long k = 1; k * k <= n; ++k) {
    if (n % k == 0) {
      lo.push_back(k);
      if (k != n / k) hi.push_back(n / k);
    }
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

long euler_phi(long n) {
  long r = n;
  for (auto f : prime_factors(static_cast<std::uint64_t>(n))) r = r / static_cast<long>(f) * (static_cast<long>(f) - 1);
  return r;
}

long divisor_count(long n) { return static_cast<long>(divisors(n).size()); }

std::vector<long> units_mod(long d) {
  std::vector<long> out;
  for (long t = 1; t < d; ++t)
    if (gcd(t, d) == 1) out.push_back(t);
  if (d == 1) out.push_back(0);
  return out;
}

std::vector<long> cyclic_subgroup(long g, long d) {
  if (d < 1 || gcd(g, d) != 1) throw std::invalid_argument("cyclic_subgroup: g must be a unit mod d");
  std::vector<long> out;
  long x = 1 % d;
  do {
    out.push_back(x);
    x = mod(x * g, d);
  } while (x != 1 % d);
  return out;
}

std::pair<int, int> prime_power(long q) {
  if (q < 2) throw std::invalid_argument("q must be a prime power >= 2, got " + std::to_string(q));
  auto fs = prime_factors(static_cast<std::uint64_t>(q));
  if (fs.size() != 1) throw std::invalid_argument("q must be a prime power, got " + std::to_string(q));
  int p = static_cast<int>(fs[0]);
  int f = 0;
  while (q > 1) {
    q /= p;
    ++f;
  }
  return {p, f};
}

int mult_order(long q, long n) {
  if (n < 1) throw std::invalid_argument("mult_order: modulus must be >= 1");
  if (n == 1) return 1;
  if (gcd(q, n) != 1) throw std::invalid_argument("mult_order: q and n not coprime");
  long x = mod(q, n);
  int k = 1;
  while (x != 1) {
    x = mod(x * q, n);
    ++k;
  }
  return k;
}

}  // namespace fermat
