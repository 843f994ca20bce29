#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace fermat {

long gcd(long a, long b);
long lcm(long a, long b);
bool is_prime(long n);

/// Reduce a into [0, m).
inline long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::vector<long> divisors(long n);
long euler_phi(long n);
long divisor_count(long n);

/// Units of Z/dZ in increasing order.
std::vector<long> units_mod(long d);

/// The cyclic subgroup <g> of (Z/dZ)^x, in generation order starting at 1.
std::vector<long> cyclic_subgroup(long g, long d);

/// q = p^f with p prime; throws std::invalid_argument otherwise.
std::pair<int, int> prime_power(long q);

/// Least k >= 1 with q^k = 1 mod n; 1 for n = 1.
int mult_order(long q, long n);

}  // namespace fermat
