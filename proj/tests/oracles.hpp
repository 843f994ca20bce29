#pragma once

// Deliberately naive reference implementations, independent of the library's
// field tables, used as ground truth in the unit tests.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <vector>

namespace oracle {

/// Arithmetic in GF(2^n) on bit vectors with a fixed irreducible modulus.
struct GF2n {
  int n;
  unsigned modulus;  // includes the x^n bit

  unsigned mul(unsigned a, unsigned b) const {
    unsigned r = 0;
    while (b) {
      if (b & 1) r ^= a;
      b >>= 1;
      a <<= 1;
      if (a & (1u << n)) a ^= modulus;
    }
    return r;
  }
  unsigned size() const { return 1u << n; }
};

/// Arithmetic in a prime field.
struct Fp {
  unsigned p;
  unsigned mul(unsigned a, unsigned b) const { return a * b % p; }
  unsigned size() const { return p; }
};

template <class F>
unsigned add(const F& f, unsigned a, unsigned b);

template <>
inline unsigned add<GF2n>(const GF2n&, unsigned a, unsigned b) { return a ^ b; }
template <>
inline unsigned add<Fp>(const Fp& f, unsigned a, unsigned b) { return (a + b) % f.p; }

template <class F>
unsigned neg(const F& f, unsigned a);
template <>
inline unsigned neg<GF2n>(const GF2n&, unsigned a) { return a; }
template <>
inline unsigned neg<Fp>(const Fp& f, unsigned a) { return (f.p - a) % f.p; }

/// Discrete-log table (log[0] unused) for generator g, or for the least
/// generator found by brute force when g = 0. Empty if g does not generate.
template <class F>
std::vector<unsigned> log_table(const F& f, unsigned want = 0) {
  const unsigned Q = f.size();
  for (unsigned g = want ? want : 1; g < Q; ++g) {
    std::vector<unsigned> lg(Q, 0);
    std::vector<char> hit(Q, 0);
    unsigned x = 1;
    bool ok = true;
    for (unsigned k = 0; k + 1 < Q; ++k) {
      if (hit[x]) {
        ok = false;
        break;
      }
      hit[x] = 1;
      lg[x] = k;
      x = f.mul(x, g);
    }
    if (ok) return lg;
    if (want) break;
  }
  return {};
}

/// (1/(Q-1)) sum over x0 + x1 + x2 + x3 = 0 of prod chi_i(x_i), chi_i(g^k) =
/// zeta_m^{a_i k}, chi_i(0) = 0. Returns the coefficient vector of zeta_m^r
/// before division, and Q - 1 separately; a_i all nonzero mod m.
template <class F>
std::vector<long> raw_jacobi_counts(const F& f, int m, std::array<int, 4> a, unsigned gen = 0) {
  const unsigned Q = f.size();
  const auto lg = log_table(f, gen);
  std::vector<long> cnt(m, 0);
  for (unsigned x0 = 1; x0 < Q; ++x0)
    for (unsigned x1 = 1; x1 < Q; ++x1)
      for (unsigned x2 = 1; x2 < Q; ++x2) {
        unsigned x3 = neg(f, add(f, add(f, x0, x1), x2));
        if (x3 == 0) continue;
        long e = static_cast<long>(a[0]) * lg[x0] + static_cast<long>(a[1]) * lg[x1] +
                 static_cast<long>(a[2]) * lg[x2] + static_cast<long>(a[3]) * lg[x3];
        ++cnt[e % m];
      }
  return cnt;
}

/// Projective points on sum X_i^d = 0, enumerated over all of F^4 \ {0}.
template <class F>
long fermat_points(const F& f, int d) {
  const unsigned Q = f.size();
  std::vector<unsigned> pw(Q);
  for (unsigned x = 0; x < Q; ++x) {
    unsigned r = 1;
    for (int k = 0; k < d; ++k) r = f.mul(r, x);
    pw[x] = r;
  }
  long affine = 0;
  for (unsigned a = 0; a < Q; ++a)
    for (unsigned b = 0; b < Q; ++b)
      for (unsigned c = 0; c < Q; ++c)
        for (unsigned e = 0; e < Q; ++e)
          if (add(f, add(f, pw[a], pw[b]), add(f, pw[c], pw[e])) == 0) ++affine;
  return (affine - 1) / static_cast<long>(Q - 1);
}

}  // namespace oracle
