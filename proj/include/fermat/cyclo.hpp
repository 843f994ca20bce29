#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace fermat {

/// Integer polynomial, coefficients low to high. The zero polynomial is empty.
using IntPoly = std::vector<mpz_class>;

void poly_trim(IntPoly& a);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
/// Remainder modulo a monic polynomial.
IntPoly poly_rem_monic(IntPoly a, const IntPoly& f);

/// Phi_m. Memoized; the returned reference stays valid for the process lifetime.
const IntPoly& cyclotomic_poly(int m);

/// Element of Z[zeta_m], stored as m integer coefficients of 1, zeta, ...,
/// zeta^{m-1}, i.e. modulo X^m - 1. That representation is not unique; every
/// comparison goes through canonical(), the remainder modulo Phi_m.
class CycElement {
 public:
  CycElement() : m_(1), c_(1) {}
  explicit CycElement(int m);
  /// Coefficients of any length are folded modulo X^m - 1.
  CycElement(int m, const std::vector<mpz_class>& coeffs);

  static CycElement constant(int m, const mpz_class& n);
  /// zeta_m^k for any integer k.
  static CycElement root(int m, long k);

  int conductor() const { return m_; }
  const std::vector<mpz_class>& coeffs() const { return c_; }

  /// Representative of degree < phi(m), padded with zeros to length m.
  CycElement canonical() const;
  bool is_zero() const;
  /// n when the element equals the rational integer n.
  std::optional<mpz_class> as_rational_integer() const;

  /// Same value in Z[zeta_{m2}]; requires m | m2.
  CycElement embed(int m2) const;
  /// sigma_t: zeta -> zeta^t; requires gcd(t, m) = 1.
  CycElement galois(long t) const;
  CycElement conj() const { return galois(-1); }
  CycElement pow(unsigned long e) const;
  CycElement scaled(const mpz_class& k) const;
  /// Exact division by a rational integer; throws VerificationFailure when
  /// the canonical coefficients are not all divisible.
  CycElement divexact(const mpz_class& k) const;

  CycElement& operator+=(const CycElement& o);
  CycElement& operator-=(const CycElement& o);
  CycElement operator-() const;
  friend CycElement operator+(CycElement a, const CycElement& b) { return a += b; }
  friend CycElement operator-(CycElement a, const CycElement& b) { return a -= b; }
  friend CycElement operator*(const CycElement& a, const CycElement& b);
  friend bool operator==(const CycElement& a, const CycElement& b);

 private:
  int m_;
  std::vector<mpz_class> c_;
};

CycElement galois_apply(long t, const CycElement& x);

/// Rewrite x in Z[zeta_m] when x has conductor m*p (p prime, coprime to m) but
/// is known to lie in the subring Z[zeta_m]. Throws VerificationFailure if the
/// zeta_p components do not cancel.
CycElement descend(const CycElement& x, int m);

/// Human-readable form, e.g. "3 + 2*z^2 - z^5 (m=7)", from the canonical form.
std::string to_string(const CycElement& x);

/// Natural log of |n| for n != 0, good to about 64 bits of mantissa.
long double log_abs(const mpz_class& n);

/// num / q^e with q not dividing num (or num = 0, e = 0).
class QPowRational {
 public:
  QPowRational() = default;
  static QPowRational make(mpz_class num, long e, long q);

  const mpz_class& num() const { return num_; }
  long exponent() const { return e_; }
  long q() const { return q_; }
  bool is_zero() const { return num_ == 0; }

  QPowRational operator*(const QPowRational& o) const;
  /// Sign of |value| - 1.
  int cmp_abs_one() const;
  mpq_class to_mpq() const;
  long double log_abs() const;

  friend bool operator==(const QPowRational& a, const QPowRational& b) {
    return a.num_ == b.num_ && a.e_ == b.e_ && a.q_ == b.q_;
  }

 private:
  mpz_class num_ = 0;
  long e_ = 0;
  long q_ = 2;
};

mpz_class mpz_pow(long base, unsigned long e);

}  // namespace fermat
