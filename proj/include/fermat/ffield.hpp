#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fermat/common.hpp"

namespace fermat {

using Elem = std::uint32_t;

/// F_{p^n} as a lookup table.
///
/// An element is the base-p integer of its coefficient vector over F_p (index 0
/// is zero, 1 is one, indices below p are the prime field). The modulus is the
/// lexicographically least monic irreducible of degree n and the generator is
/// the least index of multiplicative order p^n - 1, so two builds of the same
/// (p, n) are identical on every machine.
///
/// Multiplication goes through discrete logs; addition through Zech logs in
/// the log domain or digitwise on indices. Immutable once built.
class FieldTable {
 public:
  static constexpr std::int64_t kNoLog = -1;

  int p() const { return p_; }
  int n() const { return n_; }
  std::uint64_t size() const { return size_; }
  std::uint64_t order() const { return size_ - 1; }
  /// Monic modulus, coefficients low to high (length n + 1).
  const std::vector<int>& modulus() const { return modulus_; }
  Elem generator() const { return exp_.size() > 1 ? exp_[1] : exp_[0]; }

  /// generator^k for any k >= 0.
  Elem exp(std::uint64_t k) const { return exp_[k % order()]; }
  /// Discrete log base generator, in [0, Q-2]. Throws on zero.
  std::uint64_t dlog(Elem x) const;
  /// log(1 + generator^k), or kNoLog when 1 + generator^k = 0.
  std::int64_t zech(std::uint64_t k) const { return zech_[k % order()]; }
  /// Exponent h with generator^h = -1.
  std::uint64_t minus_one_log() const { return minus_one_log_; }

  Elem add(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
  Elem mul(Elem x, Elem y) const;
  Elem pow(Elem x, std::uint64_t k) const;

 private:
  friend FieldTable build_field(int p, int n, std::uint64_t max_field);
  FieldTable() = default;

  int p_ = 0;
  int n_ = 0;
  std::uint64_t size_ = 0;
  std::uint64_t minus_one_log_ = 0;
  std::vector<int> modulus_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::int32_t> zech_;
};

FieldTable build_field(int p, int n, std::uint64_t max_field = std::uint64_t{1} << 22);

/// N_{F_{p^n}/F_{p^m}}(x) = x^{(p^n-1)/(p^m-1)}, as an element of F.
Elem norm_to(const FieldTable& field, int m, Elem x);

/// x + x^p + ... + x^{p^{n-1}}; the result is a prime-field index in [0, p).
Elem trace_to_prime(const FieldTable& field, Elem x);

/// The degree-m subfield of a FieldTable, with the norm of the ambient
/// generator as its own generator. Characters defined through this view are
/// compatible with norms from the ambient field, which is what makes
/// Davenport-Hasse comparisons meaningful.
class FieldView {
 public:
  FieldView(std::shared_ptr<const FieldTable> field, int m);

  const FieldTable& field() const { return *field_; }
  int degree() const { return m_; }
  std::uint64_t size() const { return size_; }
  std::uint64_t order() const { return size_ - 1; }
  std::uint64_t stride() const { return stride_; }

  /// gamma^k as an index into the ambient field.
  Elem element(std::uint64_t k) const { return field_->exp((k % order()) * stride_); }
  /// Log base gamma of a nonzero subfield element.
  std::uint64_t dlog(Elem x) const;
  /// Tr_{sub/F_p}(gamma^k) for k in [0, order()).
  std::vector<std::uint32_t> traces() const;

 private:
  std::shared_ptr<const FieldTable> field_;
  int m_;
  std::uint64_t size_;
  std::uint64_t stride_;
};

}  // namespace fermat
