#include "fermat/ffield.hpp"

#include <stdexcept>
#include <string>

#include "fermat/arith.hpp"

namespace fermat {
namespace {

// Dense polynomials over F_p, coefficients low to high.
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, int p) {
  trim(a);
  const int n = static_cast<int>(f.size()) - 1;
  // f is monic
  for (int i = static_cast<int>(a.size()) - 1; i >= n; --i) {
    int c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= n; ++j) a[i - n + j] = static_cast<int>(mod(a[i - n + j] - static_cast<long>(c) * f[j], p));
  }
  if (static_cast<int>(a.size()) > n) a.resize(n);
  trim(a);
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = static_cast<int>((r[i + j] + static_cast<long>(a[i]) * b[j]) % p);
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, int p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

int inv_mod(int a, int p) { return static_cast<int>(powmod(static_cast<std::uint64_t>(mod(a, p)), p - 2, p)); }

Poly poly_gcd(Poly a, Poly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic, then reduce
    int inv = inv_mod(b.back(), p);
    for (auto& c : b) c = static_cast<int>(static_cast<long>(c) * inv % p);
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const Poly& f, int p) {
  const int n = static_cast<int>(f.size()) - 1;
  Poly h{0, 1};  // X
  for (int k = 1; k <= n / 2; ++k) {
    h = poly_powmod(h, static_cast<std::uint64_t>(p), f, p);
    Poly t = h;
    if (t.size() < 2) t.resize(2, 0);
    t[1] = static_cast<int>(mod(t[1] - 1, p));
    trim(t);
    if (t.empty()) return false;
    if (poly_gcd(f, t, p).size() != 1) return false;
  }
  return true;
}

Poly decode(std::uint64_t idx, int p, int n) {
  Poly d(n, 0);
  for (int i = 0; i < n; ++i) {
    d[i] = static_cast<int>(idx % p);
    idx /= p;
  }
  return d;
}

std::uint64_t encode(const Poly& d, int p) {
  std::uint64_t idx = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) idx = idx * p + d[i];
  return idx;
}

}  // namespace

FieldTable build_field(int p, int n, std::uint64_t max_field) {
  if (!is_prime(p)) throw std::invalid_argument("build_field: p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw std::invalid_argument("build_field: degree must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < n; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > max_field)
      throw CapExceeded("field F_" + std::to_string(p) + "^" + std::to_string(n) + " exceeds the field cap of " +
                        std::to_string(max_field) + " elements");
  }

  FieldTable F;
  F.p_ = p;
  F.n_ = n;
  F.size_ = q;

  // Lexicographically least monic irreducible: scan (c_{n-1}, ..., c_0) in
  // increasing base-p order.
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    Poly f = decode(idx, p, n);
    f.push_back(1);
    if (is_irreducible(f, p)) {
      F.modulus_ = f;
      break;
    }
  }
  const Poly& f = F.modulus_;
  const std::uint64_t order = q - 1;
  const auto primes = prime_factors(order);

  std::uint64_t gen = 0;
  for (std::uint64_t cand = 1; cand < q && gen == 0; ++cand) {
    Poly g = decode(cand, p, n);
    trim(g);
    bool ok = true;
    for (auto r : primes) {
      Poly t = poly_powmod(g, order / r, f, p);
      if (t.size() == 1 && t[0] == 1) {
        ok = false;
        break;
      }
    }
    if (ok) gen = cand;
  }
  if (gen == 0) throw VerificationFailure("build_field: no generator found");

  // exp table by repeated multiplication with the generator
  const Poly gd = decode(gen, p, n);
  F.exp_.resize(order);
  F.log_.assign(q, 0);
  Poly cur(n, 0);
  cur[0] = 1;
  Poly acc(n), shifted(n);
  for (std::uint64_t k = 0; k < order; ++k) {
    std::uint64_t idx = encode(cur, p);
    F.exp_[k] = static_cast<Elem>(idx);
    F.log_[idx] = static_cast<std::uint32_t>(k);
    // cur *= g
    std::fill(acc.begin(), acc.end(), 0);
    shifted = cur;
    for (int j = 0; j < n; ++j) {
      if (gd[j] != 0)
        for (int i = 0; i < n; ++i) acc[i] = static_cast<int>((acc[i] + static_cast<long>(gd[j]) * shifted[i]) % p);
      if (j + 1 < n) {
        int top = shifted[n - 1];
        for (int i = n - 1; i > 0; --i) shifted[i] = static_cast<int>(mod(shifted[i - 1] - static_cast<long>(top) * f[i], p));
        shifted[0] = static_cast<int>(mod(-static_cast<long>(top) * f[0], p));
      }
    }
    cur.swap(acc);
  }
  if (!(cur.size() == static_cast<std::size_t>(n) && encode(cur, p) == 1))
    throw VerificationFailure("build_field: generator order mismatch");

  F.minus_one_log_ = (p == 2) ? 0 : order / 2;
  F.zech_.resize(order);
  for (std::uint64_t k = 0; k < order; ++k) {
    Elem x = F.exp_[k];
    Elem digit0 = x % p;
    Elem y = x - digit0 + (digit0 + 1) % p;
    F.zech_[k] = (y == 0) ? static_cast<std::int32_t>(FieldTable::kNoLog) : static_cast<std::int32_t>(F.log_[y]);
  }
  return F;
}

std::uint64_t FieldTable::dlog(Elem x) const {
  if (x == 0 || x >= size_) throw std::invalid_argument("dlog: argument must be a nonzero field element");
  return log_[x];
}

Elem FieldTable::add(Elem x, Elem y) const {
  if (p_ == 2) return x ^ y;
  Elem r = 0, scale = 1;
  const Elem P = static_cast<Elem>(p_);
  while (x || y) {
    r += ((x % P + y % P) % P) * scale;
    x /= P;
    y /= P;
    scale *= P;
  }
  return r;
}

Elem FieldTable::neg(Elem x) const {
  if (p_ == 2) return x;
  Elem r = 0, scale = 1;
  const Elem P = static_cast<Elem>(p_);
  while (x) {
    r += ((P - x % P) % P) * scale;
    x /= P;
    scale *= P;
  }
  return r;
}

Elem FieldTable::mul(Elem x, Elem y) const {
  if (x == 0 || y == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[x]) + log_[y]) % order()];
}

Elem FieldTable::pow(Elem x, std::uint64_t k) const {
  if (x == 0) return k == 0 ? 1 : 0;
  unsigned __int128 e = static_cast<unsigned __int128>(log_[x]) * k;
  return exp_[static_cast<std::uint64_t>(e % order())];
}

Elem norm_to(const FieldTable& field, int m, Elem x) {
  if (m < 1 || field.n() % m != 0)
    throw std::invalid_argument("norm_to: subfield degree " + std::to_string(m) + " does not divide " +
                                std::to_string(field.n()));
  if (x == 0) return 0;
  std::uint64_t sub = ipow(static_cast<std::uint64_t>(field.p()), static_cast<unsigned>(m));
  return field.pow(x, field.order() / (sub - 1));
}

Elem trace_to_prime(const FieldTable& field, Elem x) {
  Elem acc = 0, y = x;
  for (int j = 0; j < field.n(); ++j) {
    acc = field.add(acc, y);
    y = field.pow(y, static_cast<std::uint64_t>(field.p()));
  }
  if (acc >= static_cast<Elem>(field.p())) throw VerificationFailure("trace_to_prime: trace left the prime field");
  return acc;
}

FieldView::FieldView(std::shared_ptr<const FieldTable> field, int m) : field_(std::move(field)), m_(m) {
  if (m < 1 || field_->n() % m != 0)
    throw std::invalid_argument("FieldView: degree " + std::to_string(m) + " does not divide " +
                                std::to_string(field_->n()));
  size_ = ipow(static_cast<std::uint64_t>(field_->p()), static_cast<unsigned>(m));
  stride_ = field_->order() / (size_ - 1);
}

std::uint64_t FieldView::dlog(Elem x) const {
  std::uint64_t k = field_->dlog(x);
  if (k % stride_ != 0) throw std::invalid_argument("FieldView::dlog: element is not in the subfield");
  return k / stride_;
}

std::vector<std::uint32_t> FieldView::traces() const {
  const FieldTable& F = *field_;
  std::vector<std::uint32_t> out(order());
  for (std::uint64_t k = 0; k < order(); ++k) {
    // conjugates gamma^{k p^j} summed in the log domain
    std::uint64_t e = (k * stride_) % F.order();
    std::int64_t acc = FieldTable::kNoLog;  // log of running sum, kNoLog for zero
    for (int j = 0; j < m_; ++j) {
      if (acc == FieldTable::kNoLog) {
        acc = static_cast<std::int64_t>(e);
      } else {
        // g^acc + g^e = g^acc (1 + g^{e - acc})
        std::uint64_t diff = (e + F.order() - static_cast<std::uint64_t>(acc)) % F.order();
        std::int64_t z = F.zech(diff);
        acc = (z == FieldTable::kNoLog) ? FieldTable::kNoLog : (acc + z) % static_cast<std::int64_t>(F.order());
      }
      e = static_cast<std::uint64_t>((static_cast<unsigned __int128>(e) * F.p()) % F.order());
    }
    Elem t = (acc == FieldTable::kNoLog) ? 0 : F.exp(static_cast<std::uint64_t>(acc));
    if (t >= static_cast<Elem>(F.p())) throw VerificationFailure("FieldView::traces: trace left the prime field");
    out[k] = t;
  }
  return out;
}

}  // namespace fermat
