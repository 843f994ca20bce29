#pragma once

#include <array>
#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "fermat/common.hpp"

namespace fermat {

/// (a0, a1, a2, a3) mod d with a0 + a1 + a2 + a3 = 0 mod d; entries in [0, d).
struct Tuple4 {
  int d = 1;
  std::array<int, 4> a{};

  /// Reduces entries mod d; throws std::invalid_argument if the sum is nonzero.
  static Tuple4 make(int d, std::array<long, 4> a);

  Tuple4 scaled(long t) const;
  Tuple4 negated() const { return scaled(-1); }
  bool is_zero() const { return a == std::array<int, 4>{}; }
  bool is_circ() const { return a[0] && a[1] && a[2] && a[3]; }
  /// d / gcd(d, a0, ..., a3)
  int d_a() const;
  /// The same character tuple written at level d_a.
  Tuple4 primitive() const;
  std::string str() const;

  auto operator<=>(const Tuple4& o) const = default;
};

enum class OrbitClass { zero, mixed, circ };
const char* to_string(OrbitClass c);

struct OrbitRecord {
  Tuple4 rep;  // lexicographic minimum of the orbit
  int d_a = 1;
  int len = 1;  // o_q(d_a)
  OrbitClass cls = OrbitClass::zero;
};

/// A subset of G_d given by a membership test.
class Lambda {
 public:
  static Lambda full();
  static Lambda circ();
  /// {a in G_d : sum_i a_i h_i = 0 mod d for every generator h}.
  static Lambda subgroup(std::vector<std::array<long, 4>> generators);
  /// Caller asserts the predicate defines a unit-stable set.
  static Lambda predicate(std::string name, std::function<bool(const Tuple4&)> test);

  bool contains(const Tuple4& a) const { return test_(a); }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  std::function<bool(const Tuple4&)> test_;
};

/// "full", "circ" or "subgroup:h0,h1,h2,h3;..." (the form Lambda::name() prints).
/// Throws std::invalid_argument on anything else.
Lambda parse_lambda(const std::string& text);

/// Calls f on every element of G_d, a0 slowest, in lexicographic order.
void for_each_G(int d, const std::function<void(const Tuple4&)>& f);

long lambda_size(int d, const Lambda& lambda);

/// True when t * Lambda = Lambda for every unit t mod d.
bool unit_stable(int d, const Lambda& lambda);

/// Partition of Lambda into q-orbits, sorted by representative. Throws
/// std::invalid_argument if Lambda is not closed under multiplication by q or
/// gcd(q, d) != 1.
std::vector<OrbitRecord> orbits(long q, int d, const Lambda& lambda);

struct OrbitStats {
  long lambda_size = 0;
  long count = 0;
  double sum_log_len = 0;
  double count_bound = 0;
  double sum_log_bound = 0;
  bool count_ok = false;
  bool sum_log_ok = false;
  bool loglog_clamped = false;
};

/// max(floor, log log x), and whether the floor was used.
double clamped_loglog(double x, double floor, bool* clamped = nullptr);

/// Statistics of an orbit partition against the explicit constants. Throws if
/// |Lambda| < 2.
OrbitStats orbit_stats(long q, const std::vector<OrbitRecord>& orbs, const BoundConstants& k = {});

/// hist[g] = #{a in G_d : max_i gcd(d, a_i) = g}, for g in [0, d].
std::vector<long> max_gcd_histogram(int d);

struct BadSetReport {
  int d = 0;
  long count = 0;
  long total = 0;  // |G_d|
  double bound = 0;  // c4 |G_d| tau(d) / X
  bool ok = false;
};

/// |{a in G_d : d > max_i gcd(d, a_i) > X}| for 1 <= X < d.
BadSetReport bad_set_count(int d, double X, const BoundConstants& k = {});

/// The same with X = d^(u_num/u_den), decided exactly in integers: the
/// threshold test is g^den > d^num and the verdict count^den d^num <= (c4 |G_d|
/// tau(d))^den. The bound field is filled in floating point for display.
BadSetReport bad_set_count_pow(int d, long u_num, long u_den, const std::vector<long>* hist = nullptr,
                               const BoundConstants& k = {});

}  // namespace fermat
