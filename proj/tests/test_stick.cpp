#include <doctest.h>

#include <cmath>

#include "fermat/arith.hpp"
#include "fermat/stick.hpp"

using namespace fermat;

namespace {

// <x / d> for integer x
mpq_class frac(long x, int d) { return mpq_class(mod(x, d), d); }

// stickelberger average, written out with rationals
mpq_class stick_naive(const Tuple4& b, long p) {
  const auto H = cyclic_subgroup(mod(p, b.d), b.d);
  mpq_class s = 0;
  for (long pi : H) {
    s += 3;
    for (int x : b.a) s -= frac(static_cast<long>(x) * pi, b.d);
  }
  s /= static_cast<long>(H.size());
  s.canonicalize();
  return s;
}

mpq_class w_naive(const Tuple4& a, long p) {
  const int d = a.d;
  const auto H = cyclic_subgroup(mod(p, d), d);
  const auto U = units_mod(d);
  mpq_class total = 0;
  for (long g : U) {
    mpq_class inner = 0;
    for (int x : a.a) {
      mpq_class avg = 0;
      for (long pi : H) avg += frac(static_cast<long>(x) * pi % d * g, d);
      avg /= static_cast<long>(H.size());
      inner += avg - mpq_class(1, 2);
    }
    if (inner > 0) total += inner;
  }
  total /= static_cast<long>(U.size());
  total.canonicalize();
  return total;
}

}  // namespace

TEST_SUITE("stick") {
  TEST_CASE("stickelberger examples") {
    CHECK(stickelberger_valuation(Tuple4::make(3, {1, 1, 2, 2}), 2) == 1);
    CHECK(stickelberger_valuation(Tuple4::make(5, {1, 1, 4, 4}), 2) == 1);
    CHECK_THROWS_AS(stickelberger_valuation(Tuple4::make(5, {1, 0, 4, 0}), 2), std::invalid_argument);
    CHECK_THROWS_AS(stickelberger_valuation(Tuple4::make(4, {1, 1, 1, 1}), 2), std::invalid_argument);
  }

  TEST_CASE("stickelberger properties for d <= 30") {
    for (long p : {2, 3, 5, 7}) {
      for (int d = 2; d <= 30; ++d) {
        if (gcd(p, d) != 1) continue;
        for_each_G(d, [&](const Tuple4& b) {
          if (!b.is_circ()) return;
          const mpq_class v = stickelberger_valuation(b, p);
          REQUIRE(v == stick_naive(b, p));
          REQUIRE(v + stickelberger_valuation(b.negated(), p) == 2);
          REQUIRE(v >= 0);
          REQUIRE(v <= 2);
          REQUIRE(stickelberger_valuation(b.scaled(p), p) == v);
        });
      }
    }
  }

  TEST_CASE("w_single") {
    CHECK(w_single(Tuple4::make(3, {1, 1, 2, 2}), 2) == 0);
    for_each_G(5, [](const Tuple4& a) {
      if (a.is_circ()) REQUIRE(w_single(a, 2) == 0);
    });
    const Tuple4 a7 = Tuple4::make(7, {1, 1, 2, 3});
    const mpq_class w7 = w_single(a7, 2);
    CHECK(w7 > 0);
    CHECK(w7 < 1);
    CHECK(w7 == w_naive(a7, 2));
    for (long p : {2, 3, 5}) {
      for (int d : {7, 9, 11, 13, 21}) {
        if (gcd(p, d) != 1) continue;
        for_each_G(d, [&](const Tuple4& a) {
          if (!a.is_circ()) return;
          const mpq_class w = w_single(a, p);
          REQUIRE(w == w_naive(a, p));
          REQUIRE(w >= 0);
          REQUIRE(w <= 1);
        });
      }
    }
  }

  TEST_CASE("supersingular collapse") {
    CHECK(is_supersingular(2, 3));
    CHECK(is_supersingular(2, 5));
    CHECK(is_supersingular(3, 4));
    CHECK_FALSE(is_supersingular(2, 7));
    CHECK(is_supersingular(2, 11));  // 11 | 2^5 + 1
    for (long q : {2, 3, 4, 5})
      for (int d = 3; d <= 40; ++d) {
        if (gcd(q, d) != 1 || !is_supersingular(q, d)) continue;
        for_each_G(d, [&](const Tuple4& a) {
          if (a.is_circ()) REQUIRE(w_single(a, prime_power(q).first) == 0);
        });
      }
  }

  TEST_CASE("weight reports and bounds") {
    JacobiEngine E2(2), E3(3);
    const auto Z3 = assemble(E2, 3, Lambda::full());
    const auto r3 = w_total(Z3, Lambda::full());
    CHECK(r3.w_total == 0);
    CHECK(r3.pstar_num == 1);
    CHECK(r3.pstar_e == -3);
    CHECK(r3.trivial_ok);
    CHECK(r3.refined_ok);

    const auto Z5 = assemble(E2, 5, Lambda::full());
    const auto r5 = w_total(Z5, Lambda::full());
    CHECK(r5.w_total == 0);
    CHECK(r5.pstar_num == 1);
    CHECK(r5.pstar_e == -26);
    CHECK(Z5.pstar.to_mpq() == mpq_class(mpz_pow(2, 26)));
    CHECK(r5.refined_ok);
    CHECK(trivial_bound_check(Z5));

    const auto Z7 = assemble(E2, 7, Lambda::full());
    const auto r7 = w_total(Z7, Lambda::full());
    CHECK(r7.w_total > 0);
    CHECK(r7.refined_ok);
    CHECK(trivial_bound_check(Z7));
    // the total is the sum over the unit orbits
    mpq_class s = 0;
    long n = 0;
    for (const auto& e : r7.weights) {
      s += e.w * e.multiplicity;
      n += e.multiplicity;
      CHECK(e.w == w_naive(e.rep, 2));
    }
    CHECK(s == r7.w_total);
    CHECK(n == 6 * (49 - 21 + 3));

    CHECK(trivial_bound_check(assemble(E3, 2, Lambda::full())));
  }

  TEST_CASE("exact q-power comparison") {
    const QPowRational eighth = QPowRational::make(1, 3, 2);
    CHECK(qpow_lower_bound_holds(eighth, 3));
    CHECK_FALSE(qpow_lower_bound_holds(eighth, mpq_class(5, 2)));
    CHECK(qpow_lower_bound_holds(eighth, mpq_class(7, 2)));
    // 5^w * 4/5 >= 1 exactly when w >= 0.1386...
    const QPowRational fifth = QPowRational::make(4, 1, 5);
    CHECK(qpow_lower_bound_holds(fifth, 1));
    CHECK(qpow_lower_bound_holds(fifth, 0) == false);
    CHECK(qpow_lower_bound_holds(fifth, mpq_class(1, 3)) == true);
    CHECK(qpow_lower_bound_holds(fifth, mpq_class(1, 8)) == false);
    CHECK(qpow_lower_bound_holds(QPowRational::make(7, 0, 2), 0));
  }

  TEST_CASE("norm valuations") {
    JacobiEngine E2(2), E3(3), E5(5);
    const auto n3 = norm_valuation_check(E2, Tuple4::make(3, {1, 1, 2, 2}));
    CHECK(n3.norm == 16);
    CHECK(n3.ord_p == 4);
    CHECK(n3.ok());
    const auto n5 = norm_valuation_check(E2, Tuple4::make(5, {1, 1, 4, 4}));
    CHECK(n5.norm == 65536);
    CHECK(n5.ord_p == 16);
    CHECK(n5.ok());
    const auto n2 = norm_valuation_check(E3, Tuple4::make(2, {1, 1, 1, 1}));
    CHECK(n2.norm == 3);
    CHECK(n2.ord_p == 1);
    CHECK(n2.ok());
    for (int d : {7, 8, 9, 13})
      for (const auto& o : orbits(5, d, Lambda::circ())) {
        if (o.len > 4) continue;
        REQUIRE(norm_valuation_check(E5, o.rep).ok());
      }
  }

  TEST_CASE("hypothesis H") {
    for (int d : {5, 7, 13}) CHECK(hypothesis_h_check(d, 0.5, 0.1).fraction == 0);
    const auto h = hypothesis_h_check(12, 0.5, 0.1);
    long bad = 0;
    for_each_G(12, [&](const Tuple4& a) {
      long m = 0;
      for (int x : a.a) m = std::max(m, gcd(12, x));
      if (m < 12 && m > std::sqrt(12.0)) ++bad;
    });
    CHECK(h.fraction == mpq_class(bad) / 1728);
    CHECK(h.ok);
    CHECK(hypothesis_h_check(30, 0.7, 0.1).ok);
    CHECK_THROWS(hypothesis_h_check(30, 1.5, 0.1));
    CHECK_THROWS(hypothesis_h_check(30, 0.5, 0.3));
  }
}
