#include <doctest.h>

#include "fermat/arith.hpp"
#include "fermat/zeta.hpp"
#include "oracles.hpp"

using namespace fermat;

namespace {

IntPoly P(std::initializer_list<long> c) {
  IntPoly r;
  for (long x : c) r.emplace_back(x);
  return r;
}

IntPoly power(const IntPoly& f, int k) {
  IntPoly r = P({1});
  for (int i = 0; i < k; ++i) r = poly_mul(r, f);
  return r;
}

}  // namespace

TEST_SUITE("zeta") {
  TEST_CASE("factorization examples") {
    JacobiEngine E3(3), E2(2);
    const auto Z32 = assemble(E3, 2, Lambda::full());
    CHECK(Z32.poly == power(P({1, -3}), 2));
    CHECK(Z32.rho == 2);
    CHECK(vanishing_order(Z32) == 2);
    CHECK(special_value(Z32).to_mpq() == 1);

    const auto Z23 = assemble(E2, 3, Lambda::full());
    CHECK(Z23.poly == poly_mul(P({1, -2}), power(P({1, 0, -4}), 3)));
    CHECK(Z23.poly == poly_mul(power(P({1, -2}), 4), power(P({1, 2}), 3)));
    CHECK(Z23.rho == 4);
    CHECK(special_value(Z23).to_mpq() == 8);
    CHECK(Z23.pstar == special_value(Z23));

    const auto Z25 = assemble(E2, 5, Lambda::full());
    CHECK(Z25.poly == poly_mul(P({1, -2}), power(P({1, 0, 0, 0, -16}), 13)));
    CHECK(Z25.rho == 14);
    CHECK(Z25.pstar.to_mpq() == mpq_class(mpz_pow(2, 26)));
    CHECK(Z25.lambda == "full");
    CHECK(Z25.lambda_size == 125);
  }

  TEST_CASE("invariants") {
    CHECK(geometric_genus(4) == 1);
    CHECK(second_betti(4) == 22);
    CHECK(geometric_genus(3) == 0);
    CHECK(second_betti(1) == 1);

    JacobiEngine E2(2), E3(3);
    const auto i5 = fermat_invariants(E2, 5);
    CHECK(i5.rank == 14);
    CHECK(i5.br_reg == mpz_pow(2, 30));
    REQUIRE(i5.bs_ratio.has_value());
    CHECK(*i5.bs_ratio == doctest::Approx(7.5).epsilon(1e-14));
    CHECK(i5.p_g == 4);
    CHECK(i5.degree == i5.b2);

    const auto i3 = fermat_invariants(E2, 3);
    CHECK(i3.rank == 4);
    CHECK(i3.br_reg == 8);
    CHECK_FALSE(i3.bs_ratio.has_value());

    const auto i2 = fermat_invariants(E3, 2);
    CHECK(i2.rank == 2);
    CHECK(i2.br_reg == 1);
  }

  TEST_CASE("point count examples") {
    JacobiEngine E2(2), E3(3);
    CHECK(predicted_point_count(assemble(E2, 3, Lambda::full()), 1) == 7);
    CHECK(predicted_point_count(assemble(E2, 5, Lambda::full()), 1) == 7);
    CHECK(predicted_point_count(assemble(E3, 2, Lambda::full()), 1) == 16);
    CHECK(brute_point_count(2, 3, 1) == 7);
    CHECK(brute_point_count(3, 2, 1) == 16);
    CHECK(brute_point_count(2, 7, 1) == predicted_point_count(assemble(E2, 7, Lambda::full()), 1));
    CHECK_THROWS_AS(brute_point_count(2, 3, 9), CapExceeded);
    CHECK_THROWS_AS(predicted_point_count(assemble(E2, 3, Lambda::circ()), 1), std::invalid_argument);
  }

  TEST_CASE("point counts against a naive field") {
    // prime fields
    for (long q : {2, 3, 5, 7}) {
      JacobiEngine E(q);
      for (int d = 2; d <= 8; ++d) {
        if (gcd(q, d) != 1) continue;
        const auto Z = assemble(E, d, Lambda::full());
        INFO("q = " << q << ", d = " << d);
        CHECK(predicted_point_count(Z, 1) == oracle::fermat_points(oracle::Fp{static_cast<unsigned>(q)}, d));
      }
    }
    // F_2 surfaces counted over F_{2^n}
    const unsigned moduli[] = {0, 0b11, 0b111, 0b1011, 0b10011, 0b100101};
    JacobiEngine E(2);
    for (int d : {3, 5, 7, 9}) {
      const auto Z = assemble(E, d, Lambda::full());
      for (int n = 1; n <= 5; ++n) {
        INFO("d = " << d << ", n = " << n);
        CHECK(predicted_point_count(Z, n) == oracle::fermat_points(oracle::GF2n{n, moduli[n]}, d));
      }
    }
  }

  TEST_CASE("structure of P on a grid") {
    for (long q : {2, 3, 4, 5}) {
      JacobiEngine E(q);
      for (int d = 2; d <= 10; ++d) {
        if (gcd(q, d) != 1 || mult_order(q, d) > 8) continue;
        const auto Z = assemble(E, d, Lambda::full());
        INFO("q = " << q << ", d = " << d);
        CHECK(Z.poly.front() == 1);
        CHECK(static_cast<long>(Z.poly.size()) - 1 == second_betti(d));
        CHECK(functional_equation_sign(Z.poly, q) != 0);
        CHECK(multiplicity_of_one_minus_qT(Z.poly, q) == Z.rho);
        const IntPoly R = divide_one_minus_qT(Z.poly, q, Z.rho);
        CHECK(evaluate(R, mpq_class(1, q)) == Z.pstar.to_mpq());
        // the hyperplane class always contributes
        CHECK(Z.rho >= 1);
        CHECK(Z.rho <= second_betti(d));
        const auto C = assemble(E, d, Lambda::circ());
        CHECK(C.rho == Z.rho - 1);
        CHECK(C.pstar == Z.pstar);
      }
    }
  }

  TEST_CASE("polynomial helpers") {
    const IntPoly f = poly_mul(power(P({1, -3}), 2), P({1, 1}));
    CHECK(multiplicity_of_one_minus_qT(f, 3) == 2);
    CHECK(divide_one_minus_qT(f, 3, 2) == P({1, 1}));
    CHECK_THROWS(divide_one_minus_qT(f, 3, 3));
    CHECK(evaluate(P({1, 2, 3}), mpq_class(1, 2)) == mpq_class(11, 4));
    CHECK(functional_equation_sign(P({1, -3}), 3) == -1);
    CHECK(functional_equation_sign(P({1, 3}), 3) == 1);
    CHECK(functional_equation_sign(P({1, 1}), 3) == 0);
  }
}
