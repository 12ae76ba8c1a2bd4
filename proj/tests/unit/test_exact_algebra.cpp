#include "doctest.h"

#include "cranklab/cyclotomic_modulus.hpp"
#include "cranklab/laurent_polynomial.hpp"

#include <map>
#include <random>

using namespace cranklab;

namespace {

LaurentPolynomial mono(long c, int e) { return LaurentPolynomial::monomial(c, e); }

LaurentPolynomial random_poly(std::mt19937& rng, int generators = 1) {
  std::uniform_int_distribution<int> terms(0, 5), exp(-6, 6), coef(-9, 9);
  LaurentPolynomial p(generators);
  const int n = terms(rng);
  for (int i = 0; i < n; ++i) {
    p.add_term({exp(rng), generators == 2 ? exp(rng) : 0}, coef(rng));
  }
  return p;
}

// Independent oracle: reduce by evaluating at exact roots is awkward, so reduce via long
// division of a^shift * p by phi using plain integer vectors.
std::vector<long> oracle_reduce(const LaurentPolynomial& p, const std::vector<long>& phi,
                                int order_of_a) {
  const int d = static_cast<int>(phi.size()) - 1;
  // a^order == 1 modulo phi, so move every exponent into [0, order).
  std::vector<long> dense(order_of_a, 0);
  for (const auto& [e, c] : p.terms()) {
    int k = ((e.a % order_of_a) + order_of_a) % order_of_a;
    dense[k] += c.get_si();
  }
  for (int k = order_of_a - 1; k >= d; --k) {
    const long top = dense[k];
    if (top == 0) continue;
    for (int i = 0; i <= d; ++i) dense[k - d + i] -= top * phi[i];
  }
  dense.resize(d);
  return dense;
}

}  // namespace

TEST_CASE("combine: worked examples") {
  const auto x = mono(1, 1) + mono(1, -1);
  CHECK(x * x == mono(1, 2) + mono(2, 0) + mono(1, -2));
  CHECK((x * x).to_string() == "a^2 + 2 + a^-2");
  const auto p = mono(3, 4) - mono(2, -1);
  CHECK(lp_combine(p, LaurentPolynomial{}, RingOp::add) == p);
  // (a - 1 + 1/a)(a + 1 + 1/a) = a^2 + 1 + a^-2, expanded term by term.
  const auto lhs = lp_combine(mono(1, 1) - mono(1, 0) + mono(1, -1),
                              mono(1, 1) + mono(1, 0) + mono(1, -1), RingOp::mul);
  CHECK(lhs == mono(1, 2) + mono(1, 0) + mono(1, -2));
  CHECK(lp_combine(p, p, RingOp::sub).is_zero());
}

TEST_CASE("combine: generator mismatch throws") {
  const auto one_gen = mono(1, 1);
  const auto two_gen = LaurentPolynomial::monomial(1, 1, 1, 2);
  CHECK_THROWS_AS(lp_combine(one_gen, two_gen, RingOp::add), GeneratorMismatch);
}

TEST_CASE("no zero coefficients are stored") {
  auto p = mono(5, 2);
  p += mono(-5, 2);
  CHECK(p.is_zero());
  CHECK(p.term_count() == 0);
  CHECK(p.to_string() == "0");
}

TEST_CASE("A_n and S_n") {
  CHECK(LaurentPolynomial::symmetric_power_sum(0) == mono(2, 0));
  CHECK(LaurentPolynomial::symmetric_power_sum(3) == mono(1, 3) + mono(1, -3));
  CHECK(LaurentPolynomial::centered_sum(2).evaluate_at_one() == 5);
  CHECK(LaurentPolynomial::centered_sum(2).term_count() == 5);
}

TEST_CASE("substitution") {
  const auto p = mono(1, 1) - mono(1, 0) + mono(1, -1);
  CHECK(p.substitute_a(-1, 1) == mono(-1, 1) - mono(1, 0) - mono(1, -1));
  const auto a2 = LaurentPolynomial::symmetric_power_sum(2);
  CHECK(a2.substitute_a(mono(-1, 1)) == a2);
  CHECK(mono(1, 1).substitute_a(mono(1, 3)) == mono(1, 3));
  CHECK_THROWS(p.substitute_a(mono(1, 1) + mono(1, 0)));
  CHECK_THROWS(p.substitute_a(mono(1, 0)));
  CHECK_THROWS(p.substitute_a(mono(2, 1)));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(20240501);
  for (int i = 0; i < 1200; ++i) {
    const int g = i % 3 == 0 ? 2 : 1;
    const auto x = random_poly(rng, g), y = random_poly(rng, g), z = random_poly(rng, g);
    REQUIRE((x + y) + z == x + (y + z));
    REQUIRE((x * y) * z == x * (y * z));
    REQUIRE(x * y == y * x);
    REQUIRE(x + y == y + x);
    REQUIRE(x * (y + z) == x * y + x * z);
    REQUIRE((x + (-x)).is_zero());
  }
}

TEST_CASE("modulus table") {
  CHECK(modulus_from_symbol("A2").polynomial() == mono(1, 4) + mono(1, 0));
  CHECK(modulus_from_symbol("A3+1").polynomial() == mono(1, 6) + mono(1, 3) + mono(1, 0));
  CHECK(modulus_from_symbol("S2").polynomial() ==
        mono(1, 4) + mono(1, 3) + mono(1, 2) + mono(1, 1) + mono(1, 0));
  CHECK(modulus_from_symbol("S3").degree() == 6);
  CHECK(modulus_from_symbol("S5").degree() == 10);
  CHECK(modulus_from_symbol("a+1/a").polynomial() == mono(1, 2) + mono(1, 0));
  CHECK(modulus_from_symbol("a-1+1/a").polynomial() == mono(1, 2) - mono(1, 1) + mono(1, 0));
  CHECK(modulus_from_symbol("a+1+1/a").polynomial() == mono(1, 2) + mono(1, 1) + mono(1, 0));
  CHECK_THROWS_AS(modulus_from_symbol("A7"), std::invalid_argument);
  // Laurent forms are the printed symmetric expressions.
  CHECK(modulus_from_symbol("A2").laurent_form() == LaurentPolynomial::symmetric_power_sum(2));
  CHECK(modulus_from_symbol("S2").laurent_form() == LaurentPolynomial::centered_sum(2));
  CHECK(modulus_from_symbol("A3+1").laurent_form() ==
        LaurentPolynomial::symmetric_power_sum(3) + mono(1, 0));
}

TEST_CASE("reduce examples") {
  const auto A2 = modulus_from_symbol("A2");
  CHECK(reduce(mono(1, 4), A2) == mono(-1, 0));
  CHECK(reduce(mono(1, 9), modulus_from_symbol("A3+1")) == mono(1, 0));
  CHECK(reduce(mono(1, -1), modulus_from_symbol("a+1/a")) == mono(-1, 1));
  CHECK(congruent(mono(1, 8), mono(1, 0), A2));
  CHECK_FALSE(congruent(mono(1, 1), mono(1, 0), modulus_from_symbol("S2")));
  CHECK(reduce(A2.laurent_form(), A2).is_zero());
}

TEST_CASE("order of a in each quotient ring") {
  const std::map<std::string, int> orders = {{"A2", 8},    {"A3+1", 9},    {"S2", 5},
                                             {"S3", 7},    {"S5", 11},     {"a+1/a", 4},
                                             {"a-1+1/a", 6}, {"a+1+1/a", 3}};
  for (const auto& [name, order] : orders) {
    CAPTURE(name);
    const auto m = modulus_from_symbol(name);
    CHECK(congruent(mono(1, order), mono(1, 0), m));
    CHECK(congruent(mono(1, -order), mono(1, 0), m));
    for (int k = 1; k < order; ++k) CHECK_FALSE(congruent(mono(1, k), mono(1, 0), m));
  }
}

TEST_CASE("reduce agrees with an independent oracle and is a homomorphism") {
  const std::map<std::string, int> orders = {{"A2", 8},    {"A3+1", 9},    {"S2", 5},
                                             {"S3", 7},    {"S5", 11},     {"a+1/a", 4},
                                             {"a-1+1/a", 6}, {"a+1+1/a", 3}};
  std::mt19937 rng(7);
  for (const auto& [name, order] : orders) {
    CAPTURE(name);
    const auto m = modulus_from_symbol(name);
    for (int i = 0; i < 150; ++i) {
      const auto p = random_poly(rng), q = random_poly(rng);
      const auto rp = reduce(p, m);
      const auto oracle = oracle_reduce(p, m.phi(), order);
      LaurentPolynomial expected;
      for (int k = 0; k < static_cast<int>(oracle.size()); ++k) expected.add_term({k, 0}, oracle[k]);
      REQUIRE(rp == expected);
      REQUIRE(reduce(rp, m) == rp);
      REQUIRE(reduce(p * q, m) == reduce(rp * reduce(q, m), m));
      REQUIRE(reduce(p + q, m) == reduce(rp + reduce(q, m), m));
      if (!rp.is_zero()) {
        REQUIRE(rp.min_a_exponent() >= 0);
        REQUIRE(rp.max_a_exponent() < m.degree());
      }
    }
  }
}

TEST_CASE("quotient arithmetic matches polynomial reduction") {
  std::mt19937 rng(99);
  for (const auto& name : modulus_symbols()) {
    const QuotientArithmetic qa(modulus_from_symbol(name));
    for (int i = 0; i < 100; ++i) {
      const auto p = random_poly(rng), q = random_poly(rng);
      const auto x = qa.reduce(p), y = qa.reduce(q);
      REQUIRE(qa.lift(qa.mul(x, y)) == reduce(p * q, qa.modulus()));
      auto acc = qa.zero();
      qa.add_a_power_mul(acc, -1, i - 50, x);
      REQUIRE(qa.lift(acc) == reduce(-(mono(1, i - 50) * p), qa.modulus()));
    }
    CHECK(qa.unit_sign(qa.one()) == 1);
    CHECK(qa.unit_sign(qa.from_integer(-1)) == -1);
    CHECK(qa.unit_sign(qa.power_of_a(1)) == 0);
  }
}
