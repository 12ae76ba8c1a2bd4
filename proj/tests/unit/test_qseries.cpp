#include "doctest.h"

#include "cranklab/series_products.hpp"

#include <random>

using namespace cranklab;

namespace {

IntegerSeries ints(std::vector<long> cs) {
  std::vector<BigInt> v(cs.begin(), cs.end());
  return IntegerSeries::from_coefficients(IntegerRing{}, v);
}

// Oracle: number of partitions of n by brute-force recursion on the largest part.
long count_partitions(int n, int max_part) {
  if (n == 0) return 1;
  long total = 0;
  for (int k = std::min(n, max_part); k >= 1; --k) total += count_partitions(n - k, k);
  return total;
}

// Oracle: direct product of the factors (1 - q^{tk}) with plain integers.
std::vector<long> naive_euler(int t, int N) {
  std::vector<long> c(N + 1, 0);
  c[0] = 1;
  for (int k = t; k <= N; k += t) {
    for (int n = N; n >= k; --n) c[n] -= c[n - k];
  }
  return c;
}

}  // namespace

TEST_CASE("combine examples") {
  CHECK(ints({1, 1, 0}) * ints({1, -1, 0}) == ints({1, 0, -1}));
  const auto A = ints({3, -1, 4, 1, -5});
  CHECK(A * IntegerSeries::one(IntegerRing{}, 4) == A);
  auto geometric = ints(std::vector<long>(11, 1));
  CHECK(series_combine(geometric, ints({1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0}), SeriesOp::mul) ==
        IntegerSeries::one(IntegerRing{}, 10));
  CHECK(series_combine(A, A, SeriesOp::sub) == IntegerSeries(IntegerRing{}, 4));
}

TEST_CASE("truncation to the smaller order") {
  const auto A = ints({1, 2, 3, 4, 5, 6});
  const auto B = ints({1, 1, 1});
  CHECK((A * B).order() == 2);
  CHECK((A + B).order() == 2);
  CHECK((B - A).order() == 2);
  CHECK_THROWS(B.truncated(5));
}

TEST_CASE("inverse examples") {
  CHECK(series_inverse(ints({1, -1, 0, 0})) == ints({1, 1, 1, 1}));
  CHECK(series_inverse(IntegerSeries::one(IntegerRing{}, 5)) == IntegerSeries::one(IntegerRing{}, 5));
  CHECK(series_inverse(ints({-1, 2})) == ints({-1, -2}));
  const auto p = series_inverse(euler_function(1, 10));
  CHECK(p == ints({1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42}));
  CHECK_THROWS_AS(series_inverse(ints({2, 1})), NonUnitConstant);
  CHECK_THROWS_AS(series_inverse(ints({0, 1})), NonUnitConstant);
}

TEST_CASE("inverse round trip on random unit series") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-20, 20);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<long> cs(40);
    for (auto& v : cs) v = c(rng);
    cs[0] = trial % 2 ? 1 : -1;
    const auto A = ints(cs);
    CHECK(A * A.inverse() == IntegerSeries::one(IntegerRing{}, 39));
  }
  const LaurentRing ring(1);
  auto L = LaurentSeries::one(ring, 20);
  L.multiply_by_binomial({1, 1, 0, 1});
  L.multiply_by_binomial({-1, -2, 0, 3});
  CHECK(L * L.inverse() == LaurentSeries::one(ring, 20));
}

TEST_CASE("pochhammer examples") {
  CHECK(pochhammer(Monomial::q_power(1), 1, 6) == ints({1, -1, -1, 0, 0, 1, 0}));
  CHECK(pochhammer(Monomial::q_power(4, -1), 4, 4) == ints({1, 0, 0, 0, 1}));
  const LaurentRing ring(1);
  const auto s = pochhammer(ring, Monomial{1, 1, 0, 1}, 1, 2);
  CHECK(s[0] == LaurentPolynomial::constant(1));
  CHECK(s[1] == LaurentPolynomial::monomial(-1, 1));
  CHECK(s[2] == LaurentPolynomial::monomial(-1, 1));
  CHECK_THROWS_AS(pochhammer(Monomial{1, 1, 0, 0}, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(pochhammer(Monomial::q_power(1), 0, 5), std::invalid_argument);
}

TEST_CASE("euler function examples and oracle equivalence") {
  CHECK(euler_function(1, 7) == ints({1, -1, -1, 0, 0, 1, 0, 1}));
  CHECK(euler_function(3, 2) == ints({1, 0, 0}));
  CHECK(euler_function(1, 0) == ints({1}));
  for (int t = 1; t <= 6; ++t) {
    CAPTURE(t);
    const auto fast = euler_function(t, 300);
    CHECK(fast == pochhammer(Monomial::q_power(t), t, 300));
    CHECK(fast == ints(naive_euler(t, 300)));
  }
}

TEST_CASE("inverse euler gives partition counts") {
  const auto p = euler_function(1, 100).inverse();
  for (int n = 0; n <= 60; ++n) CHECK(p[n] == count_partitions(n, n));
  CHECK(p[100] == BigInt("190569292"));
}

TEST_CASE("dissection") {
  const auto A = ints({1, 1, 1, 1});
  const auto parts = dissect(A, 2);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == ints({1, 0, 1, 0}));
  CHECK(parts[1] == ints({0, 1, 0, 1}));
  CHECK(dissect(A, 1)[0] == A);
  const auto e = dissect(euler_function(1, 12), 5);
  CHECK(e[0] == ints({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(e[2] == ints({0, 0, -1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1}));
  CHECK_THROWS(dissect(A, 0));
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int m = 1; m <= 12; ++m) {
    std::vector<long> cs(37);
    for (auto& v : cs) v = c(rng);
    const auto S = ints(cs);
    IntegerSeries sum(IntegerRing{}, 36);
    for (const auto& part : dissect(S, m)) sum += part;
    CHECK(sum == S);
  }
}

TEST_CASE("binomial multiply and divide are inverse") {
  const LaurentRing ring(2);
  auto s = LaurentSeries::one(ring, 15);
  s.multiply_by_binomial({1, 1, -1, 0});
  s.multiply_by_binomial({-1, 0, 2, 3});
  s.divide_by_binomial({-1, 0, 2, 3});
  auto expected = LaurentSeries::one(ring, 15);
  expected.coefficient(0) -= LaurentPolynomial::monomial(1, 1, -1, 2);
  CHECK(s == expected);
  CHECK_THROWS(s.divide_by_binomial({1, 1, 0, 0}));
}

TEST_CASE("series congruence") {
  const LaurentRing ring(1);
  auto A = LaurentSeries::one(ring, 6);
  A.coefficient(2) = LaurentPolynomial::monomial(1, 8);
  const auto A2 = modulus_from_symbol("A2");
  CHECK(series_congruent(A, A, A2).status == Status::verified);
  auto B = A;
  B.coefficient(2) = LaurentPolynomial::constant(1);
  CHECK(series_congruent(A, B, A2).status == Status::verified);
  auto C = A + LaurentSeries::from_monomial(ring, Monomial::q_power(1), 6);
  const auto r = series_congruent(A, C, modulus_from_symbol("S3"));
  CHECK(r.status == Status::mismatch);
  REQUIRE(r.first_mismatch);
  CHECK(r.first_mismatch->exponent == 1);
  CHECK(r.first_mismatch->lhs == "0");
  CHECK(r.first_mismatch->rhs == "1");
  CHECK(r.modulus_name == std::optional<std::string>("S3"));
}
