#include "doctest.h"

#include "cranklab/theta.hpp"

using namespace cranklab;

namespace {

IntegerSeries ints(std::vector<long> cs) {
  std::vector<BigInt> v(cs.begin(), cs.end());
  return IntegerSeries::from_coefficients(IntegerRing{}, v);
}

const IntegerRing Z;

}  // namespace

TEST_CASE("theta series examples") {
  CHECK(theta_series(Z, qarg(-1, 1), qarg(-1, 2), 7) == ints({1, -1, -1, 0, 0, 1, 0, 1}));
  CHECK(theta_series(Z, qarg(-1, 3), qarg(-1, 5), 7) == ints({1, 0, 0, -1, 0, -1, 0, 0}));
  CHECK(theta_series(Z, qarg(1, 1), qarg(1, 1), 4) == ints({1, 2, 0, 0, 2}));
  CHECK(theta_f(Z, 1, 300) == euler_function(1, 300));
  CHECK_THROWS_AS(theta_series(Z, qarg(1, 0), qarg(1, 0), 4), ThetaDomainError);
  CHECK_THROWS_AS(theta_series(Z, qarg(1, -1), qarg(1, 4), 10), ThetaDomainError);
}

TEST_CASE("theta symmetry f(x,y) = f(y,x)") {
  const LaurentRing ring(1);
  for (const auto& [x, y] : jtp_grid()) {
    if (x.b != 0 || y.b != 0) continue;
    CHECK(theta_series(ring, x, y, 100) == theta_series(ring, y, x, 100));
  }
}

TEST_CASE("triple product on the grid") {
  const auto grid = jtp_grid();
  CHECK(grid.size() >= 10);
  for (const auto& [x, y] : grid) {
    CHECK(x.q <= 8);
    CHECK(y.q <= 8);
    const auto r = jtp_check(x, y, 100);
    CAPTURE(r.identity_name);
    CHECK(r.status == Status::verified);
  }
  CHECK(jtp_check({1, 1, 0, 1}, {1, -1, 0, 1}, 50).status == Status::verified);
}

TEST_CASE("triple product with a factor dropped fails") {
  const auto x = qarg(-1, 1), y = qarg(-1, 2);
  auto product = jtp_product_side(x, y, 40);
  auto factor = LaurentSeries::one(LaurentRing(1), 40);
  factor.multiply_by_binomial(Monomial::q_power(3));
  const auto corrupted = product * factor.inverse();
  const auto r = compare_series("corrupt", theta_series(LaurentRing(1), x, y, 40), corrupted);
  CHECK(r.status == Status::mismatch);
  CHECK(r.first_mismatch->exponent <= 3);
}

TEST_CASE("shift identity") {
  CHECK(shift_check(qarg(-1, 1), qarg(-1, 2), 0, 50).status == Status::verified);
  CHECK(shift_check(qarg(-1, 1), qarg(-1, 2), 1, 50).status == Status::verified);
  CHECK(shift_check(qarg(-1, 3), qarg(-1, 5), -1, 50).status == Status::verified);
  for (const auto& [x, y] : jtp_grid()) {
    for (int n : {-2, -1, 1, 2}) {
      const auto r = shift_check(x, y, n, 100);
      CAPTURE(r.identity_name);
      CHECK(r.status == Status::verified);
    }
  }
}

TEST_CASE("addition theorem") {
  CHECK(addition_check(qarg(-1, 1), qarg(-1, 2), 1, 30).status == Status::verified);
  CHECK(addition_check(qarg(-1, 1), qarg(-1, 2), 2, 60).status == Status::verified);
  CHECK(addition_check(qarg(-1, 2), qarg(-1, 7), 3, 60).status == Status::verified);
  CHECK(addition_check({1, 1, 0, 0}, {1, -1, 0, 1}, 7, 60).status == Status::verified);
}

TEST_CASE("quintuple product") {
  CHECK(quintuple_check(qarg(1, 1), qarg(1, 2), 80).passed());
  CHECK(quintuple_check({1, 1, 0, 1}, qarg(1, 2), 60).passed());
  const auto P = qarg(1, 1), Q = qarg(1, 2);
  const auto flipped = compare_series("flipped", quintuple_lhs(P, Q, 40, +1), quintuple_rhs(P, Q, 40));
  CHECK(flipped.status == Status::mismatch);
}

TEST_CASE("winquist constant term") {
  // (1-a)(1-b)(1-ab)(1-a/b) computed by hand.
  const auto a = LaurentPolynomial::monomial(1, 1, 0, 2);
  const auto b = LaurentPolynomial::monomial(1, 0, 1, 2);
  const auto one = LaurentPolynomial::constant(1, 2);
  const auto binv = LaurentPolynomial::monomial(1, 0, -1, 2);
  const auto expected = (one - a) * (one - b) * (one - a * b) * (one - a * binv);
  CHECK(winquist_lhs(0)[0] == expected);
  CHECK(winquist_rhs(0)[0] == expected);
}

TEST_CASE("winquist identity") {
  const auto r = winquist_check(30);
  CHECK(r.status == Status::corrected_form_verified);
  CHECK(r.notes.find("printed form fails") != std::string::npos);
  const auto lhs = winquist_lhs(20);
  CHECK(compare_series("w", lhs, winquist_rhs(20, {3, true})).status == Status::verified);
  CHECK(compare_series("w", lhs, winquist_rhs(20, {3, false})).status == Status::mismatch);
  const auto literal = compare_series("w", lhs, winquist_rhs(20, {2, true}));
  CHECK(literal.status == Status::mismatch);
  CHECK(literal.first_mismatch->exponent == 2);
}

TEST_CASE("quintuple printed form") {
  const auto P = qarg(1, 1), Q = qarg(1, 2);
  const auto r = quintuple_check(P, Q, 80);
  INFO(r.notes);
  CHECK(r.status == Status::corrected_form_verified);
  const auto literal = compare_series("q", quintuple_lhs(P, Q, 40), quintuple_rhs(P, Q, 40));
  CHECK(literal.status == Status::mismatch);
  CHECK(compare_series("q", quintuple_lhs(P, Q, 80, -1, 5), quintuple_rhs(P, Q, 80)).status ==
        Status::verified);
}
