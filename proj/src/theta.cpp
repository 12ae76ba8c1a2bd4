#include "cranklab/theta.hpp"

namespace cranklab {

namespace {

bool uses_b(std::initializer_list<Monomial> ms) {
  for (const auto& m : ms) {
    if (m.b != 0) return true;
  }
  return false;
}

LaurentRing ring_for(std::initializer_list<Monomial> ms) { return LaurentRing(uses_b(ms) ? 2 : 1); }

std::string pair_name(const ThetaArgument& x, const ThetaArgument& y) {
  return "f(" + x.to_string() + ", " + y.to_string() + ")";
}

Monomial U(const ThetaArgument& x, const ThetaArgument& y, std::int64_t n) {
  return x.pow(detail::triangular(n)) * y.pow(detail::triangular(n - 1));
}

Monomial V(const ThetaArgument& x, const ThetaArgument& y, std::int64_t n) {
  return x.pow(detail::triangular(n - 1)) * y.pow(detail::triangular(n));
}

}  // namespace

LaurentSeries jtp_product_side(const ThetaArgument& x, const ThetaArgument& y, int N) {
  const LaurentRing ring = ring_for({x, y});
  const Monomial xy = x * y;
  if (xy.q < 1) throw ThetaDomainError("triple product needs xy of positive q-degree");
  auto s = pochhammer_from(ring, -x, xy, N);
  s *= pochhammer_from(ring, -y, xy, N);
  s *= pochhammer(ring, xy, xy, N);
  return s;
}

VerificationReport jtp_check(const ThetaArgument& x, const ThetaArgument& y, int N) {
  const LaurentRing ring = ring_for({x, y});
  return compare_series("jtp " + pair_name(x, y), theta_series(ring, x, y, N),
                        jtp_product_side(x, y, N));
}

std::vector<std::pair<ThetaArgument, ThetaArgument>> jtp_grid() {
  return {
      {qarg(-1, 1), qarg(-1, 2)},
      {qarg(-1, 3), qarg(-1, 5)},
      {qarg(1, 1), qarg(1, 1)},
      {qarg(1, 1), qarg(1, 3)},
      {qarg(-1, 2), qarg(-1, 7)},
      {qarg(-1, 6), qarg(-1, 8)},
      {qarg(1, 4), qarg(-1, 8)},
      {{1, 1, 0, 1}, {1, -1, 0, 1}},
      {{-1, 1, 0, 1}, {-1, -1, 0, 2}},
      {{-1, 2, 0, 0}, {-1, -2, 0, 1}},
      {{1, 3, 0, 2}, {1, -3, 0, 5}},
      {{-1, 0, 1, 1}, {-1, 0, -1, 8}},
  };
}

VerificationReport shift_check(const ThetaArgument& x, const ThetaArgument& y, int n, int N) {
  const LaurentRing ring = ring_for({x, y});
  const Monomial xy = x * y;
  const Monomial x_shift = x * xy.pow(n);
  const Monomial y_shift = y * xy.pow(-n);
  const auto lhs = theta_series(ring, x, y, N);
  const auto rhs = theta_series(ring, x_shift, y_shift, N, U(x, y, n));
  auto r = compare_series("shift " + pair_name(x, y) + " n=" + std::to_string(n), lhs, rhs);
  return r;
}

LaurentSeries addition_sum(const ThetaArgument& x, const ThetaArgument& y, int terms, int N) {
  if (terms < 1) throw std::invalid_argument("addition theorem needs at least one term");
  const LaurentRing ring = ring_for({x, y});
  LaurentSeries sum(ring, N);
  for (int k = 0; k < terms; ++k) {
    const Monomial uk = U(x, y, k);
    sum += theta_series(ring, U(x, y, terms + k) / uk, V(x, y, terms - k) / uk, N, uk);
  }
  return sum;
}

VerificationReport addition_check(const ThetaArgument& x, const ThetaArgument& y, int terms,
                                  int N) {
  const LaurentRing ring = ring_for({x, y});
  auto r = compare_series("addition " + pair_name(x, y) + " terms=" + std::to_string(terms),
                          theta_series(ring, x, y, N), addition_sum(x, y, terms, N));
  r.append_note("V_n taken as x^{n(n-1)/2} y^{n(n+1)/2}");
  return r;
}

LaurentSeries quintuple_lhs(const ThetaArgument& P, const ThetaArgument& Q, int N, int p2_sign,
                            int q_power) {
  const LaurentRing ring = ring_for({P, Q});
  const Monomial P3 = P.pow(3);
  auto first = theta_series(ring, P3 * Q, Q.pow(q_power) / P3, N);
  Monomial pre = P.pow(2);
  if (p2_sign < 0) pre = -pre;
  return first + theta_series(ring, Q / P3, P3 * Q.pow(5), N, pre);
}

LaurentSeries quintuple_rhs(const ThetaArgument& P, const ThetaArgument& Q, int N) {
  const LaurentRing ring = ring_for({P, Q});
  const Monomial Q2 = Q.pow(2);
  const Monomial P2 = P.pow(2);
  auto numerator = theta_series(ring, -Q2, -Q2.pow(2), N) * theta_series(ring, -P2, -(Q2 / P2), N);
  return numerator * theta_series(ring, P * Q, Q / P, N).inverse();
}

VerificationReport quintuple_check(const ThetaArgument& P, const ThetaArgument& Q, int N) {
  const std::string name = "quintuple P=" + P.to_string() + " Q=" + Q.to_string();
  const auto rhs = quintuple_rhs(P, Q, N);
  const auto literal = compare_series(name, quintuple_lhs(P, Q, N), rhs);
  const auto corrected = compare_series(name, quintuple_lhs(P, Q, N, -1, 5), rhs);
  return combine_literal_and_corrected(literal, corrected,
                                       "first term f(P^3 Q, Q^4/P^3) read as f(P^3 Q, Q^5/P^3)");
}

LaurentSeries winquist_lhs(int N) {
  const LaurentRing ring(2);
  const Monomial q{1, 0, 0, 1};
  const Monomial a{1, 1, 0, 0};
  const Monomial b{1, 0, 1, 0};
  const Monomial args[] = {a, q / a, b, q / b, a * b, q / (a * b), a / b, b * q / a, q, q};
  auto s = LaurentSeries::one(ring, N);
  for (const auto& x : args) {
    if (x.q == 0) s.multiply_by_binomial(x);
    for (Monomial factor = x.q == 0 ? x * q : x; factor.q <= N; factor = factor * q) {
      s.multiply_by_binomial(factor);
    }
  }
  return s;
}

LaurentSeries winquist_rhs(int N, const WinquistForm& form) {
  const LaurentRing ring(2);
  auto arg = [](int a, int b, int q) { return Monomial{-1, a, b, q}; };
  auto f = [&](Monomial x, Monomial y, Monomial pre = {}) {
    return theta_series(ring, x, y, N, pre);
  };
  auto first = f(arg(3, 0, 0), arg(-3, 0, 3)) *
               (f(arg(0, 3, 1), arg(0, -3, 2)) -
                f(arg(0, form.inner_b_power, 2), arg(0, -3, 1), Monomial{1, 0, 1, 0}));
  if (!form.include_second_half) return first;
  auto second = f(arg(0, 3, 0), arg(0, -3, 3), Monomial{1, 1, -1, 0}) *
                (f(arg(3, 0, 1), arg(-3, 0, 2)) - f(arg(3, 0, 2), arg(-3, 0, 1), Monomial{1, 1, 0, 0}));
  return first - second;
}

VerificationReport winquist_check(int N) {
  const auto lhs = winquist_lhs(N);
  const auto literal = compare_series("winquist", lhs, winquist_rhs(N));
  const auto corrected = compare_series("winquist", lhs, winquist_rhs(N, {3, true}));
  return combine_literal_and_corrected(
      literal, corrected, "inner term -b f(-b^2 q^2, -q/b^3) read as -b f(-b^3 q^2, -q/b^3)");
}

}  // namespace cranklab
