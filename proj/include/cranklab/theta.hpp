#pragma once

#include "cranklab/series_products.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cranklab {

/// Argument of f(x, y): sign * a^a * b^b * q^q.
using ThetaArgument = Monomial;

/// Thrown when f(x, y) has no formal meaning as a power series at the requested order.
class ThetaDomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::int64_t triangular(std::int64_t n) { return n * (n + 1) / 2; }

/// q-degree of prefactor * x^{T(n)} y^{T(n-1)}.
inline std::int64_t theta_degree(const ThetaArgument& x, const ThetaArgument& y, int pre_q,
                                 std::int64_t n) {
  return pre_q + x.q * triangular(n) + y.q * triangular(n - 1);
}

}  // namespace detail

/// Integer n with prefactor.q + x.q*n(n+1)/2 + y.q*n(n-1)/2 <= N, as [lo, hi] (empty if lo > hi).
/// Throws if x.q + y.q < 1 or if any term would carry a negative q-degree.
inline std::pair<std::int64_t, std::int64_t> theta_index_range(const ThetaArgument& x,
                                                               const ThetaArgument& y, int N,
                                                               int prefactor_q = 0) {
  const std::int64_t s = std::int64_t{x.q} + y.q;
  if (s < 1) {
    throw ThetaDomainError("f(" + x.to_string() + ", " + y.to_string() +
                           ") needs the q-degrees of its arguments to sum to at least 1");
  }
  // degree(n) = s/2 n^2 + (x.q - y.q)/2 n + prefactor_q: convex, vertex at (y.q - x.q) / (2s).
  const double vertex = static_cast<double>(y.q - x.q) / (2.0 * static_cast<double>(s));
  const auto v0 = static_cast<std::int64_t>(std::floor(vertex));
  for (std::int64_t n = v0 - 1; n <= v0 + 2; ++n) {
    if (detail::theta_degree(x, y, prefactor_q, n) < 0) {
      throw ThetaDomainError("f(" + x.to_string() + ", " + y.to_string() +
                             ") has a term of negative q-degree");
    }
  }
  const double c = static_cast<double>(prefactor_q - N);
  const double b = static_cast<double>(x.q - y.q) / 2.0;
  const double a = static_cast<double>(s) / 2.0;
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0) return {1, 0};
  const double root = std::sqrt(disc);
  auto lo = static_cast<std::int64_t>(std::floor((-b - root) / (2.0 * a))) - 2;
  auto hi = static_cast<std::int64_t>(std::ceil((-b + root) / (2.0 * a))) + 2;
  while (lo <= hi && detail::theta_degree(x, y, prefactor_q, lo) > N) ++lo;
  while (hi >= lo && detail::theta_degree(x, y, prefactor_q, hi) > N) --hi;
  return {lo, hi};
}

/// prefactor * f(x, y) = prefactor * sum_n x^{n(n+1)/2} y^{n(n-1)/2}, truncated at order N.
///
/// Individual arguments may have negative q-degree so long as every term of the product does
/// not; this is how shifted and quotient arguments such as Q/P^3 are handled.
template <class Ring>
TruncatedSeries<Ring> theta_series(const Ring& ring, const ThetaArgument& x, const ThetaArgument& y,
                                   int N, const Monomial& prefactor = {}) {
  const auto [lo, hi] = theta_index_range(x, y, N, prefactor.q);
  TruncatedSeries<Ring> s(ring, N);
  for (std::int64_t n = lo; n <= hi; ++n) {
    const Monomial term =
        prefactor * x.pow(detail::triangular(n)) * y.pow(detail::triangular(n - 1));
    ring.add_monomial_mul(s.coefficient(term.q), term.coefficient_part(), ring.one());
  }
  return s;
}

/// f(-q^t) = f(-q^t, -q^{2t}).
template <class Ring>
TruncatedSeries<Ring> theta_f(const Ring& ring, int t, int N) {
  return theta_series(ring, Monomial::q_power(t, -1), Monomial::q_power(2 * t, -1), N);
}

/// Shorthand for an a-free argument sign * q^e.
inline ThetaArgument qarg(int sign, int e) { return Monomial::q_power(e, sign); }

// Identity checks. All series live over LaurentRing with one generator, or two when b occurs.

/// Product side of the triple product: (-x; xy)_oo (-y; xy)_oo (xy; xy)_oo.
LaurentSeries jtp_product_side(const ThetaArgument& x, const ThetaArgument& y, int N);
VerificationReport jtp_check(const ThetaArgument& x, const ThetaArgument& y, int N);
/// Argument pairs used for the triple-product grid (q-degrees at most 8).
std::vector<std::pair<ThetaArgument, ThetaArgument>> jtp_grid();

VerificationReport shift_check(const ThetaArgument& x, const ThetaArgument& y, int n, int N);

/// sum_{k<terms} U_k f(U_{terms+k}/U_k, V_{terms-k}/U_k), with U_n = x^{T(n)} y^{T(n-1)} and
/// V_n = x^{T(n-1)} y^{T(n)}.
LaurentSeries addition_sum(const ThetaArgument& x, const ThetaArgument& y, int terms, int N);
VerificationReport addition_check(const ThetaArgument& x, const ThetaArgument& y, int terms, int N);

/// f(P^3 Q, Q^k/P^3) + p2_sign * P^2 f(Q/P^3, P^3 Q^5). The printed form has k = 4.
LaurentSeries quintuple_lhs(const ThetaArgument& P, const ThetaArgument& Q, int N,
                            int p2_sign = -1, int q_power = 4);
/// f(-Q^2) f(-P^2, -Q^2/P^2) / f(PQ, Q/P).
LaurentSeries quintuple_rhs(const ThetaArgument& P, const ThetaArgument& Q, int N);
/// Printed form first, then the form with Q^5/P^3 in the first theta argument.
VerificationReport quintuple_check(const ThetaArgument& P, const ThetaArgument& Q, int N);

/// (a, q/a, b, q/b, ab, q/(ab), a/b, bq/a, q, q; q)_oo over Z[a, 1/a, b, 1/b].
LaurentSeries winquist_lhs(int N);

struct WinquistForm {
  /// Inner argument of the second b-term: exponent of b in f(-b^k q^2, -q/b^3). Printed k = 2.
  int inner_b_power = 2;
  /// Whether the -a b^{-1} f(-b^3, -q^3/b^3){...} half is included.
  bool include_second_half = true;
};

LaurentSeries winquist_rhs(int N, const WinquistForm& form = {});
/// Printed form first, then the form with f(-b^3 q^2, -q/b^3) in the inner b-term.
VerificationReport winquist_check(int N);

}  // namespace cranklab
