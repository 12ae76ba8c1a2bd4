#pragma once

#include "cranklab/truncated_series.hpp"

#include <stdexcept>

namespace cranklab {

/// prod_{k>=0} (1 - x * step^k) to order N. Needs x.q >= 1 and step.q >= 1.
template <class Ring>
TruncatedSeries<Ring> pochhammer(const Ring& ring, const Monomial& x, const Monomial& step, int N) {
  if (x.q < 1) throw std::invalid_argument("pochhammer argument " + x.to_string() +
                                           " needs positive q-degree");
  if (step.q < 1) throw std::invalid_argument("pochhammer step needs positive q-degree");
  auto s = TruncatedSeries<Ring>::one(ring, N);
  for (Monomial factor = x; factor.q <= N; factor = factor * step) s.multiply_by_binomial(factor);
  return s;
}

/// (x; q^t)_oo.
template <class Ring>
TruncatedSeries<Ring> pochhammer(const Ring& ring, const Monomial& x, int t, int N) {
  return pochhammer(ring, x, Monomial::q_power(t), N);
}

/// 1 / (x; step)_oo, built by repeated geometric division rather than a series inverse.
template <class Ring>
TruncatedSeries<Ring> inverse_pochhammer(const Ring& ring, const Monomial& x, const Monomial& step,
                                         int N) {
  if (x.q < 1) throw std::invalid_argument("pochhammer argument " + x.to_string() +
                                           " needs positive q-degree");
  if (step.q < 1) throw std::invalid_argument("pochhammer step needs positive q-degree");
  auto s = TruncatedSeries<Ring>::one(ring, N);
  for (Monomial factor = x; factor.q <= N; factor = factor * step) s.divide_by_binomial(factor);
  return s;
}

/// Product with a possible q-degree-0 leading factor: (1 - x) (x*step; step)_oo. x.q >= 0.
template <class Ring>
TruncatedSeries<Ring> pochhammer_from(const Ring& ring, const Monomial& x, const Monomial& step,
                                      int N) {
  if (x.q < 0) throw std::invalid_argument("pochhammer argument " + x.to_string() +
                                           " has negative q-degree");
  if (x.q >= 1) return pochhammer(ring, x, step, N);
  auto s = pochhammer(ring, x * step, step, N);
  s.multiply_by_binomial(x);
  return s;
}

/// (q^t; q^t)_oo from the pentagonal number theorem.
template <class Ring>
TruncatedSeries<Ring> euler_function(const Ring& ring, int t, int N) {
  if (t < 1) throw std::invalid_argument("euler_function needs t >= 1");
  TruncatedSeries<Ring> s(ring, N);
  s.coefficient(0) = ring.one();
  for (long long k = 1;; ++k) {
    const long long lo = t * (k * (3 * k - 1) / 2);
    if (lo > N) break;
    const Monomial sign = Monomial{k % 2 == 0 ? 1 : -1, 0, 0, 0};
    ring.add_monomial_mul(s.coefficient(static_cast<int>(lo)), sign, ring.one());
    const long long hi = t * (k * (3 * k + 1) / 2);
    if (hi <= N) ring.add_monomial_mul(s.coefficient(static_cast<int>(hi)), sign, ring.one());
  }
  return s;
}

inline IntegerSeries euler_function(int t, int N) { return euler_function(IntegerRing{}, t, N); }

inline IntegerSeries pochhammer(const Monomial& x, int t, int N) {
  return pochhammer(IntegerRing{}, x, t, N);
}

}  // namespace cranklab
