#pragma once

#include "cranklab/coefficient_rings.hpp"
#include "cranklab/monomial.hpp"
#include "cranklab/verification_report.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cranklab {

/// Thrown when a series operation needs a unit constant term and does not get one.
class NonUnitConstant : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Formal power series in q truncated at q^order, with coefficients in Ring.
///
/// coeffs has exactly order + 1 entries. Binary operations truncate to the smaller order; no
/// coefficient beyond the computed precision is ever produced.
template <class Ring>
class TruncatedSeries {
 public:
  using value_type = typename Ring::value_type;

  TruncatedSeries(Ring ring, int order) : ring_(std::move(ring)) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, ring_.zero());
  }

  static TruncatedSeries one(Ring ring, int order) {
    TruncatedSeries s(std::move(ring), order);
    s.coeffs_[0] = s.ring_.one();
    return s;
  }

  /// m as a series; m.q must be >= 0.
  static TruncatedSeries from_monomial(Ring ring, const Monomial& m, int order) {
    if (m.q < 0) throw std::invalid_argument("negative q-exponent in a power series");
    TruncatedSeries s(std::move(ring), order);
    if (m.q <= order) s.coeffs_[m.q] = s.ring_.from_monomial(m.coefficient_part());
    return s;
  }

  static TruncatedSeries from_coefficients(Ring ring, std::vector<value_type> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("a series needs at least one coefficient");
    TruncatedSeries s(std::move(ring), 0);
    s.coeffs_ = std::move(coeffs);
    return s;
  }

  const Ring& ring() const { return ring_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const value_type& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  value_type& coefficient(int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<value_type>& coefficients() const { return coeffs_; }

  /// Exponents with a nonzero coefficient, ascending.
  std::vector<int> support() const {
    std::vector<int> out;
    for (int n = 0; n <= order(); ++n) {
      if (!ring_.is_zero(coeffs_[n])) out.push_back(n);
    }
    return out;
  }

  TruncatedSeries truncated(int new_order) const {
    if (new_order > order()) {
      throw std::invalid_argument("cannot extend a truncated series beyond its order");
    }
    TruncatedSeries s = *this;
    s.coeffs_.resize(static_cast<std::size_t>(new_order) + 1);
    return s;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& rhs) {
    shrink_to(rhs.order());
    for (int n = 0; n <= order(); ++n) ring_.add_to(coeffs_[n], rhs.coeffs_[n]);
    return *this;
  }

  TruncatedSeries& operator-=(const TruncatedSeries& rhs) {
    shrink_to(rhs.order());
    for (int n = 0; n <= order(); ++n) ring_.sub_from(coeffs_[n], rhs.coeffs_[n]);
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) {
    return lhs += rhs;
  }
  friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) {
    return lhs -= rhs;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries s = *this;
    for (auto& c : s.coeffs_) ring_.negate(c);
    return s;
  }

  /// Cauchy product to order min(N_lhs, N_rhs), skipping zero coefficients on both sides.
  friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    const int n = std::min(lhs.order(), rhs.order());
    TruncatedSeries out(lhs.ring_, n);
    const auto left = lhs.truncated(n).support();
    const auto right = rhs.truncated(n).support();
    for (int i : left) {
      for (int j : right) {
        if (i + j > n) break;
        out.ring_.add_mul(out.coeffs_[i + j], lhs.coeffs_[i], rhs.coeffs_[j]);
      }
    }
    return out;
  }

  TruncatedSeries& operator*=(const TruncatedSeries& rhs) {
    *this = *this * rhs;
    return *this;
  }

  /// Multiplicative inverse; the constant term must be +1 or -1.
  TruncatedSeries inverse() const {
    const int sign = ring_.unit_sign(coeffs_[0]);
    if (sign == 0) {
      throw NonUnitConstant("series inverse needs constant term +-1, got " +
                            ring_.format(coeffs_[0]));
    }
    TruncatedSeries out(ring_, order());
    out.coeffs_[0] = coeffs_[0];
    std::vector<int> nonzero;
    for (int k = 1; k <= order(); ++k) {
      if (!ring_.is_zero(coeffs_[k])) nonzero.push_back(k);
    }
    for (int n = 1; n <= order(); ++n) {
      value_type acc = ring_.zero();
      for (int k : nonzero) {
        if (k > n) break;
        ring_.add_mul(acc, coeffs_[k], out.coeffs_[n - k]);
      }
      // B_n = -c0 * sum_{k>=1} A_k B_{n-k}, using c0^-1 = c0.
      if (sign > 0) ring_.negate(acc);
      out.coeffs_[n] = std::move(acc);
    }
    return out;
  }

  /// In place: this *= (1 - m), where m.q >= 0.
  void multiply_by_binomial(const Monomial& m) {
    if (m.q < 0) throw std::invalid_argument("negative q-exponent in a power series");
    const Monomial factor = (-m).coefficient_part();
    if (m.q == 0) {
      for (auto& c : coeffs_) {
        value_type term = ring_.zero();
        ring_.add_monomial_mul(term, factor, c);
        ring_.add_to(c, term);
      }
      return;
    }
    for (int n = order(); n >= m.q; --n) {
      if (ring_.is_zero(coeffs_[n - m.q])) continue;
      ring_.add_monomial_mul(coeffs_[n], factor, coeffs_[n - m.q]);
    }
  }

  /// In place: this /= (1 - m), i.e. times the geometric series sum_j m^j. Needs m.q >= 1.
  void divide_by_binomial(const Monomial& m) {
    if (m.q < 1) {
      throw std::invalid_argument("division by (1 - m) needs m of positive q-degree");
    }
    const Monomial factor = m.coefficient_part();
    for (int n = m.q; n <= order(); ++n) {
      if (ring_.is_zero(coeffs_[n - m.q])) continue;
      ring_.add_monomial_mul(coeffs_[n], factor, coeffs_[n - m.q]);
    }
  }

  /// this * m for a monomial with m.q >= 0.
  TruncatedSeries times_monomial(const Monomial& m) const {
    if (m.q < 0) throw std::invalid_argument("negative q-exponent in a power series");
    TruncatedSeries out(ring_, order());
    const Monomial factor = m.coefficient_part();
    for (int n = 0; n + m.q <= order(); ++n) {
      if (ring_.is_zero(coeffs_[n])) continue;
      ring_.add_monomial_mul(out.coeffs_[n + m.q], factor, coeffs_[n]);
    }
    return out;
  }

  TruncatedSeries scaled(const value_type& c) const {
    TruncatedSeries out(ring_, order());
    for (int n = 0; n <= order(); ++n) ring_.add_mul(out.coeffs_[n], c, coeffs_[n]);
    return out;
  }

  /// m-dissection: component j keeps the coefficients of q^{km+j} at their original exponents,
  /// so the components sum back to this series.
  std::vector<TruncatedSeries> dissect(int m) const {
    if (m < 1) throw std::invalid_argument("dissection modulus must be positive");
    std::vector<TruncatedSeries> parts(static_cast<std::size_t>(m), TruncatedSeries(ring_, order()));
    for (int n = 0; n <= order(); ++n) parts[n % m].coeffs_[n] = coeffs_[n];
    return parts;
  }

  /// Coefficientwise image in another ring.
  template <class OtherRing, class F>
  TruncatedSeries<OtherRing> map_coefficients(OtherRing other, F&& f) const {
    std::vector<typename OtherRing::value_type> mapped;
    mapped.reserve(coeffs_.size());
    for (const auto& c : coeffs_) mapped.push_back(f(c));
    return TruncatedSeries<OtherRing>::from_coefficients(std::move(other), std::move(mapped));
  }

  friend bool operator==(const TruncatedSeries& x, const TruncatedSeries& y) {
    return x.ring_ == y.ring_ && x.coeffs_ == y.coeffs_;
  }

 private:
  void shrink_to(int other_order) {
    if (other_order < order()) coeffs_.resize(static_cast<std::size_t>(other_order) + 1);
  }

  Ring ring_;
  std::vector<value_type> coeffs_;
};

using IntegerSeries = TruncatedSeries<IntegerRing>;
using LaurentSeries = TruncatedSeries<LaurentRing>;
using ResidueSeries = TruncatedSeries<QuotientRing>;

enum class SeriesOp { add, sub, mul };

template <class Ring>
TruncatedSeries<Ring> series_combine(const TruncatedSeries<Ring>& x,
                                     const TruncatedSeries<Ring>& y, SeriesOp op) {
  switch (op) {
    case SeriesOp::add:
      return x + y;
    case SeriesOp::sub:
      return x - y;
    case SeriesOp::mul:
      return x * y;
  }
  throw std::invalid_argument("unknown series operation");
}

template <class Ring>
TruncatedSeries<Ring> series_inverse(const TruncatedSeries<Ring>& x) {
  return x.inverse();
}

template <class Ring>
std::vector<TruncatedSeries<Ring>> dissect(const TruncatedSeries<Ring>& x, int m) {
  return x.dissect(m);
}

/// Smallest exponent at which the two series differ, up to the smaller order.
template <class Ring>
std::optional<int> first_difference(const TruncatedSeries<Ring>& x,
                                    const TruncatedSeries<Ring>& y) {
  const int n = std::min(x.order(), y.order());
  for (int k = 0; k <= n; ++k) {
    if (!(x[k] == y[k])) return k;
  }
  return std::nullopt;
}

/// Exact coefficientwise equality check, packaged as a report.
template <class Ring>
VerificationReport compare_series(std::string name, const TruncatedSeries<Ring>& lhs,
                                  const TruncatedSeries<Ring>& rhs,
                                  std::optional<std::string> modulus = std::nullopt) {
  const int n = std::min(lhs.order(), rhs.order());
  if (auto k = first_difference(lhs, rhs)) {
    return mismatch_report(std::move(name), n,
                           {*k, lhs.ring().format(lhs[*k]), rhs.ring().format(rhs[*k])},
                           std::move(modulus));
  }
  return verified_report(std::move(name), n, std::move(modulus));
}

/// Embeds an a-free series into any coefficient ring.
template <class Ring>
TruncatedSeries<Ring> lift_series(const IntegerSeries& s, const Ring& ring) {
  return s.map_coefficients(ring, [&](const BigInt& v) { return ring.from_integer(v); });
}

/// Reduces a one-generator Laurent series coefficientwise into Z[a]/(phi).
ResidueSeries reduce_series(const LaurentSeries& s, const QuotientRing& ring);

/// Coefficientwise congruence of two Laurent series modulo m, up to the smaller order.
VerificationReport series_congruent(const LaurentSeries& lhs, const LaurentSeries& rhs,
                                    const CyclotomicModulus& m,
                                    std::string name = "series congruence");

}  // namespace cranklab
