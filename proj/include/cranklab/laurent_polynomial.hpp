#pragma once

#include "cranklab/big_int.hpp"

#include <compare>
#include <map>
#include <stdexcept>
#include <string>

namespace cranklab {

/// Thrown when two Laurent polynomials over different generator sets are combined.
class GeneratorMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent pair (e_a, e_b) of a monomial a^e_a b^e_b. With one generator e_b is always 0.
struct Exponent {
  int a = 0;
  int b = 0;
  auto operator<=>(const Exponent&) const = default;
};

/// Exact Laurent polynomial in the generator a, or in a and b, with big-integer coefficients.
///
/// Storage is a sparse ordered association exponent -> coefficient; a zero coefficient is never
/// stored, so structural equality is mathematical equality. Values are immutable from the
/// outside except through the arithmetic assignment operators.
class LaurentPolynomial {
 public:
  using TermMap = std::map<Exponent, BigInt>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(int generator_count);

  static LaurentPolynomial constant(const BigInt& c, int generator_count = 1);
  static LaurentPolynomial monomial(const BigInt& c, int a_exp, int b_exp = 0,
                                    int generator_count = 1);

  /// A_n := a^n + a^-n (A_0 = 2).
  static LaurentPolynomial symmetric_power_sum(int n);
  /// S_n(a) := sum_{k=-n}^{n} a^k.
  static LaurentPolynomial centered_sum(int n);

  int generator_count() const { return generators_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  BigInt coefficient(int a_exp, int b_exp = 0) const;
  int min_a_exponent() const;
  int max_a_exponent() const;

  /// True iff the polynomial is c * a^e_a * b^e_b for a single term.
  bool is_monomial() const { return terms_.size() == 1; }

  /// Adds c * a^e.a b^e.b in place.
  void add_term(Exponent e, const BigInt& c);
  /// this += sign * a^shift.a b^shift.b * other, without temporaries.
  void add_shifted(const LaurentPolynomial& other, Exponent shift, int sign);

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);

  friend LaurentPolynomial operator+(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
    return lhs += rhs;
  }
  friend LaurentPolynomial operator-(LaurentPolynomial lhs, const LaurentPolynomial& rhs) {
    return lhs -= rhs;
  }
  friend LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs);
  LaurentPolynomial operator-() const;

  friend bool operator==(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
    return lhs.generators_ == rhs.generators_ && lhs.terms_ == rhs.terms_;
  }

  /// Image under a -> sign * a^power (b untouched). power must be nonzero, sign +-1.
  LaurentPolynomial substitute_a(int sign, int power) const;
  /// Image under a -> target, where target must be a monomial +-a^k with k != 0.
  LaurentPolynomial substitute_a(const LaurentPolynomial& target) const;

  /// Sum of all coefficients (the value at a = b = 1).
  BigInt evaluate_at_one() const;

  /// Human-readable form such as "a^2 + 2 + a^-2", highest a-exponent first.
  std::string to_string() const;

 private:
  void require_same_generators(const LaurentPolynomial& other, const char* op) const;

  int generators_ = 1;
  TermMap terms_;
};

enum class RingOp { add, sub, mul };

/// Exact ring operation on two polynomials over the same generators.
LaurentPolynomial lp_combine(const LaurentPolynomial& p, const LaurentPolynomial& q, RingOp op);

}  // namespace cranklab
