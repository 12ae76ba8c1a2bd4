#pragma once

#include "cranklab/big_int.hpp"
#include "cranklab/cyclotomic_modulus.hpp"
#include "cranklab/laurent_polynomial.hpp"
#include "cranklab/monomial.hpp"

#include <memory>
#include <stdexcept>
#include <string>

namespace cranklab {

// Coefficient rings for TruncatedSeries. Each ring is a small value object exposing the same
// operations: zero/one, is_zero/unit_sign, add_to/sub_from, add_mul, add_monomial_mul,
// from_monomial, format. The monomial's q part is ignored by the ring.

/// Integers: the ring of a-free series.
class IntegerRing {
 public:
  using value_type = BigInt;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& x) const { return x == 0; }
  int unit_sign(const value_type& x) const { return x == 1 ? 1 : (x == -1 ? -1 : 0); }
  void add_to(value_type& acc, const value_type& x) const { acc += x; }
  void sub_from(value_type& acc, const value_type& x) const { acc -= x; }
  void negate(value_type& x) const { x = -x; }
  void add_mul(value_type& acc, const value_type& x, const value_type& y) const {
    mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  }
  void add_monomial_mul(value_type& acc, const Monomial& m, const value_type& x) const {
    require_integral(m);
    if (m.sign > 0) {
      acc += x;
    } else {
      acc -= x;
    }
  }
  value_type from_monomial(const Monomial& m) const {
    require_integral(m);
    return m.sign;
  }
  value_type from_integer(const BigInt& v) const { return v; }
  std::string format(const value_type& x) const { return x.get_str(); }
  friend bool operator==(const IntegerRing&, const IntegerRing&) { return true; }

 private:
  static void require_integral(const Monomial& m) {
    if (m.a != 0 || m.b != 0) {
      throw std::invalid_argument("monomial " + m.to_string() + " is not a-free");
    }
  }
};

/// Exact Laurent polynomials in a (and optionally b).
class LaurentRing {
 public:
  using value_type = LaurentPolynomial;

  explicit LaurentRing(int generators = 1) : generators_(generators) {
    if (generators != 1 && generators != 2) {
      throw std::invalid_argument("LaurentRing supports one or two generators");
    }
  }
  int generators() const { return generators_; }

  value_type zero() const { return LaurentPolynomial(generators_); }
  value_type one() const { return LaurentPolynomial::constant(1, generators_); }
  bool is_zero(const value_type& x) const { return x.is_zero(); }
  int unit_sign(const value_type& x) const {
    if (!x.is_monomial()) return 0;
    const auto& [e, c] = *x.terms().begin();
    if (e.a != 0 || e.b != 0) return 0;
    return c == 1 ? 1 : (c == -1 ? -1 : 0);
  }
  void add_to(value_type& acc, const value_type& x) const { acc += x; }
  void sub_from(value_type& acc, const value_type& x) const { acc -= x; }
  void negate(value_type& x) const { x = -x; }
  void add_mul(value_type& acc, const value_type& x, const value_type& y) const {
    if (x.is_monomial()) {
      add_scaled(acc, *x.terms().begin(), y);
    } else if (y.is_monomial()) {
      add_scaled(acc, *y.terms().begin(), x);
    } else {
      acc += x * y;
    }
  }
  void add_monomial_mul(value_type& acc, const Monomial& m, const value_type& x) const {
    if (generators_ == 1 && m.b != 0) {
      throw GeneratorMismatch("monomial " + m.to_string() + " uses b in a one-generator ring");
    }
    acc.add_shifted(x, {m.a, m.b}, m.sign);
  }
  value_type from_monomial(const Monomial& m) const {
    if (generators_ == 1 && m.b != 0) {
      throw GeneratorMismatch("monomial " + m.to_string() + " uses b in a one-generator ring");
    }
    return LaurentPolynomial::monomial(m.sign, m.a, m.b, generators_);
  }
  value_type from_integer(const BigInt& v) const {
    return LaurentPolynomial::constant(v, generators_);
  }
  std::string format(const value_type& x) const { return x.to_string(); }
  friend bool operator==(const LaurentRing& x, const LaurentRing& y) {
    return x.generators_ == y.generators_;
  }

 private:
  static void add_scaled(value_type& acc, const std::pair<const Exponent, BigInt>& term,
                         const value_type& x) {
    const auto& [e, c] = term;
    if (c == 1 || c == -1) {
      acc.add_shifted(x, e, c > 0 ? 1 : -1);
    } else {
      for (const auto& [f, d] : x.terms()) acc.add_term({e.a + f.a, e.b + f.b}, c * d);
    }
  }

  int generators_ = 1;
};

/// Residues modulo a cyclotomic modulus: Z[a]/(phi).
class QuotientRing {
 public:
  using value_type = Residue;

  explicit QuotientRing(const CyclotomicModulus& modulus)
      : arithmetic_(std::make_shared<const QuotientArithmetic>(modulus)) {}

  const QuotientArithmetic& arithmetic() const { return *arithmetic_; }
  const CyclotomicModulus& modulus() const { return arithmetic_->modulus(); }

  value_type zero() const { return arithmetic_->zero(); }
  value_type one() const { return arithmetic_->one(); }
  bool is_zero(const value_type& x) const { return arithmetic_->is_zero(x); }
  int unit_sign(const value_type& x) const { return arithmetic_->unit_sign(x); }
  void add_to(value_type& acc, const value_type& x) const { arithmetic_->add_to(acc, x); }
  void sub_from(value_type& acc, const value_type& x) const { arithmetic_->sub_from(acc, x); }
  void negate(value_type& x) const {
    for (auto& v : x.c) v = -v;
  }
  void add_mul(value_type& acc, const value_type& x, const value_type& y) const {
    arithmetic_->add_mul(acc, x, y);
  }
  void add_monomial_mul(value_type& acc, const Monomial& m, const value_type& x) const {
    require_one_generator(m);
    arithmetic_->add_a_power_mul(acc, m.sign, m.a, x);
  }
  value_type from_monomial(const Monomial& m) const {
    require_one_generator(m);
    value_type r = arithmetic_->power_of_a(m.a);
    if (m.sign < 0) negate(r);
    return r;
  }
  value_type from_integer(const BigInt& v) const { return arithmetic_->from_integer(v); }
  value_type reduce(const LaurentPolynomial& p) const { return arithmetic_->reduce(p); }
  std::string format(const value_type& x) const { return arithmetic_->lift(x).to_string(); }
  friend bool operator==(const QuotientRing& x, const QuotientRing& y) {
    return x.modulus() == y.modulus();
  }

 private:
  static void require_one_generator(const Monomial& m) {
    if (m.b != 0) throw std::invalid_argument("quotient rings have no generator b");
  }

  std::shared_ptr<const QuotientArithmetic> arithmetic_;
};

}  // namespace cranklab
