#pragma once

#include "cranklab/big_int.hpp"
#include "cranklab/laurent_polynomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cranklab {

/// Congruence modulus on one-generator Laurent polynomials, carried by a monic integer
/// polynomial phi(a) with phi(0) = +-1 so that a is a unit in Z[a]/(phi).
///
/// The symmetric Laurent form used when writing the modulus (a^2 + a^-2, S_2(a), ...) equals
/// a^-laurent_shift * phi(a) and generates the same congruence.
class CyclotomicModulus {
 public:
  CyclotomicModulus(std::string name, std::vector<long> phi_low_to_high, int laurent_shift);

  const std::string& name() const { return name_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  /// Coefficients phi_0 .. phi_degree; phi_degree == 1.
  const std::vector<long>& phi() const { return phi_; }
  int laurent_shift() const { return laurent_shift_; }

  LaurentPolynomial polynomial() const;
  LaurentPolynomial laurent_form() const;

  friend bool operator==(const CyclotomicModulus& x, const CyclotomicModulus& y) {
    return x.phi_ == y.phi_;
  }

 private:
  std::string name_;
  std::vector<long> phi_;
  int laurent_shift_ = 0;
};

/// The eight recognised tags: "A2", "A3+1", "S2", "S3", "S5", "a+1/a", "a-1+1/a", "a+1+1/a".
/// Throws std::invalid_argument for anything else.
CyclotomicModulus modulus_from_symbol(std::string_view name);
const std::vector<std::string>& modulus_symbols();

/// Dense residue in Z[a]/(phi): coefficient of a^i at index i, length = degree.
struct Residue {
  std::vector<BigInt> c;
  friend bool operator==(const Residue&, const Residue&) = default;
};

/// Arithmetic in the quotient ring Z[a]/(phi).
class QuotientArithmetic {
 public:
  explicit QuotientArithmetic(CyclotomicModulus modulus);

  const CyclotomicModulus& modulus() const { return modulus_; }
  int degree() const { return modulus_.degree(); }

  Residue zero() const;
  Residue one() const;
  bool is_zero(const Residue& x) const;
  /// +1 or -1 if x is that unit, otherwise 0.
  int unit_sign(const Residue& x) const;

  Residue from_integer(const BigInt& v) const;
  /// a^k for any integer k.
  Residue power_of_a(long long k) const;
  Residue reduce(const LaurentPolynomial& p) const;
  LaurentPolynomial lift(const Residue& r) const;

  void add_to(Residue& acc, const Residue& x) const;
  void sub_from(Residue& acc, const Residue& x) const;
  Residue mul(const Residue& x, const Residue& y) const;
  /// acc += x * y.
  void add_mul(Residue& acc, const Residue& x, const Residue& y) const;
  /// acc += sign * a^k * x.
  void add_a_power_mul(Residue& acc, int sign, long long k, const Residue& x) const;

 private:
  void fold_high_terms(std::vector<BigInt>& dense) const;

  CyclotomicModulus modulus_;
  Residue a_;
  Residue a_inverse_;
};

/// Canonical residue of p modulo m, returned with exponents in [0, degree).
LaurentPolynomial reduce(const LaurentPolynomial& p, const CyclotomicModulus& m);
/// True iff p - q is divisible by the modulus.
bool congruent(const LaurentPolynomial& p, const LaurentPolynomial& q, const CyclotomicModulus& m);

}  // namespace cranklab
