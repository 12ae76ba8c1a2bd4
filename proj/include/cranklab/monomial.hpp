#pragma once

#include <cstdint>
#include <string>

namespace cranklab {

/// Signed monomial sign * a^a * b^b * q^q.
///
/// Doubles as the argument type of Ramanujan's theta function and as the step of a
/// q-Pochhammer symbol. Exponents may be negative; every consumer states which ones it accepts.
struct Monomial {
  int sign = 1;
  int a = 0;
  int b = 0;
  int q = 0;

  static Monomial q_power(int e, int sign = 1) { return {sign, 0, 0, e}; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;
  Monomial operator-() const { return {-sign, a, b, q}; }
  /// Integer power, negative exponents allowed.
  Monomial pow(std::int64_t n) const;
  /// Same monomial without its q part (the coefficient-ring factor).
  Monomial coefficient_part() const { return {sign, a, b, 0}; }

  std::string to_string() const;
};

}  // namespace cranklab
