#include "cranklab/monomial.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace cranklab {

namespace {

int checked_exponent(std::int64_t v) {
  if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min()) {
    throw std::overflow_error("monomial exponent out of range");
  }
  return static_cast<int>(v);
}

void append_power(std::ostringstream& out, bool& first, char symbol, int e) {
  if (e == 0) return;
  if (!first) out << "*";
  first = false;
  out << symbol;
  if (e != 1) out << "^" << e;
}

}  // namespace

Monomial Monomial::operator*(const Monomial& o) const {
  return {sign * o.sign, checked_exponent(std::int64_t{a} + o.a),
          checked_exponent(std::int64_t{b} + o.b), checked_exponent(std::int64_t{q} + o.q)};
}

Monomial Monomial::operator/(const Monomial& o) const {
  return {sign * o.sign, checked_exponent(std::int64_t{a} - o.a),
          checked_exponent(std::int64_t{b} - o.b), checked_exponent(std::int64_t{q} - o.q)};
}

Monomial Monomial::pow(std::int64_t n) const {
  const int s = (sign < 0 && (n % 2 != 0)) ? -1 : 1;
  return {s, checked_exponent(a * n), checked_exponent(b * n), checked_exponent(q * n)};
}

std::string Monomial::to_string() const {
  std::ostringstream out;
  if (sign < 0) out << "-";
  bool first = true;
  append_power(out, first, 'a', a);
  append_power(out, first, 'b', b);
  append_power(out, first, 'q', q);
  if (first) out << "1";
  return out.str();
}

}  // namespace cranklab
