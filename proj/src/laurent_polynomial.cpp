#include "cranklab/laurent_polynomial.hpp"

#include <sstream>
#include <vector>

namespace cranklab {

namespace {

void check_generator_count(int generators) {
  if (generators != 1 && generators != 2) {
    throw std::invalid_argument("LaurentPolynomial supports one or two generators");
  }
}

std::string power_text(char symbol, int e) {
  if (e == 1) return std::string(1, symbol);
  return std::string(1, symbol) + "^" + std::to_string(e);
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(int generator_count) : generators_(generator_count) {
  check_generator_count(generator_count);
}

LaurentPolynomial LaurentPolynomial::constant(const BigInt& c, int generator_count) {
  return monomial(c, 0, 0, generator_count);
}

LaurentPolynomial LaurentPolynomial::monomial(const BigInt& c, int a_exp, int b_exp,
                                              int generator_count) {
  LaurentPolynomial p(generator_count);
  if (generator_count == 1 && b_exp != 0) {
    throw std::invalid_argument("b exponent given to a one-generator polynomial");
  }
  p.add_term({a_exp, b_exp}, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::symmetric_power_sum(int n) {
  LaurentPolynomial p = monomial(1, n);
  p.add_term({-n, 0}, 1);
  return p;
}

LaurentPolynomial LaurentPolynomial::centered_sum(int n) {
  LaurentPolynomial p;
  for (int k = -n; k <= n; ++k) p.add_term({k, 0}, 1);
  return p;
}

BigInt LaurentPolynomial::coefficient(int a_exp, int b_exp) const {
  auto it = terms_.find({a_exp, b_exp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentPolynomial::min_a_exponent() const {
  if (terms_.empty()) return 0;
  return terms_.begin()->first.a;
}

int LaurentPolynomial::max_a_exponent() const {
  if (terms_.empty()) return 0;
  return terms_.rbegin()->first.a;
}

void LaurentPolynomial::add_term(Exponent e, const BigInt& c) {
  if (c == 0) return;
  if (generators_ == 1 && e.b != 0) {
    throw GeneratorMismatch("b exponent in a one-generator polynomial");
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPolynomial::add_shifted(const LaurentPolynomial& other, Exponent shift, int sign) {
  require_same_generators(other, "add_shifted");
  if (&other == this) {
    LaurentPolynomial copy = other;
    add_shifted(copy, shift, sign);
    return;
  }
  auto hint = terms_.begin();
  for (const auto& [e, c] : other.terms_) {
    const Exponent target{e.a + shift.a, e.b + shift.b};
    hint = terms_.lower_bound(target);
    if (hint != terms_.end() && hint->first == target) {
      if (sign > 0) {
        hint->second += c;
      } else {
        hint->second -= c;
      }
      if (hint->second == 0) hint = terms_.erase(hint);
    } else {
      hint = terms_.emplace_hint(hint, target, sign > 0 ? BigInt(c) : BigInt(-c));
    }
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  add_shifted(rhs, {0, 0}, 1);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  add_shifted(rhs, {0, 0}, -1);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
  lhs.require_same_generators(rhs, "mul");
  LaurentPolynomial out(lhs.generators_);
  const LaurentPolynomial& small = lhs.terms_.size() <= rhs.terms_.size() ? lhs : rhs;
  const LaurentPolynomial& large = &small == &lhs ? rhs : lhs;
  for (const auto& [e, c] : small.terms_) {
    if (c == 1) {
      out.add_shifted(large, e, 1);
    } else if (c == -1) {
      out.add_shifted(large, e, -1);
    } else {
      for (const auto& [f, d] : large.terms_) out.add_term({e.a + f.a, e.b + f.b}, c * d);
    }
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPolynomial LaurentPolynomial::substitute_a(int sign, int power) const {
  if (power == 0) throw std::invalid_argument("substitution a -> a^0 is not invertible");
  if (sign != 1 && sign != -1) throw std::invalid_argument("substitution sign must be +-1");
  LaurentPolynomial out(generators_);
  for (const auto& [e, c] : terms_) {
    const bool flip = sign < 0 && (e.a % 2 != 0);
    out.add_term({e.a * power, e.b}, flip ? BigInt(-c) : c);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::substitute_a(const LaurentPolynomial& target) const {
  if (!target.is_monomial()) {
    throw std::invalid_argument("substitution target must be a single monomial +-a^k");
  }
  const auto& [e, c] = *target.terms_.begin();
  if (e.b != 0 || e.a == 0 || (c != 1 && c != -1)) {
    throw std::invalid_argument("substitution target must have the form +-a^k with k != 0");
  }
  return substitute_a(c > 0 ? 1 : -1, e.a);
}

BigInt LaurentPolynomial::evaluate_at_one() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::vector<std::string> factors;
    if (e.a != 0) factors.push_back(power_text('a', e.a));
    if (e.b != 0) factors.push_back(power_text('b', e.b));
    const BigInt magnitude = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (factors.empty()) {
      out << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out << magnitude.get_str() << "*";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out << "*";
      out << factors[i];
    }
  }
  return out.str();
}

void LaurentPolynomial::require_same_generators(const LaurentPolynomial& other,
                                                const char* op) const {
  if (generators_ != other.generators_) {
    throw GeneratorMismatch(std::string("generator count mismatch in ") + op);
  }
}

LaurentPolynomial lp_combine(const LaurentPolynomial& p, const LaurentPolynomial& q, RingOp op) {
  switch (op) {
    case RingOp::add:
      return p + q;
    case RingOp::sub:
      return p - q;
    case RingOp::mul:
      return p * q;
  }
  throw std::invalid_argument("unknown ring operation");
}

}  // namespace cranklab
