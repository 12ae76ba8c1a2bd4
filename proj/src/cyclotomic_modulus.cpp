#include "cranklab/cyclotomic_modulus.hpp"

#include <cstdlib>
#include <stdexcept>

namespace cranklab {

namespace {

// acc += s * x for a machine-sized s.
void addmul_small(BigInt& acc, const BigInt& x, long s) {
  if (s == 0) return;
  if (s == 1) {
    mpz_add(acc.get_mpz_t(), acc.get_mpz_t(), x.get_mpz_t());
  } else if (s == -1) {
    mpz_sub(acc.get_mpz_t(), acc.get_mpz_t(), x.get_mpz_t());
  } else if (s > 0) {
    mpz_addmul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(s));
  } else {
    mpz_submul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(-s));
  }
}

std::vector<long> all_ones(int length) { return std::vector<long>(length, 1); }

}  // namespace

CyclotomicModulus::CyclotomicModulus(std::string name, std::vector<long> phi_low_to_high,
                                     int laurent_shift)
    : name_(std::move(name)), phi_(std::move(phi_low_to_high)), laurent_shift_(laurent_shift) {
  if (phi_.size() < 2 || phi_.back() != 1) {
    throw std::invalid_argument("modulus polynomial must be monic of positive degree");
  }
  if (phi_.front() != 1 && phi_.front() != -1) {
    throw std::invalid_argument("modulus polynomial needs constant term +-1");
  }
  if (laurent_shift_ < 0) throw std::invalid_argument("negative Laurent shift");
}

LaurentPolynomial CyclotomicModulus::polynomial() const {
  LaurentPolynomial p;
  for (std::size_t i = 0; i < phi_.size(); ++i) p.add_term({static_cast<int>(i), 0}, phi_[i]);
  return p;
}

LaurentPolynomial CyclotomicModulus::laurent_form() const {
  LaurentPolynomial p;
  for (std::size_t i = 0; i < phi_.size(); ++i) {
    p.add_term({static_cast<int>(i) - laurent_shift_, 0}, phi_[i]);
  }
  return p;
}

const std::vector<std::string>& modulus_symbols() {
  static const std::vector<std::string> symbols = {"A2", "A3+1",    "S2",     "S3",
                                                   "S5", "a+1/a", "a-1+1/a", "a+1+1/a"};
  return symbols;
}

CyclotomicModulus modulus_from_symbol(std::string_view name) {
  if (name == "A2") return {"A2", {1, 0, 0, 0, 1}, 2};
  if (name == "A3+1") return {"A3+1", {1, 0, 0, 1, 0, 0, 1}, 3};
  if (name == "S2") return {"S2", all_ones(5), 2};
  if (name == "S3") return {"S3", all_ones(7), 3};
  if (name == "S5") return {"S5", all_ones(11), 5};
  if (name == "a+1/a") return {"a+1/a", {1, 0, 1}, 1};
  if (name == "a-1+1/a") return {"a-1+1/a", {1, -1, 1}, 1};
  if (name == "a+1+1/a") return {"a+1+1/a", {1, 1, 1}, 1};
  throw std::invalid_argument("unknown modulus tag: " + std::string(name));
}

QuotientArithmetic::QuotientArithmetic(CyclotomicModulus modulus) : modulus_(std::move(modulus)) {
  const int d = degree();
  const auto& phi = modulus_.phi();
  a_ = zero();
  a_inverse_ = zero();
  if (d == 1) {
    a_.c[0] = -phi[0];
  } else {
    a_.c[1] = 1;
  }
  // a * (sum_{i>=1} phi_i a^{i-1}) = -phi_0, and phi_0 = 1/phi_0.
  for (int j = 0; j < d; ++j) a_inverse_.c[j] = -phi[0] * phi[j + 1];
}

Residue QuotientArithmetic::zero() const { return Residue{std::vector<BigInt>(degree())}; }

Residue QuotientArithmetic::one() const {
  Residue r = zero();
  r.c[0] = 1;
  return r;
}

bool QuotientArithmetic::is_zero(const Residue& x) const {
  for (const auto& v : x.c) {
    if (v != 0) return false;
  }
  return true;
}

int QuotientArithmetic::unit_sign(const Residue& x) const {
  for (std::size_t i = 1; i < x.c.size(); ++i) {
    if (x.c[i] != 0) return 0;
  }
  if (x.c[0] == 1) return 1;
  if (x.c[0] == -1) return -1;
  return 0;
}

Residue QuotientArithmetic::from_integer(const BigInt& v) const {
  Residue r = zero();
  r.c[0] = v;
  return r;
}

Residue QuotientArithmetic::power_of_a(long long k) const {
  Residue base = k >= 0 ? a_ : a_inverse_;
  unsigned long long e = k >= 0 ? static_cast<unsigned long long>(k)
                                : static_cast<unsigned long long>(-k);
  Residue result = one();
  while (e) {
    if (e & 1ULL) result = mul(result, base);
    e >>= 1ULL;
    if (e) base = mul(base, base);
  }
  return result;
}

void QuotientArithmetic::fold_high_terms(std::vector<BigInt>& dense) const {
  const int d = degree();
  const auto& phi = modulus_.phi();
  for (int k = static_cast<int>(dense.size()) - 1; k >= d; --k) {
    if (dense[k] == 0) continue;
    const BigInt top = dense[k];
    dense[k] = 0;
    // a^k = a^{k-d} * a^d and a^d == -sum_{i<d} phi_i a^i.
    for (int i = 0; i < d; ++i) addmul_small(dense[k - d + i], top, -phi[i]);
  }
  dense.resize(d);
}

Residue QuotientArithmetic::reduce(const LaurentPolynomial& p) const {
  if (p.generator_count() != 1) {
    throw std::invalid_argument("reduction is defined for one-generator polynomials only");
  }
  if (p.is_zero()) return zero();
  const int low = p.min_a_exponent();
  const int high = p.max_a_exponent();
  std::vector<BigInt> dense(std::max(high - low + 1, degree()));
  for (const auto& [e, c] : p.terms()) dense[e.a - low] = c;
  fold_high_terms(dense);
  Residue shifted{std::move(dense)};
  if (low == 0) return shifted;
  return mul(shifted, power_of_a(low));
}

LaurentPolynomial QuotientArithmetic::lift(const Residue& r) const {
  LaurentPolynomial p;
  for (std::size_t i = 0; i < r.c.size(); ++i) p.add_term({static_cast<int>(i), 0}, r.c[i]);
  return p;
}

void QuotientArithmetic::add_to(Residue& acc, const Residue& x) const {
  for (std::size_t i = 0; i < acc.c.size(); ++i) acc.c[i] += x.c[i];
}

void QuotientArithmetic::sub_from(Residue& acc, const Residue& x) const {
  for (std::size_t i = 0; i < acc.c.size(); ++i) acc.c[i] -= x.c[i];
}

Residue QuotientArithmetic::mul(const Residue& x, const Residue& y) const {
  Residue out = zero();
  add_mul(out, x, y);
  return out;
}

void QuotientArithmetic::add_mul(Residue& acc, const Residue& x, const Residue& y) const {
  const int d = degree();
  std::vector<BigInt> dense(2 * d - 1);
  bool any = false;
  for (int i = 0; i < d; ++i) {
    if (x.c[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (y.c[j] == 0) continue;
      mpz_addmul(dense[i + j].get_mpz_t(), x.c[i].get_mpz_t(), y.c[j].get_mpz_t());
      any = true;
    }
  }
  if (!any) return;
  fold_high_terms(dense);
  for (int i = 0; i < d; ++i) acc.c[i] += dense[i];
}

void QuotientArithmetic::add_a_power_mul(Residue& acc, int sign, long long k,
                                         const Residue& x) const {
  const int d = degree();
  const auto& phi = modulus_.phi();
  const long s = sign;
  if (k == 0) {
    for (int i = 0; i < d; ++i) addmul_small(acc.c[i], x.c[i], s);
    return;
  }
  if (k == 1 && d > 1) {
    // (a x)_i = x_{i-1} - x_{d-1} phi_i
    const BigInt& top = x.c[d - 1];
    for (int i = 0; i < d; ++i) {
      if (i > 0) addmul_small(acc.c[i], x.c[i - 1], s);
      addmul_small(acc.c[i], top, -s * phi[i]);
    }
    return;
  }
  if (k == -1 && d > 1) {
    // (a^-1 x)_j = x_{j+1} - x_0 phi_0 phi_{j+1}
    const BigInt& bottom = x.c[0];
    for (int j = 0; j < d; ++j) {
      if (j + 1 < d) addmul_small(acc.c[j], x.c[j + 1], s);
      addmul_small(acc.c[j], bottom, -s * phi[0] * phi[j + 1]);
    }
    return;
  }
  Residue scaled = power_of_a(k);
  if (sign < 0) {
    for (auto& v : scaled.c) v = -v;
  }
  add_mul(acc, scaled, x);
}

LaurentPolynomial reduce(const LaurentPolynomial& p, const CyclotomicModulus& m) {
  QuotientArithmetic ring(m);
  return ring.lift(ring.reduce(p));
}

bool congruent(const LaurentPolynomial& p, const LaurentPolynomial& q,
               const CyclotomicModulus& m) {
  QuotientArithmetic ring(m);
  return ring.is_zero(ring.reduce(p - q));
}

}  // namespace cranklab
