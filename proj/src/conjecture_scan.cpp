#include "cranklab/conjecture_scan.hpp"

#include <stdexcept>

namespace cranklab {

std::string ProductSpec::name() const {
  if (id != 0) return "product " + std::to_string(id);
  return "f(-q^" + std::to_string(alpha) + ")f(-q^" + std::to_string(beta) + ")/f(-q^" +
         std::to_string(alpha + beta + 1) + ")";
}

int ProductSpec::default_m() const {
  switch (id) {
    case 0: return alpha + beta + 1;
    case 1:
    case 2: return 16;
    case 3: return 4;
    case 4: return 6;
    case 5: return 3;
    default: throw std::invalid_argument("product id must be 1..5");
  }
}

IntegerSeries conjecture_product(const ProductSpec& spec, int N, int budget) {
  if (N > budget) {
    throw std::out_of_range("order " + std::to_string(N) + " exceeds the budget " +
                            std::to_string(budget));
  }
  if (spec.id != 0) return table_product(spec.id, N);
  if (spec.alpha < 1 || spec.beta < 1) throw std::invalid_argument("alpha and beta must be >= 1");
  using F = SeriesFactor;
  return factor_product({{F::euler(spec.alpha), 1},
                         {F::euler(spec.beta), 1},
                         {F::euler(spec.alpha + spec.beta + 1), -1}},
                        N);
}

std::string to_string(Direction d) {
  switch (d) {
    case Direction::nondecreasing: return "nondecreasing";
    case Direction::nonincreasing: return "nonincreasing";
    case Direction::none: return "none";
  }
  return "none";
}

namespace {

MonotonicityVerdict classify(const std::vector<int>& exponents, const std::vector<BigInt>& values) {
  MonotonicityVerdict v;
  if (values.size() < 2) return v;
  bool up = true, down = true;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (values[i + 1] < values[i]) up = false;
    if (values[i + 1] > values[i]) down = false;
  }
  if (up) return v;
  if (down) {
    v.direction = Direction::nonincreasing;
    return v;
  }
  v.direction = Direction::none;
  const bool expect_up = values.back() >= values.front();
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const bool bad = expect_up ? values[i + 1] < values[i] : values[i + 1] > values[i];
    if (!bad) continue;
    ++v.violation_count;
    if (v.violations.size() < kViolationListCap) {
      v.violations.push_back({exponents[i], values[i], values[i + 1]});
    }
  }
  return v;
}

}  // namespace

std::vector<MonotonicityReport> monotonic_scan(const IntegerSeries& S, int m, int threshold,
                                               int bound, const std::string& product_name) {
  if (m < 1) throw std::invalid_argument("dissection modulus must be >= 1");
  if (threshold >= bound) throw std::invalid_argument("threshold must be below bound");
  if (bound > S.order()) throw std::invalid_argument("bound exceeds the series order");
  std::vector<MonotonicityReport> out;
  for (int j = 0; j < m; ++j) {
    std::vector<int> exponents;
    std::vector<BigInt> signed_values, abs_values;
    int first = threshold + 1;
    first += ((j - first) % m + m) % m;
    for (int n = first; n <= bound; n += m) {
      exponents.push_back(n);
      signed_values.push_back(S[n]);
      abs_values.push_back(abs(S[n]));
    }
    MonotonicityReport r;
    r.product_name = product_name;
    r.dissection_m = m;
    r.component_j = j;
    r.threshold = threshold;
    r.bound = bound;
    r.signed_values = classify(exponents, signed_values);
    r.absolute_values = classify(exponents, abs_values);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace cranklab
