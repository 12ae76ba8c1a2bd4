#pragma once

#include "cranklab/ramanujan_tables.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cranklab {

constexpr int kConjectureBudget = 2000;

/// Either one of the five table products (id 1..5) or f(-q^alpha) f(-q^beta) / f(-q^{alpha+beta+1}).
struct ProductSpec {
  int id = 0;
  int alpha = 0;
  int beta = 0;

  static ProductSpec table(int id) { return {id, 0, 0}; }
  static ProductSpec quotient(int alpha, int beta) { return {0, alpha, beta}; }

  std::string name() const;
  /// alpha + beta + 1 for quotients and products 3..5; 16 for products 1 and 2.
  int default_m() const;
};

IntegerSeries conjecture_product(const ProductSpec& spec, int N, int budget = kConjectureBudget);

enum class Direction { nondecreasing, nonincreasing, none };
std::string to_string(Direction d);

struct Violation {
  int n = 0;
  BigInt coeff_n;
  BigInt coeff_next;
};

/// Monotonicity of one reading (signed or absolute values) of a component.
struct MonotonicityVerdict {
  Direction direction = Direction::nondecreasing;
  /// Steps against the prevailing direction (sign of last minus first); empty iff direction != none.
  std::vector<Violation> violations;
  std::int64_t violation_count = 0;
};

struct MonotonicityReport {
  std::string product_name;
  int dissection_m = 1;
  int component_j = 0;
  int threshold = 0;
  int bound = 0;
  MonotonicityVerdict signed_values;
  MonotonicityVerdict absolute_values;

  bool monotone() const {
    return signed_values.direction != Direction::none || absolute_values.direction != Direction::none;
  }
};

/// Listed violations per verdict are capped; violation_count is exact.
constexpr std::size_t kViolationListCap = 20;

/// One report per component j = 0..m-1, over pairs (n, n+m) with threshold < n and n + m <= bound.
std::vector<MonotonicityReport> monotonic_scan(const IntegerSeries& S, int m, int threshold,
                                               int bound, const std::string& product_name = "");

}  // namespace cranklab
