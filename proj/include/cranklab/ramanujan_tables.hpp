#pragma once

#include "cranklab/crank_dissections.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cranklab {

constexpr int kTableBudget = 2000;

/// Indices n >= 1 up to scan_bound with lambda_n congruent to target_residue modulo the modulus.
struct TableResult {
  int table_id = 1;
  std::string modulus_name;
  LaurentPolynomial target_residue;
  std::vector<int> indices;
  int scan_bound = 0;

  int count() const { return static_cast<int>(indices.size()); }
  /// Largest listed index, if any.
  std::optional<int> last_index() const;
};

/// Modulus symbol and target residue of a table (1..10).
std::pair<std::string, LaurentPolynomial> table_definition(int table_id);

/// The a-free products behind the tables and the conjectures, to order N:
///   1: f(-q^6,-q^10)/(-q^4;q^4)   2: q f(-q^2,-q^14)/(-q^4;q^4)   3: f(-q)f(-q^2)/f(-q^4)
///   4: f(-q^2)f(-q^3)/f(-q^6)     5: f(-q)^2/f(-q^3)
IntegerSeries table_product(int product_id, int N);

/// Direct route: classifies lambda_n reduced modulo each table's modulus, 1 <= n <= scan_bound.
/// Throws std::out_of_range if scan_bound exceeds the budget.
std::vector<TableResult> build_tables(int scan_bound, int budget = kTableBudget);

/// Product route: zero and +-1 coefficients of the a-free products. swap_2_3 exchanges the targets
/// of Tables 2 and 3 (a deliberately wrong classification).
std::vector<TableResult> product_route_tables(int scan_bound, bool swap_2_3 = false,
                                              int budget = kTableBudget);

/// Verified iff both routes give identical index lists for all ten tables.
VerificationReport cross_check_tables(int scan_bound, bool swap_2_3 = false,
                                      int budget = kTableBudget);

/// True iff no index appears in two tables over the same modulus.
bool tables_disjoint(const std::vector<TableResult>& tables);

/// "table_id,n" rows.
std::string tables_csv(const std::vector<TableResult>& tables);

}  // namespace cranklab
