#include "doctest.h"

#include "cranklab/conjecture_scan.hpp"
#include "cranklab/ramanujan_tables.hpp"

using namespace cranklab;

TEST_CASE("direct tables agree with congruent() on exact lambda_n") {
  const int bound = 250;
  const auto F = crank_gf(bound);
  const auto tables = build_tables(bound);
  REQUIRE(tables.size() == 10);
  for (const auto& t : tables) {
    const auto m = modulus_from_symbol(t.modulus_name);
    std::vector<int> expected;
    for (int n = 1; n <= bound; ++n) {
      if (congruent(F[n], t.target_residue, m)) expected.push_back(n);
    }
    CHECK_MESSAGE(t.indices == expected, "table " << t.table_id);
  }
}

TEST_CASE("saturation counts at 2000") {
  const auto tables = build_tables(2000);
  const std::vector<int> counts = {47, 27, 27, 22, 23, 3, 19, 26, 26, 2};
  for (int i = 0; i < 10; ++i) CHECK(tables[i].count() == counts[i]);
  CHECK(tables[5].indices == std::vector<int>{11, 15, 21});
  CHECK(tables[9].indices == std::vector<int>{14, 17});
  CHECK(tables[0].last_index() == 206);
  CHECK(tables_disjoint(tables));
}

TEST_CASE("routes agree and a swap is caught") {
  CHECK(cross_check_tables(500).status == Status::verified);
  const auto r = cross_check_tables(500, true);
  CHECK(r.status == Status::mismatch);
  CHECK(r.notes.find("table 2") != std::string::npos);
}

TEST_CASE("table budget") {
  CHECK_THROWS_AS(build_tables(2001), std::out_of_range);
  CHECK_THROWS_AS(build_tables(0), std::invalid_argument);
  CHECK_THROWS_AS(table_definition(11), std::invalid_argument);
}

TEST_CASE("csv export") {
  const auto csv = tables_csv(build_tables(30));
  CHECK(csv.rfind("table_id,n\n", 0) == 0);
  CHECK(csv.find("\n6,11\n") != std::string::npos);
  CHECK(csv.find("\n10,17\n") != std::string::npos);
}

TEST_CASE("conjecture products") {
  for (int id = 1; id <= 5; ++id) {
    const auto s = conjecture_product(ProductSpec::table(id), 40);
    CHECK(s[0] == (id == 2 ? 0 : 1));
  }
  CHECK(conjecture_product(ProductSpec::table(2), 40)[1] == 1);
  CHECK(conjecture_product(ProductSpec::table(3), 300) ==
        conjecture_product(ProductSpec::quotient(1, 2), 300));
  CHECK(conjecture_product(ProductSpec::table(4), 300) ==
        conjecture_product(ProductSpec::quotient(2, 3), 300));
  CHECK(conjecture_product(ProductSpec::table(5), 300) ==
        conjecture_product(ProductSpec::quotient(1, 1), 300));
  CHECK_THROWS_AS(conjecture_product(ProductSpec::table(1), 2001), std::out_of_range);
  CHECK_THROWS_AS(conjecture_product(ProductSpec::quotient(0, 2), 10), std::invalid_argument);
}

TEST_CASE("scanner on a hand-made series") {
  IntegerSeries s(IntegerRing{}, 12);
  // component 0 of the 2-dissection: 1, 2, 2, 3, 5, 8, 9; component 1: 5, 4, 4, 1, 0, -3.
  const long even[] = {1, 2, 2, 3, 5, 8, 9};
  const long odd[] = {5, 4, 4, 1, 0, -3};
  for (int i = 0; i < 7; ++i) s.coefficient(2 * i) = even[i];
  for (int i = 0; i < 6; ++i) s.coefficient(2 * i + 1) = odd[i];
  const auto r = monotonic_scan(s, 2, -1, 12);
  REQUIRE(r.size() == 2);
  CHECK(r[0].signed_values.direction == Direction::nondecreasing);
  CHECK(r[1].signed_values.direction == Direction::nonincreasing);
  // |odd| = 5, 4, 4, 1, 0, 3 turns back up.
  CHECK(r[1].absolute_values.direction == Direction::none);
  REQUIRE(r[1].absolute_values.violations.size() == 1);
  CHECK(r[1].absolute_values.violations[0].n == 9);
  CHECK(r[1].absolute_values.violations[0].coeff_next == 3);

  s.coefficient(6) = 0;
  const auto broken = monotonic_scan(s, 2, -1, 12);
  CHECK(broken[0].signed_values.direction == Direction::none);
  CHECK(broken[0].signed_values.violation_count == 1);
  CHECK_THROWS_AS(monotonic_scan(s, 2, 12, 12), std::invalid_argument);
  CHECK_THROWS_AS(monotonic_scan(s, 2, 0, 13), std::invalid_argument);
}

TEST_CASE("conjecture ranges") {
  for (int id = 1; id <= 5; ++id) {
    const auto spec = ProductSpec::table(id);
    const auto s = conjecture_product(spec, 2000);
    for (const auto& r : monotonic_scan(s, spec.default_m(), 600, 2000, spec.name())) {
      CHECK_MESSAGE(r.signed_values.direction != Direction::none, spec.name() << " j=" << r.component_j);
      CHECK(r.absolute_values.direction != Direction::none);
    }
    // Components recombine to the product.
    IntegerSeries sum(IntegerRing{}, 2000);
    for (const auto& c : dissect(s, spec.default_m())) sum += c;
    CHECK(sum == s);
  }
  const auto p3 = conjecture_product(ProductSpec::table(3), 2000);
  std::int64_t low = 0;
  for (const auto& r : monotonic_scan(p3, 4, 0, 2000)) low += r.signed_values.violation_count;
  CHECK(low > 0);
  // The 2-dissection leaves product 1 undissected; it is not monotone.
  bool any_bad = false;
  for (const auto& r : monotonic_scan(conjecture_product(ProductSpec::table(1), 2000), 2, 600, 2000)) {
    any_bad = any_bad || !r.monotone();
  }
  CHECK(any_bad);
}
