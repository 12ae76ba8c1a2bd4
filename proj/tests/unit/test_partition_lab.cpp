#include "doctest.h"

#include "cranklab/partition_lab.hpp"
#include "cranklab/series_products.hpp"

#include <set>

using namespace cranklab;

namespace {

// Oracle: all partitions of n with parts <= max_part, generated recursively in reverse lex order.
void oracle_partitions(int n, int max_part, std::vector<int>& prefix,
                       std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    prefix.push_back(k);
    oracle_partitions(n - k, k, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> oracle_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  oracle_partitions(n, n, prefix, out);
  return out;
}

}  // namespace

TEST_CASE("partitions_of examples") {
  const auto p0 = partitions_of(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].parts.empty());
  const auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0].parts == std::vector<int>{4});
  CHECK(p4[1].parts == std::vector<int>{3, 1});
  CHECK(p4[2].parts == std::vector<int>{2, 2});
  CHECK(p4[3].parts == std::vector<int>{2, 1, 1});
  CHECK(p4[4].parts == std::vector<int>{1, 1, 1, 1});
  CHECK(partitions_of(9).size() == 30);
}

TEST_CASE("enumeration matches the recursive oracle in order") {
  for (int n = 0; n <= 25; ++n) {
    CAPTURE(n);
    const auto fast = partitions_of(n);
    const auto slow = oracle_partitions(n);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) {
      REQUIRE(fast[i].parts == slow[i]);
      REQUIRE(fast[i].is_valid());
      REQUIRE(fast[i].size() == n);
    }
  }
}

TEST_CASE("partition counts") {
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(4) == 5);
  CHECK(partition_count(9) == 30);
  CHECK(partition_count(100) == BigInt("190569292"));
  const auto p = partition_counts(60);
  for (int n = 0; n <= 60; ++n) {
    std::size_t count = 0;
    PartitionEnumerator e(n);
    do ++count;
    while (e.next());
    CHECK(p[n] == count);
  }
}

TEST_CASE("pentagonal counts equal inverse Euler coefficients to 2000") {
  const auto p = partition_counts(2000);
  const auto inv = euler_function(1, 2000).inverse();
  for (int n = 0; n <= 2000; ++n) REQUIRE(p[n] == inv[n]);
  CHECK(p[2000].get_str() == "4720819175619413888601432406799959512200344166");
}

TEST_CASE("crank and rank examples") {
  CHECK(crank({{4}}) == 4);
  CHECK(crank({{2, 1, 1}}) == -2);
  CHECK(crank({{1, 1, 1}}) == -3);
  CHECK(crank({{3, 2, 1}}) == 1);
  CHECK(rank({{4}}) == 3);
  CHECK(rank({{1, 1, 1, 1}}) == -3);
  CHECK(rank({{2, 2}}) == 0);
  CHECK_THROWS(crank({}));
  CHECK_THROWS(rank({}));
}

TEST_CASE("statistic counts examples") {
  const auto c4 = statistic_counts(4, Statistic::crank);
  CHECK(c4.fold(5) == std::vector<std::int64_t>{1, 1, 1, 1, 1});
  CHECK(statistic_counts(4, Statistic::rank).fold(5) == std::vector<std::int64_t>{1, 1, 1, 1, 1});
  const auto c1 = statistic_counts(1, Statistic::crank);
  CHECK(c1.counts == std::map<int, std::int64_t>{{-1, 1}});
}

TEST_CASE("enumerated statistics agree with the definitions") {
  for (int n = 1; n <= 22; ++n) {
    StatisticCounts c{n, {}}, r{n, {}};
    for (const auto& p : partitions_of(n)) {
      ++c.counts[crank(p)];
      ++r.counts[rank(p)];
    }
    CHECK(statistic_counts(n, Statistic::crank) == c);
    CHECK(statistic_counts(n, Statistic::rank) == r);
  }
}

TEST_CASE("sums and symmetry") {
  const auto p = partition_counts(40);
  for (int n = 2; n <= 40; ++n) {
    const auto c = statistic_counts(n, Statistic::crank);
    CHECK(c.total() == p[n]);
  }
  for (int n = 1; n <= 30; ++n) {
    for (auto stat : {Statistic::crank, Statistic::rank}) {
      const auto c = statistic_counts(n, stat);
      if (stat == Statistic::crank && n == 1) continue;
      for (const auto& [m, k] : c.counts) CHECK(c.at(-m) == k);
    }
  }
}

TEST_CASE("vector crank") {
  CHECK(vector_crank_counts(0).counts == std::map<int, std::int64_t>{{0, 1}});
  CHECK(vector_crank_counts(4).total() == 5);
  CHECK(vector_crank_counts(4).fold(5) == std::vector<std::int64_t>{1, 1, 1, 1, 1});
  const auto p = partition_counts(18);
  for (int n = 0; n <= 12; ++n) CHECK(vector_crank_counts(n).total() == p[n]);
  for (int n = 2; n <= 12; ++n) {
    CHECK(vector_crank_counts(n).counts == statistic_counts(n, Statistic::crank).counts);
  }
  CHECK_THROWS_AS(vector_crank_counts(19), std::out_of_range);
  CHECK_NOTHROW(vector_crank_counts(5, 5));
  CHECK_THROWS_AS(vector_crank_counts(6, 5), std::out_of_range);
  // The enumerator visits distinct-part first components only.
  for_each_vector_partition(6, [](const VectorPartition& v) {
    CHECK(v.pi1.has_distinct_parts());
    CHECK(v.size() == 6);
  });
}

TEST_CASE("rank generating function") {
  CHECK(rank_gf_check(0, 5).status == Status::verified);
  CHECK(rank_gf_check(10, 12).status == Status::verified);
  CHECK(rank_gf_check(25, 30).status == Status::verified);
  const auto bad = rank_gf_check(10, 12, 1);
  CHECK(bad.status == Status::mismatch);
  CHECK(bad.first_mismatch->exponent == 1);
}

TEST_CASE("equidistribution") {
  EquidistributionOptions o;
  o.stat = Statistic::crank;
  o.t = 5; o.r = 4; o.step = 5; o.n_max = 64;
  CHECK(equidistribution_check(o).status == Status::verified);
  o.t = 7; o.r = 5; o.step = 7; o.n_max = 61;
  CHECK(equidistribution_check(o).status == Status::verified);
  o.stat = Statistic::rank;
  CHECK(equidistribution_check(o).status == Status::verified);
  o.t = 11; o.r = 6; o.step = 11; o.n_max = 61;
  const auto r = equidistribution_check(o);
  CHECK(r.status == Status::mismatch);
  CHECK(r.first_mismatch->exponent == 6);
  o.stat = Statistic::crank;
  CHECK(equidistribution_check(o).status == Status::verified);
  o.stat = Statistic::vcrank;
  o.t = 5; o.r = 4; o.step = 5; o.n_max = 14;
  CHECK(equidistribution_check(o).status == Status::verified);
  o.n_max = 30;
  CHECK_THROWS(equidistribution_check(o));
  CHECK(statistic_from_string("rank") == Statistic::rank);
  CHECK_THROWS(statistic_from_string("ranks"));
}
