#pragma once

#include "cranklab/big_int.hpp"
#include "cranklab/truncated_series.hpp"
#include "cranklab/verification_report.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cranklab {

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  bool is_valid() const;
  bool has_distinct_parts() const;
  std::string to_string() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Triple (pi1, pi2, pi3) with pi1 into distinct parts; weight (-1)^{#pi1}.
struct VectorPartition {
  Partition pi1;
  Partition pi2;
  Partition pi3;

  int size() const { return pi1.size() + pi2.size() + pi3.size(); }
  int weight() const { return pi1.length() % 2 == 0 ? 1 : -1; }
  /// #pi2 - #pi3.
  int crank() const { return pi2.length() - pi3.length(); }
};

/// Signed counts of a statistic over the objects of size n.
struct StatisticCounts {
  int n = 0;
  std::map<int, std::int64_t> counts;

  std::int64_t at(int m) const;
  std::int64_t total() const;
  /// Counts aggregated by residue class of the statistic modulo t, index k = m mod t.
  std::vector<std::int64_t> fold(int t) const;
  friend bool operator==(const StatisticCounts&, const StatisticCounts&) = default;
};

enum class Statistic { crank, rank, vcrank };

std::string to_string(Statistic s);
/// "crank", "rank" or "vcrank"; throws std::invalid_argument otherwise.
Statistic statistic_from_string(std::string_view name);

/// Partitions of n in reverse lexicographic order, (n) first and 1^n last.
///
/// Zoghbi-Stojmenovic ZS1: constant amortised time per partition. The current partition is the
/// prefix of length length() of the internal array; ones follow the last part greater than one.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(int n);

  /// Parts of the current partition; empty for n = 0.
  std::span<const int> parts() const { return {x_.data() + 1, static_cast<std::size_t>(m_)}; }
  int length() const { return m_; }
  /// Number of parts equal to one.
  int ones() const { return m_ - h_; }
  int largest() const { return m_ == 0 ? 0 : x_[1]; }
  /// Advances to the next partition; false once the last one has been visited.
  bool next();

 private:
  std::vector<int> x_;
  int m_ = 0;
  int h_ = 0;
};

std::vector<Partition> partitions_of(int n);

/// p(0..N) from Euler's pentagonal recurrence.
std::vector<BigInt> partition_counts(int N);
BigInt partition_count(int n);

/// Crank: largest part if there are no ones, else (#parts > mu) - mu with mu = #ones.
int crank(const Partition& p);
/// Largest part minus number of parts.
int rank(const Partition& p);

/// Enumerated M(m, n) or N(m, n) for n >= 1. Statistic::vcrank delegates to vector_crank_counts.
StatisticCounts statistic_counts(int n, Statistic stat);

constexpr int kDefaultVectorBound = 18;

/// Calls visit for every vector partition of size n.
void for_each_vector_partition(int n, const std::function<void(const VectorPartition&)>& visit,
                               int bound = kDefaultVectorBound);
/// N_V(m, n) by signed enumeration of all triples. Throws std::out_of_range above bound.
StatisticCounts vector_crank_counts(int n, int bound = kDefaultVectorBound);

/// sum_{k>=0} q^{k^2 + offset*[k>0]} / ((aq;q)_k (q/a;q)_k) to order N. offset 0 is the rank
/// generating function; a nonzero offset is a deliberately corrupted variant.
LaurentSeries rank_gf_series(int N, int exponent_offset = 0);
/// Compares the a^m q^n coefficients of rank_gf_series against enumerated N(m, n), |m| <= window.
VerificationReport rank_gf_check(int N, int a_window, int exponent_offset = 0);

struct EquidistributionOptions {
  Statistic stat = Statistic::crank;
  int t = 5;
  int r = 4;
  int step = 5;
  int n_max = 99;
  /// Worker threads; 0 means hardware concurrency.
  int jobs = 0;
};

/// For every n = r (mod step), 1 <= n <= n_max: all t residue classes of the statistic equal p(n)/t.
VerificationReport equidistribution_check(const EquidistributionOptions& options);

}  // namespace cranklab
