#include "cranklab/partition_lab.hpp"

#include "cranklab/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cranklab {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Partition::is_valid() const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) return false;
    if (i > 0 && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

bool Partition::has_distinct_parts() const {
  return std::adjacent_find(parts.begin(), parts.end()) == parts.end();
}

std::string Partition::to_string() const {
  if (parts.empty()) return "()";
  std::ostringstream out;
  for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? "+" : "") << parts[i];
  return out.str();
}

std::int64_t StatisticCounts::at(int m) const {
  const auto it = counts.find(m);
  return it == counts.end() ? 0 : it->second;
}

std::int64_t StatisticCounts::total() const {
  std::int64_t s = 0;
  for (const auto& [m, c] : counts) s += c;
  return s;
}

std::vector<std::int64_t> StatisticCounts::fold(int t) const {
  if (t < 1) throw std::invalid_argument("fold modulus must be positive");
  std::vector<std::int64_t> out(t, 0);
  for (const auto& [m, c] : counts) out[((m % t) + t) % t] += c;
  return out;
}

std::string to_string(Statistic s) {
  switch (s) {
    case Statistic::crank:
      return "crank";
    case Statistic::rank:
      return "rank";
    case Statistic::vcrank:
      return "vcrank";
  }
  return "unknown";
}

Statistic statistic_from_string(std::string_view name) {
  if (name == "crank") return Statistic::crank;
  if (name == "rank") return Statistic::rank;
  if (name == "vcrank") return Statistic::vcrank;
  throw std::invalid_argument("unknown statistic: " + std::string(name));
}

PartitionEnumerator::PartitionEnumerator(int n) : x_(static_cast<std::size_t>(n) + 2, 1) {
  if (n < 0) throw std::invalid_argument("cannot partition a negative integer");
  if (n > 0) {
    x_[1] = n;
    m_ = 1;
    h_ = n > 1 ? 1 : 0;
  }
}

bool PartitionEnumerator::next() {
  if (h_ == 0) return false;  // all ones (or n = 0): this was the last partition
  if (x_[h_] == 2) {
    ++m_;
    x_[h_] = 1;
    --h_;
    return true;
  }
  const int r = x_[h_] - 1;
  int t = m_ - h_ + 1;
  x_[h_] = r;
  while (t >= r) {
    ++h_;
    x_[h_] = r;
    t -= r;
  }
  if (t == 0) {
    m_ = h_;
  } else {
    m_ = h_ + 1;
    if (t > 1) {
      ++h_;
      x_[h_] = t;
    }
  }
  // Every slot past h_ still holds 1: h_ only moves left after writing a 1.
  return true;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  PartitionEnumerator e(n);
  do {
    const auto p = e.parts();
    out.push_back({std::vector<int>(p.begin(), p.end())});
  } while (e.next());
  return out;
}

std::vector<BigInt> partition_counts(int N) {
  if (N < 0) throw std::invalid_argument("partition_counts needs N >= 0");
  std::vector<BigInt> p(static_cast<std::size_t>(N) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= N; ++n) {
    BigInt s = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const bool plus = k % 2 == 1;
      if (plus) {
        s += p[n - g1];
      } else {
        s -= p[n - g1];
      }
      const int g2 = k * (3 * k + 1) / 2;
      if (g2 <= n) {
        if (plus) {
          s += p[n - g2];
        } else {
          s -= p[n - g2];
        }
      }
    }
    p[n] = s;
  }
  return p;
}

BigInt partition_count(int n) { return partition_counts(n).back(); }

namespace {

// Statistic of the enumerator's current partition (n >= 1).
int crank_of(const PartitionEnumerator& e) {
  const int mu = e.ones();
  if (mu == 0) return e.largest();
  const auto parts = e.parts();
  const auto big = parts.first(static_cast<std::size_t>(e.length() - mu));
  const auto nu = std::partition_point(big.begin(), big.end(), [mu](int v) { return v > mu; }) -
                  big.begin();
  return static_cast<int>(nu) - mu;
}

int rank_of(const PartitionEnumerator& e) { return e.largest() - e.length(); }

void require_nonempty(const Partition& p, const char* what) {
  if (p.parts.empty()) {
    throw std::invalid_argument(std::string(what) + " of the empty partition is undefined");
  }
}

// Residue-class counts of crank or rank over all partitions of n, without building a map.
std::vector<std::int64_t> folded_counts(int n, Statistic stat, int t) {
  std::vector<std::int64_t> out(t, 0);
  PartitionEnumerator e(n);
  do {
    const int s = stat == Statistic::crank ? crank_of(e) : rank_of(e);
    ++out[((s % t) + t) % t];
  } while (e.next());
  return out;
}

}  // namespace

int crank(const Partition& p) {
  require_nonempty(p, "crank");
  const int mu = static_cast<int>(std::count(p.parts.begin(), p.parts.end(), 1));
  if (mu == 0) return p.parts.front();
  const int nu = static_cast<int>(
      std::count_if(p.parts.begin(), p.parts.end(), [mu](int v) { return v > mu; }));
  return nu - mu;
}

int rank(const Partition& p) {
  require_nonempty(p, "rank");
  return p.parts.front() - p.length();
}

StatisticCounts statistic_counts(int n, Statistic stat) {
  if (stat == Statistic::vcrank) return vector_crank_counts(n);
  if (n < 1) throw std::invalid_argument("crank and rank counts need n >= 1");
  StatisticCounts out{n, {}};
  PartitionEnumerator e(n);
  do {
    ++out.counts[stat == Statistic::crank ? crank_of(e) : rank_of(e)];
  } while (e.next());
  return out;
}

void for_each_vector_partition(int n, const std::function<void(const VectorPartition&)>& visit,
                               int bound) {
  if (n < 0) throw std::invalid_argument("vector partitions need n >= 0");
  if (n > bound) {
    throw std::out_of_range("vector partition enumeration capped at n = " +
                            std::to_string(bound));
  }
  std::vector<std::vector<Partition>> all(n + 1), distinct(n + 1);
  for (int k = 0; k <= n; ++k) {
    all[k] = partitions_of(k);
    for (const auto& p : all[k]) {
      if (p.has_distinct_parts()) distinct[k].push_back(p);
    }
  }
  VectorPartition v;
  for (int n1 = 0; n1 <= n; ++n1) {
    for (int n2 = 0; n1 + n2 <= n; ++n2) {
      const int n3 = n - n1 - n2;
      for (const auto& p1 : distinct[n1]) {
        v.pi1 = p1;
        for (const auto& p2 : all[n2]) {
          v.pi2 = p2;
          for (const auto& p3 : all[n3]) {
            v.pi3 = p3;
            visit(v);
          }
        }
      }
    }
  }
}

StatisticCounts vector_crank_counts(int n, int bound) {
  StatisticCounts out{n, {}};
  for_each_vector_partition(
      n, [&](const VectorPartition& v) { out.counts[v.crank()] += v.weight(); }, bound);
  std::erase_if(out.counts, [](const auto& kv) { return kv.second == 0; });
  return out;
}

LaurentSeries rank_gf_series(int N, int exponent_offset) {
  const LaurentRing ring(1);
  auto total = LaurentSeries::one(ring, N);
  for (int k = 1; k * k + exponent_offset <= N; ++k) {
    auto term = LaurentSeries::from_monomial(ring, Monomial::q_power(k * k + exponent_offset), N);
    for (int j = 1; j <= k; ++j) {
      term.divide_by_binomial({1, 1, 0, j});
      term.divide_by_binomial({1, -1, 0, j});
    }
    total += term;
  }
  return total;
}

VerificationReport rank_gf_check(int N, int a_window, int exponent_offset) {
  const auto series = rank_gf_series(N, exponent_offset);
  const std::string name = "rank generating function";
  for (int n = 0; n <= N; ++n) {
    LaurentPolynomial expected, actual;
    if (n == 0) {
      expected = LaurentPolynomial::constant(1);
    } else {
      for (const auto& [m, c] : statistic_counts(n, Statistic::rank).counts) {
        if (std::abs(m) <= a_window) expected.add_term({m, 0}, c);
      }
    }
    for (const auto& [e, c] : series[n].terms()) {
      if (std::abs(e.a) <= a_window) actual.add_term(e, c);
    }
    if (!(actual == expected)) {
      return mismatch_report(name, N, {n, actual.to_string(), expected.to_string()});
    }
  }
  auto r = verified_report(name, N);
  r.append_note("a-window |m| <= " + std::to_string(a_window) + "; N(0,0) = 1");
  return r;
}

namespace {

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << "]";
  return out.str();
}

}  // namespace

VerificationReport equidistribution_check(const EquidistributionOptions& o) {
  if (o.t < 1 || o.step < 1) throw std::invalid_argument("t and step must be positive");
  std::vector<int> ns;
  for (int n = 1; n <= o.n_max; ++n) {
    if (((n - o.r) % o.step + o.step) % o.step == 0) ns.push_back(n);
  }
  if (o.stat == Statistic::vcrank && !ns.empty() && ns.back() > kDefaultVectorBound) {
    throw std::out_of_range("vector crank equidistribution is capped at n = " +
                            std::to_string(kDefaultVectorBound));
  }
  // Largest n first so the long enumerations start early.
  std::reverse(ns.begin(), ns.end());
  std::vector<std::vector<std::int64_t>> classes(ns.size());
  parallel_for(ns.size(), o.jobs, [&](std::size_t i) {
    classes[i] = o.stat == Statistic::vcrank ? vector_crank_counts(ns[i]).fold(o.t)
                                             : folded_counts(ns[i], o.stat, o.t);
  });
  const auto p = partition_counts(std::max(o.n_max, 0));
  const std::string name = to_string(o.stat) + " equidistribution mod " + std::to_string(o.t) +
                           " on n = " + std::to_string(o.r) + " (mod " + std::to_string(o.step) +
                           ")";
  for (std::size_t i = ns.size(); i-- > 0;) {
    const int n = ns[i];
    const auto& c = classes[i];
    const bool equal = std::all_of(c.begin(), c.end(), [&](std::int64_t v) { return v == c[0]; });
    if (!equal) {
      std::ostringstream rhs;
      if (p[n] % o.t == 0) {
        const BigInt share = p[n] / o.t;
        rhs << "p(" << n << ")/" << o.t << " = " << share.get_str() << " in every class";
      } else {
        rhs << "p(" << n << ") = " << p[n].get_str() << " not divisible by " << o.t;
      }
      return mismatch_report(name, o.n_max, {n, join(c), rhs.str()});
    }
  }
  auto r = verified_report(name, o.n_max);
  r.append_note(std::to_string(ns.size()) + " values of n checked");
  return r;
}

}  // namespace cranklab
