#include "cranklab/ramanujan_tables.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cranklab {

namespace {

void check_budget(int scan_bound, int budget) {
  if (scan_bound < 1) throw std::invalid_argument("scan bound must be at least 1");
  if (scan_bound > budget) {
    throw std::out_of_range("scan bound " + std::to_string(scan_bound) + " exceeds the budget " +
                            std::to_string(budget));
  }
}

LaurentPolynomial c(long v) { return LaurentPolynomial::constant(v); }

LaurentPolynomial a_minus_one_plus_inverse() {
  return LaurentPolynomial::symmetric_power_sum(1) - c(1);
}

}  // namespace

std::optional<int> TableResult::last_index() const {
  if (indices.empty()) return std::nullopt;
  return indices.back();
}

std::pair<std::string, LaurentPolynomial> table_definition(int table_id) {
  switch (table_id) {
    case 1: return {"A2", c(0)};
    case 2: return {"A2", c(1)};
    case 3: return {"A2", c(-1)};
    case 4: return {"A2", a_minus_one_plus_inverse()};
    case 5: return {"A2", -a_minus_one_plus_inverse()};
    case 6: return {"a+1/a", c(0)};
    case 7: return {"a-1+1/a", c(0)};
    case 8: return {"a-1+1/a", c(1)};
    case 9: return {"a-1+1/a", c(-1)};
    case 10: return {"a+1+1/a", c(0)};
    default:
      throw std::invalid_argument("table id must be 1..10, got " + std::to_string(table_id));
  }
}

IntegerSeries table_product(int product_id, int N) {
  using F = SeriesFactor;
  switch (product_id) {
    case 1:
      return factor_product({{F::theta(6, 10), 1}, {F::poch(-1, 4, 4), -1}}, N);
    case 2: {
      IntegerSeries s(IntegerRing{}, N);
      if (N >= 1) {
        const auto body = factor_product({{F::theta(2, 14), 1}, {F::poch(-1, 4, 4), -1}}, N - 1);
        for (int n = 0; n < N; ++n) s.coefficient(n + 1) = body[n];
      }
      return s;
    }
    case 3:
    case 4:
    case 5: {
      static const char* names[] = {"a+1/a", "a-1+1/a", "a+1+1/a"};
      return residue_quotient(names[product_id - 3], N);
    }
    default:
      throw std::invalid_argument("product id must be 1..5, got " + std::to_string(product_id));
  }
}

std::vector<TableResult> build_tables(int scan_bound, int budget) {
  check_budget(scan_bound, budget);
  std::vector<TableResult> tables;
  std::map<std::string, ResidueSeries> reduced;
  for (int id = 1; id <= 10; ++id) {
    auto [name, target] = table_definition(id);
    auto it = reduced.find(name);
    if (it == reduced.end()) {
      it = reduced.emplace(name, crank_gf_mod(modulus_from_symbol(name), scan_bound)).first;
    }
    const auto& F = it->second;
    const Residue want = F.ring().reduce(target);
    TableResult t{id, name, target, {}, scan_bound};
    for (int n = 1; n <= scan_bound; ++n) {
      if (F[n] == want) t.indices.push_back(n);
    }
    tables.push_back(std::move(t));
  }
  return tables;
}

std::vector<TableResult> product_route_tables(int scan_bound, bool swap_2_3, int budget) {
  check_budget(scan_bound, budget);
  std::vector<IntegerSeries> products;
  for (int id = 1; id <= 5; ++id) products.push_back(table_product(id, scan_bound));
  const auto& t1 = products[0];
  const auto& t2 = products[1];

  // Which product and which coefficient value characterize each table. Table 1 needs both
  // 2-dissection components to vanish; they live on even and odd exponents respectively.
  struct Rule {
    std::vector<int> products;
    long value;
  };
  std::map<int, Rule> rules = {
      {1, {{0, 1}, 0}}, {2, {{0}, 1}},  {3, {{0}, -1}}, {4, {{1}, 1}}, {5, {{1}, -1}},
      {6, {{2}, 0}},    {7, {{3}, 0}},  {8, {{3}, 1}},  {9, {{3}, -1}}, {10, {{4}, 0}},
  };
  if (swap_2_3) std::swap(rules[2].value, rules[3].value);

  std::vector<TableResult> tables;
  for (int id = 1; id <= 10; ++id) {
    auto [name, target] = table_definition(id);
    TableResult t{id, name, target, {}, scan_bound};
    const Rule& rule = rules[id];
    for (int n = 1; n <= scan_bound; ++n) {
      bool hit;
      if (id == 1) {
        hit = t1[n] == 0 && t2[n] == 0;
      } else if (id >= 2 && id <= 5) {
        // Only exponents carried by the component: even for product 1, odd for product 2.
        const bool even = n % 2 == 0;
        const auto& s = rule.products[0] == 0 ? t1 : t2;
        hit = (rule.products[0] == 0) == even && s[n] == rule.value;
      } else {
        hit = products[rule.products[0]][n] == rule.value;
      }
      if (hit) t.indices.push_back(n);
    }
    tables.push_back(std::move(t));
  }
  return tables;
}

VerificationReport cross_check_tables(int scan_bound, bool swap_2_3, int budget) {
  const auto direct = build_tables(scan_bound, budget);
  const auto product = product_route_tables(scan_bound, swap_2_3, budget);
  const std::string name = "tables cross-check";
  for (int i = 0; i < 10; ++i) {
    const auto& d = direct[i].indices;
    const auto& p = product[i].indices;
    if (d == p) continue;
    // First index on which the two routes disagree.
    std::set<int> ds(d.begin(), d.end()), ps(p.begin(), p.end());
    int first = scan_bound + 1;
    for (int n : d) if (!ps.count(n)) { first = std::min(first, n); break; }
    for (int n : p) if (!ds.count(n)) { first = std::min(first, n); break; }
    auto r = mismatch_report(name, scan_bound,
                             {first, ds.count(first) ? "listed (direct)" : "absent (direct)",
                              ps.count(first) ? "listed (product)" : "absent (product)"});
    r.append_note("table " + std::to_string(i + 1) + " differs");
    return r;
  }
  auto r = verified_report(name, scan_bound);
  std::ostringstream counts;
  counts << "counts";
  for (const auto& t : direct) counts << " " << t.count();
  r.append_note(counts.str());
  if (!tables_disjoint(direct)) r.append_note("tables over one modulus overlap");
  return r;
}

bool tables_disjoint(const std::vector<TableResult>& tables) {
  std::map<std::string, std::set<int>> seen;
  for (const auto& t : tables) {
    auto& s = seen[t.modulus_name];
    for (int n : t.indices) {
      if (!s.insert(n).second) return false;
    }
  }
  return true;
}

std::string tables_csv(const std::vector<TableResult>& tables) {
  std::ostringstream out;
  out << "table_id,n\n";
  for (const auto& t : tables) {
    for (int n : t.indices) out << t.table_id << "," << n << "\n";
  }
  return out.str();
}

}  // namespace cranklab
