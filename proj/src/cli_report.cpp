#include "cranklab/cli_report.hpp"

#include "cranklab/parallel.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#ifndef CRANKLAB_VERSION
#define CRANKLAB_VERSION "0.0.0"
#endif

namespace cranklab {

using nlohmann::json;

std::string engine_version() { return CRANKLAB_VERSION; }

json to_json(const VerificationReport& r) {
  json j;
  j["kind"] = "verification";
  j["name"] = r.identity_name;
  j["order"] = r.order;
  j["modulus"] = r.modulus_name ? json(*r.modulus_name) : json(nullptr);
  j["status"] = to_string(r.status);
  if (r.first_mismatch) {
    j["first_mismatch"] = {{"exponent", r.first_mismatch->exponent},
                           {"lhs", r.first_mismatch->lhs},
                           {"rhs", r.first_mismatch->rhs}};
  } else {
    j["first_mismatch"] = nullptr;
  }
  j["notes"] = r.notes;
  return j;
}

json to_json(const TableResult& t) {
  json j;
  j["kind"] = "table";
  j["table_id"] = t.table_id;
  j["modulus"] = t.modulus_name;
  j["target_residue"] = t.target_residue.to_string();
  j["indices"] = t.indices;
  j["count"] = t.count();
  j["last_index"] = t.last_index() ? json(*t.last_index()) : json(nullptr);
  j["scan_bound"] = t.scan_bound;
  return j;
}

namespace {

json verdict_json(const MonotonicityVerdict& v) {
  json violations = json::array();
  for (const auto& x : v.violations) {
    violations.push_back({{"n", x.n}, {"coeff_n", x.coeff_n.get_str()},
                          {"coeff_next", x.coeff_next.get_str()}});
  }
  return {{"direction", to_string(v.direction)},
          {"violation_count", v.violation_count},
          {"violations", violations}};
}

std::string monotonicity_name(const MonotonicityReport& r) {
  return "conjecture " + r.product_name + " m=" + std::to_string(r.dissection_m) + " j=" +
         std::to_string(r.component_j);
}

}  // namespace

json to_json(const MonotonicityReport& r) {
  return {{"kind", "monotonicity"},
          {"product", r.product_name},
          {"dissection_m", r.dissection_m},
          {"component_j", r.component_j},
          {"threshold", r.threshold},
          {"bound", r.bound},
          {"signed", verdict_json(r.signed_values)},
          {"absolute", verdict_json(r.absolute_values)}};
}

json to_json(const StatisticCounts& c, Statistic stat) {
  json counts = json::array();
  for (const auto& [m, v] : c.counts) counts.push_back({m, v});
  return {{"kind", "counts"}, {"statistic", to_string(stat)}, {"n", c.n},
          {"counts", counts}, {"total", c.total()}};
}

Payload make_payload(const VerificationReport& r) { return {r.identity_name, to_json(r), r.status}; }

Payload make_payload(const TableResult& t) {
  return {"table " + std::to_string(t.table_id), to_json(t), std::nullopt};
}

Payload make_payload(const MonotonicityReport& r) {
  Payload p{monotonicity_name(r), to_json(r), r.monotone() ? Status::verified : Status::mismatch};
  p.body["status"] = to_string(*p.status);
  return p;
}

Payload make_payload(const StatisticCounts& c, Statistic stat) {
  Payload p{"counts " + to_string(stat) + " n=" + std::to_string(c.n), to_json(c, stat),
            std::nullopt};
  const bool ok = BigInt(static_cast<long>(c.total())) == partition_count(c.n);
  p.status = ok ? Status::verified : Status::mismatch;
  p.body["status"] = to_string(*p.status);
  p.body["p_n"] = partition_count(c.n).get_str();
  return p;
}

bool RunManifest::all_passed() const {
  return std::all_of(payloads.begin(), payloads.end(),
                     [](const Payload& p) { return !p.status || *p.status != Status::mismatch; });
}

bool RunManifest::corrected_forms_used() const {
  return std::any_of(payloads.begin(), payloads.end(), [](const Payload& p) {
    return p.status && *p.status == Status::corrected_form_verified;
  });
}

json RunManifest::to_json() const {
  auto sorted = payloads;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Payload& x, const Payload& y) { return x.name < y.name; });
  json list = json::array();
  for (const auto& p : sorted) {
    json body = p.body;
    body["name"] = p.name;
    list.push_back(body);
  }
  json j;
  j["schema"] = 1;
  j["engine_version"] = engine_version();
  j["command"] = command;
  if (timestamp) j["timestamp"] = *timestamp;
  j["status"] = all_passed() ? "verified" : "mismatch";
  j["corrected_forms_used"] = corrected_forms_used();
  j["orders"] = orders;
  j["payloads"] = list;
  return j;
}

// Registry ------------------------------------------------------------------------------------

Registry default_registry() {
  Registry r;
  auto add = [&](std::string target, std::string key, std::string name, int order, int budget,
                 std::function<VerificationReport(int, int)> run) {
    r.push_back({std::move(target), std::move(key), std::move(name), order, budget, std::move(run)});
  };
  for (const auto& [x, y] : jtp_grid()) {
    add("jtp", "", "jtp f(" + x.to_string() + ", " + y.to_string() + ")", 100, 400,
        [x, y](int N, int) { return jtp_check(x, y, N); });
  }
  add("quintuple", "q", "quintuple P=q Q=q^2", 80, 300,
      [](int N, int) { return quintuple_check(qarg(1, 1), qarg(1, 2), N); });
  add("quintuple", "aq", "quintuple P=aq Q=q^2", 60, 200,
      [](int N, int) { return quintuple_check(Monomial{1, 1, 0, 1}, qarg(1, 2), N); });
  add("winquist", "", "winquist", 30, 100, [](int N, int) { return winquist_check(N); });
  add("addition", "", "addition f(q, q^2) terms=3", 100, 400,
      [](int N, int) { return addition_check(qarg(1, 1), qarg(1, 2), 3, N); });
  add("shift", "", "shift f(-q, -q^3) n=2", 100, 400,
      [](int N, int) { return shift_check(qarg(-1, 1), qarg(-1, 3), 2, N); });
  add("ram1", "", "ram1", 200, 600, [](int N, int) { return verify_ram1(N); });
  add("kw", "", "kac-wakimoto", 200, 600, [](int N, int) { return verify_kac_wakimoto(N); });
  add("s1s2", "", "s1 s2 identity", 200, 600, [](int N, int) { return verify_s1_s2(N); });
  add("rationalization", "", "rationalization", 200, 2000,
      [](int N, int) { return rationalization_residue(N); });
  for (int m : {2, 3, 5, 7, 11}) {
    const int budget = default_dissection_budget(m);
    add("dissection", std::to_string(m), "dissection m=" + std::to_string(m), budget, budget,
        [m](int N, int B) { return verify_dissection(m, N, B); });
  }
  for (const std::string mod : {"a+1/a", "a-1+1/a", "a+1+1/a"}) {
    add("residue", mod, "residue congruence mod " + mod, 300, 2000,
        [mod](int N, int) { return residue_gf(mod, N); });
  }
  return r;
}

// CLI -----------------------------------------------------------------------------------------

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int jobs_from_environment() {
  const char* env = std::getenv("CRANKLAB_JOBS");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used != std::string(env).size() || v < 0) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("CRANKLAB_JOBS must be a nonnegative integer, got '") + env + "'");
  }
}

std::string summary_line(const Payload& p) {
  std::ostringstream out;
  const std::string tag = p.status ? to_string(*p.status) : "data";
  out << std::left;
  out.width(24);
  out << tag << " " << p.name;
  const auto& b = p.body;
  if (b.contains("order")) out << " (order " << b["order"].get<int>() << ")";
  if (b["kind"] == "table") {
    out << ": " << b["count"].get<int>() << " indices";
    if (!b["last_index"].is_null()) out << ", last " << b["last_index"].get<int>();
  }
  if (b["kind"] == "monotonicity") {
    out << ": signed " << b["signed"]["direction"].get<std::string>() << ", absolute "
        << b["absolute"]["direction"].get<std::string>();
  }
  if (b.contains("first_mismatch") && !b["first_mismatch"].is_null()) {
    out << ": first mismatch at q^" << b["first_mismatch"]["exponent"].get<int>();
  }
  return out.str();
}

struct Options {
  std::string out = "cranklab-report.json";
  bool no_timestamp = false;
  int jobs = 0;
  std::optional<int> order;
  std::optional<int> budget;

  // verify
  std::string target;
  bool all = false;
  std::optional<int> m;
  std::string modulus;

  // counts / equidist
  int n = 0;
  std::string stat = "crank";
  int t = 5, r = 4, step = 5, max = 99;

  // tables
  int bound = 0;
  std::string csv_dir;

  // conjecture
  std::optional<int> product;
  std::optional<int> alpha, beta;
  int threshold = 600;
};

std::vector<const VerifierSpec*> select_verifiers(const Registry& registry, const Options& o) {
  std::vector<const VerifierSpec*> chosen;
  if (o.all) {
    if (!o.target.empty()) throw UsageError("give either a target or --all, not both");
    for (const auto& v : registry) chosen.push_back(&v);
    return chosen;
  }
  if (o.target.empty()) throw UsageError("verify needs a target or --all");
  std::string key;
  if (o.target == "dissection") {
    if (!o.m) throw UsageError("verify dissection needs --m {2,3,5,7,11}");
    key = std::to_string(*o.m);
  } else if (o.m) {
    throw UsageError("--m only applies to verify dissection");
  }
  if (o.target == "residue") {
    if (o.modulus.empty()) throw UsageError("verify residue needs --mod NAME");
    key = o.modulus;
  } else if (!o.modulus.empty()) {
    throw UsageError("--mod only applies to verify residue");
  }
  bool known_target = false;
  for (const auto& v : registry) {
    if (v.target != o.target) continue;
    known_target = true;
    if (key.empty() || v.key == key) chosen.push_back(&v);
  }
  if (!known_target) throw UsageError("unknown verify target '" + o.target + "'");
  if (chosen.empty()) throw UsageError("no " + o.target + " verifier for '" + key + "'");
  return chosen;
}

void run_verify(const Registry& registry, const Options& o, RunManifest& manifest) {
  const auto chosen = select_verifiers(registry, o);
  struct Job {
    const VerifierSpec* spec;
    int order;
    int budget;
    bool clamped;
  };
  std::vector<Job> jobs;
  for (const auto* v : chosen) {
    const int budget = o.budget.value_or(v->budget);
    int order = o.order.value_or(v->default_order);
    bool clamped = false;
    if (order < 0) throw UsageError("--order must be nonnegative");
    if (order > budget) {
      // A suite run keeps going at the budget; a single target is a configuration error.
      if (!o.all) {
        throw UsageError("order " + std::to_string(order) + " exceeds the budget " +
                         std::to_string(budget) + " of " + v->name + " (raise it with --budget)");
      }
      order = budget;
      clamped = true;
    }
    jobs.push_back({v, order, budget, clamped});
  }
  std::vector<VerificationReport> reports(jobs.size());
  // Largest orders first so the slow checks start early.
  std::vector<std::size_t> schedule(jobs.size());
  for (std::size_t i = 0; i < schedule.size(); ++i) schedule[i] = i;
  std::stable_sort(schedule.begin(), schedule.end(),
                   [&](std::size_t a, std::size_t b) { return jobs[a].order > jobs[b].order; });
  parallel_for(schedule.size(), o.jobs, [&](std::size_t k) {
    const auto& job = jobs[schedule[k]];
    auto rep = job.spec->run(job.order, job.budget);
    rep.identity_name = job.spec->name;
    if (job.clamped) rep.append_note("order clamped to budget " + std::to_string(job.budget));
    reports[schedule[k]] = std::move(rep);
  });
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    manifest.orders[jobs[i].spec->name] = jobs[i].order;
    manifest.payloads.push_back(make_payload(reports[i]));
  }
}

void run_tables(const Options& o, RunManifest& manifest) {
  const int budget = o.budget.value_or(kTableBudget);
  if (o.bound > budget) {
    throw UsageError("bound " + std::to_string(o.bound) + " exceeds the budget " +
                     std::to_string(budget));
  }
  const auto tables = build_tables(o.bound, budget);
  for (const auto& t : tables) manifest.payloads.push_back(make_payload(t));
  manifest.payloads.push_back(make_payload(cross_check_tables(o.bound, false, budget)));
  manifest.orders["tables"] = o.bound;
  if (!o.csv_dir.empty()) {
    std::filesystem::create_directories(o.csv_dir);
    const auto path = std::filesystem::path(o.csv_dir) / "tables.csv";
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path.string());
    f << tables_csv(tables);
  }
}

void run_conjecture(const Options& o, RunManifest& manifest) {
  ProductSpec spec;
  if (o.product) {
    if (o.alpha || o.beta) throw UsageError("give either --product or --alpha/--beta");
    if (*o.product < 1 || *o.product > 5) throw UsageError("--product must be 1..5");
    spec = ProductSpec::table(*o.product);
  } else {
    if (!o.alpha || !o.beta) throw UsageError("conjecture needs --product or both --alpha and --beta");
    spec = ProductSpec::quotient(*o.alpha, *o.beta);
  }
  const int m = o.m.value_or(spec.default_m());
  const int budget = o.budget.value_or(kConjectureBudget);
  if (o.bound > budget) {
    throw UsageError("bound " + std::to_string(o.bound) + " exceeds the budget " +
                     std::to_string(budget));
  }
  const auto series = conjecture_product(spec, o.bound, budget);
  for (const auto& r : monotonic_scan(series, m, o.threshold, o.bound, spec.name())) {
    manifest.payloads.push_back(make_payload(r));
  }
  manifest.orders[spec.name()] = o.bound;
}

std::string join_command(const std::vector<std::string>& args) {
  std::string s = "cranklab";
  for (const auto& a : args) s += " " + a;
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, const Registry& registry, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Exact q-series and crank verification"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out, "JSON report path")->capture_default_str();
  app.add_flag("--no-timestamp", o.no_timestamp, "Leave the timestamp out of the report");
  auto* jobs_opt = app.add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");
  jobs_opt->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Check identities and congruences");
  verify->add_option("target", o.target,
                     "jtp|quintuple|winquist|addition|shift|ram1|kw|s1s2|rationalization|"
                     "dissection|residue");
  verify->add_flag("--all", o.all, "Run every verifier");
  verify->add_option("--m", o.m, "Dissection modulus")->check(CLI::IsMember({2, 3, 5, 7, 11}));
  verify->add_option("--mod", o.modulus, "Residue modulus")
      ->check(CLI::IsMember({"a+1/a", "a-1+1/a", "a+1+1/a"}));
  verify->add_option("--order", o.order, "Truncation order");
  verify->add_option("--budget", o.budget, "Largest accepted order");

  auto* counts = app.add_subcommand("counts", "Enumerate a partition statistic");
  counts->add_option("--n", o.n, "Size")->required()->check(CLI::Range(1, 200));
  counts->add_option("--stat", o.stat, "crank|rank|vcrank")
      ->required()
      ->check(CLI::IsMember({"crank", "rank", "vcrank"}));

  auto* equidist = app.add_subcommand("equidist", "Check equidistribution of a statistic");
  equidist->add_option("--stat", o.stat)->required()->check(CLI::IsMember({"crank", "rank", "vcrank"}));
  equidist->add_option("--t", o.t)->required()->check(CLI::PositiveNumber);
  equidist->add_option("--r", o.r)->required()->check(CLI::NonNegativeNumber);
  equidist->add_option("--step", o.step)->required()->check(CLI::PositiveNumber);
  equidist->add_option("--max", o.max)->capture_default_str()->check(CLI::Range(1, 200));

  auto* tables = app.add_subcommand("tables", "Build the ten index tables");
  tables->add_option("--bound", o.bound)->required()->check(CLI::PositiveNumber);
  tables->add_option("--csv", o.csv_dir, "Directory for tables.csv");
  tables->add_option("--budget", o.budget, "Largest accepted bound");

  auto* conjecture = app.add_subcommand("conjecture", "Scan dissection components for monotonicity");
  conjecture->add_option("--product", o.product, "Product 1..5");
  conjecture->add_option("--alpha", o.alpha)->check(CLI::PositiveNumber);
  conjecture->add_option("--beta", o.beta)->check(CLI::PositiveNumber);
  conjecture->add_option("--m", o.m, "Dissection modulus")->check(CLI::PositiveNumber);
  conjecture->add_option("--threshold", o.threshold)->capture_default_str();
  conjecture->add_option("--bound", o.bound)->required()->check(CLI::PositiveNumber);
  conjecture->add_option("--budget", o.budget, "Largest accepted bound");

  try {
    o.jobs = jobs_from_environment();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  RunManifest manifest;
  manifest.command = join_command(args);
  if (!o.no_timestamp) manifest.timestamp = utc_timestamp();
  try {
    if (verify->parsed()) {
      run_verify(registry, o, manifest);
    } else if (counts->parsed()) {
      const Statistic stat = statistic_from_string(o.stat);
      if (stat == Statistic::vcrank && o.n > kDefaultVectorBound) {
        throw UsageError("vcrank enumeration is limited to n <= " +
                         std::to_string(kDefaultVectorBound));
      }
      manifest.payloads.push_back(make_payload(statistic_counts(o.n, stat), stat));
      manifest.orders["counts"] = o.n;
    } else if (equidist->parsed()) {
      EquidistributionOptions eo{statistic_from_string(o.stat), o.t, o.r, o.step, o.max, o.jobs};
      manifest.payloads.push_back(make_payload(equidistribution_check(eo)));
      manifest.orders["equidist"] = o.max;
    } else if (tables->parsed()) {
      run_tables(o, manifest);
    } else if (conjecture->parsed()) {
      run_conjecture(o, manifest);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const json report = manifest.to_json();
  {
    std::ofstream f(o.out);
    if (!f) {
      err << "error: cannot write " << o.out << "\n";
      return 2;
    }
    f << report.dump(2) << "\n";
  }
  std::vector<Payload> sorted = manifest.payloads;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Payload& x, const Payload& y) { return x.name < y.name; });
  for (const auto& p : sorted) out << summary_line(p) << "\n";
  out << (manifest.all_passed() ? "status: verified" : "status: mismatch") << " ("
      << sorted.size() << " payloads";
  if (manifest.corrected_forms_used()) out << ", corrected forms used";
  out << "); report written to " << o.out << "\n";
  return manifest.all_passed() ? 0 : 1;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, default_registry(), std::cout, std::cerr);
}

}  // namespace cranklab
