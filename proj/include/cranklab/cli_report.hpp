#pragma once

#include "cranklab/conjecture_scan.hpp"
#include "cranklab/partition_lab.hpp"
#include "cranklab/ramanujan_tables.hpp"

#include <json.hpp>

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cranklab {

std::string engine_version();

// JSON forms of the payload types. BigInt values are written as decimal strings.
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const TableResult& t);
nlohmann::json to_json(const MonotonicityReport& r);
nlohmann::json to_json(const StatisticCounts& c, Statistic stat);

/// One entry of a manifest. Data payloads (tables) carry no status of their own.
struct Payload {
  std::string name;
  nlohmann::json body;
  std::optional<Status> status;
};

Payload make_payload(const VerificationReport& r);
Payload make_payload(const TableResult& t);
Payload make_payload(const MonotonicityReport& r);
Payload make_payload(const StatisticCounts& c, Statistic stat);

struct RunManifest {
  std::string command;
  std::map<std::string, int> orders;
  std::optional<std::string> timestamp;
  std::vector<Payload> payloads;

  /// verified iff every payload with a status is verified or corrected_form_verified.
  bool all_passed() const;
  bool corrected_forms_used() const;
  /// Stable key order; payloads sorted by name.
  nlohmann::json to_json() const;
};

/// A named identity check runnable at a given order. budget is the largest accepted order.
struct VerifierSpec {
  std::string target;  // verb in the grammar: jtp, dissection, residue, ...
  std::string key;     // discriminator within a target (m for dissection, modulus for residue)
  std::string name;    // payload name
  int default_order = 100;
  int budget = 100;
  std::function<VerificationReport(int order, int budget)> run;
};

using Registry = std::vector<VerifierSpec>;

/// Every verifier reachable from `verify`.
Registry default_registry();

/// Parses and executes one command line. Returns 0 (all passed), 1 (some payload is a mismatch)
/// or 2 (usage, configuration or budget error).
int run_cli(const std::vector<std::string>& args, const Registry& registry, std::ostream& out,
            std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace cranklab
