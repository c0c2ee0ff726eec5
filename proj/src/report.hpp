#pragma once

// Machine-readable run reports: a flat list of check records with a derived
// pass/violated/inconclusive summary, rendered as deterministic JSON (field
// order fixed, 17-significant-digit floats) or as a human-readable table.
// Identical inputs yield byte-identical output except for the wall_time
// field.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wpb {

std::string format_double(double x);  // shortest round-trip, C locale

struct CheckRecord {
  std::string check_id;
  std::string target;       // what the check compares against, as text
  double interval_lo = 0.0; // domain of the check (r, L, or trial parameter)
  double interval_hi = 0.0;
  std::string claim;        // human-readable statement being checked
  double enclosure_lo = 0.0;  // achieved enclosure / margin
  double enclosure_hi = 0.0;
  std::string status;       // "certified" | "violated" | "inconclusive"
  std::optional<double> witness;
  std::string note;         // optional annotation ("" = none)
};

CheckRecord make_record(std::string check_id, std::string target, double dom_lo,
                        double dom_hi, std::string claim);

struct Report {
  std::string tool_version;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  double wall_time = 0.0;  // seconds

  int n_certified() const;
  int n_violated() const;
  int n_inconclusive() const;

  // 0 all certified, 1 any violation, 3 any inconclusive (violation wins).
  int exit_code() const;

  std::string to_json() const;
  std::string to_text() const;
};

}  // namespace wpb
