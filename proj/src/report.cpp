#include "report.hpp"

#include <cstdio>

#include "json.hpp"

namespace wpb {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

CheckRecord make_record(std::string check_id, std::string target, double dom_lo,
                        double dom_hi, std::string claim) {
  CheckRecord rec;
  rec.check_id = std::move(check_id);
  rec.target = std::move(target);
  rec.interval_lo = dom_lo;
  rec.interval_hi = dom_hi;
  rec.claim = std::move(claim);
  return rec;
}

int Report::n_certified() const {
  int k = 0;
  for (const auto& c : checks) k += c.status == "certified";
  return k;
}

int Report::n_violated() const {
  int k = 0;
  for (const auto& c : checks) k += c.status == "violated";
  return k;
}

int Report::n_inconclusive() const {
  int k = 0;
  for (const auto& c : checks) k += c.status == "inconclusive";
  return k;
}

int Report::exit_code() const {
  if (n_violated() > 0) return 1;
  if (n_inconclusive() > 0) return 3;
  return 0;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["tool_version"] = tool_version;
  j["seed"] = seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json jc;
    jc["check_id"] = c.check_id;
    jc["target"] = c.target;
    jc["interval"] = {c.interval_lo, c.interval_hi};
    jc["claim"] = c.claim;
    jc["enclosure"] = {c.enclosure_lo, c.enclosure_hi};
    jc["status"] = c.status;
    if (c.witness) jc["witness"] = *c.witness;
    if (!c.note.empty()) jc["note"] = c.note;
    j["checks"].push_back(std::move(jc));
  }
  j["summary"] = {{"certified", n_certified()},
                  {"violated", n_violated()},
                  {"inconclusive", n_inconclusive()}};
  j["wall_time"] = wall_time;
  return j.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::string out;
  out += "tool_version: " + tool_version + "\n";
  out += "seed: " + std::to_string(seed) + "\n";
  for (const auto& c : checks) {
    out += "[" + c.status + "] " + c.check_id + ": " + c.claim;
    out += "  | target " + c.target;
    out += "  | enclosure [" + format_double(c.enclosure_lo) + ", " +
           format_double(c.enclosure_hi) + "]";
    if (c.witness) out += "  | witness " + format_double(*c.witness);
    if (!c.note.empty()) out += "  | " + c.note;
    out += "\n";
  }
  out += "summary: " + std::to_string(n_certified()) + " certified, " +
         std::to_string(n_violated()) + " violated, " +
         std::to_string(n_inconclusive()) + " inconclusive\n";
  return out;
}

}  // namespace wpb
