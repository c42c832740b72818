#include "owb/report.hpp"

#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace owb {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::resource_limit: return "resource-limit";
  }
  return "fail";
}

void CheckReport::add(CheckEntry e) {
  for (const auto& c : checks)
    if (c.id == e.id) throw std::logic_error("duplicate check id: " + e.id);
  checks.push_back(std::move(e));
}

std::string CheckReport::overall() const {
  bool limited = false;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fail) return "fail";
    if (c.status == CheckStatus::resource_limit) limited = true;
  }
  return limited ? "resource-limit" : "pass";
}

int CheckReport::exit_code() const {
  std::string o = overall();
  if (o == "fail") return 1;
  if (o == "resource-limit") return 3;
  return 0;
}

std::string CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["version"] = version;
  j["command"] = command;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) p[k] = v;
  j["params"] = p;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["status"] = to_string(c.status);
    e["expected"] = c.expected;
    e["actual"] = c.actual;
    e["runtime_ms"] = c.runtime_ms;
    arr.push_back(e);
  }
  j["checks"] = arr;
  j["overall"] = overall();
  return j.dump(2) + "\n";
}

void print_summary(const CheckReport& r, std::ostream& out) {
  long npass = 0, nfail = 0, nskip = 0, nlimit = 0;
  for (const auto& c : r.checks) {
    out << "[" << to_string(c.status) << "] " << c.id << ": expected "
        << c.expected << ", actual " << c.actual << " (" << c.runtime_ms
        << " ms)\n";
    switch (c.status) {
      case CheckStatus::pass: ++npass; break;
      case CheckStatus::fail: ++nfail; break;
      case CheckStatus::skipped: ++nskip; break;
      case CheckStatus::resource_limit: ++nlimit; break;
    }
  }
  out << "overall: " << r.overall() << " (" << npass << " pass, " << nfail
      << " fail, " << nskip << " skipped, " << nlimit << " resource-limit)\n";
}

}  // namespace owb
