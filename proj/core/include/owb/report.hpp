#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace owb {

inline constexpr const char* kReportVersion = "1.0.0";

enum class CheckStatus { pass, fail, skipped, resource_limit };

std::string to_string(CheckStatus s);

struct CheckEntry {
  std::string id;
  CheckStatus status = CheckStatus::fail;
  std::string expected;
  std::string actual;
  long runtime_ms = 0;
};

// One report per invocation.  Checks keep insertion order, ids are unique;
// overall is fail if anything failed, else resource-limit if anything was cut
// short, else pass (skipped entries count toward neither side).
struct CheckReport {
  std::string version = kReportVersion;
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<CheckEntry> checks;

  void add(CheckEntry e);  // throws std::logic_error on duplicate id
  std::string overall() const;
  int exit_code() const;  // 0 pass, 1 fail, 3 resource-limit
  std::string to_json() const;
};

void print_summary(const CheckReport& r, std::ostream& out);

}  // namespace owb
