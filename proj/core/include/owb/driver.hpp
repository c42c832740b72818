#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "owb/report.hpp"

namespace owb {

struct DriverOptions {
  std::string command;
  std::size_t n = 0;
  long i = 0;
  int sign = 1;
  std::string chart_label;  // empty runs every chart
  long trials = 100;
  std::uint64_t seed = 0;
  std::uint64_t prime = 32003;
  std::size_t max_basis = 4000;
  std::size_t max_pairs = 500000;
  bool deep = false;
  std::size_t max_n = 3;
  std::string out_path;
};

// executes one command; throws std::invalid_argument on out-of-range
// parameters, leaving usage handling to the caller
CheckReport run_report(const DriverOptions& opt);

// parse + execute + print summary (and JSON file when requested);
// returns the process exit code: 0 pass, 1 fail, 2 usage or internal
// error, 3 resource limit without failures
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace owb
