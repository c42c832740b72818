#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unistd.h>
#include <vector>

#include "json.hpp"
#include "owb/driver.hpp"
#include "owb/report.hpp"

using namespace owb;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string strip_runtime(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream kept;
  std::string line;
  while (std::getline(in, line))
    if (line.find("runtime_ms") == std::string::npos) kept << line << "\n";
  return kept.str();
}

nlohmann::json report_json(const std::vector<std::string>& args) {
  auto path = std::filesystem::temp_directory_path() /
              ("owb_cli_test_" + std::to_string(::getpid()) + ".json");
  std::vector<std::string> full = args;
  full.push_back("--out");
  full.push_back(path.string());
  RunResult r = invoke(full);
  REQUIRE(r.code == 0);
  std::ifstream f(path);
  REQUIRE(f.good());
  nlohmann::json j = nlohmann::json::parse(f);
  std::filesystem::remove(path);
  return j;
}

const nlohmann::json& check_by_id(const nlohmann::json& rep,
                                  const std::string& id) {
  const nlohmann::json* found = nullptr;
  for (const auto& c : rep["checks"])
    if (c["id"] == id) {
      found = &c;
      break;
    }
  REQUIRE(found != nullptr);
  return *found;
}

}  // namespace

TEST_CASE("counting command reports the documented values") {
  auto j = report_json({"cells", "--n", "4", "--i", "2"});
  CHECK(j["version"] == "1.0.0");
  CHECK(j["command"] == "cells");
  CHECK(j["params"]["n"] == "4");
  CHECK(j["params"]["i"] == "2");
  const auto& oc = check_by_id(j, "orbit_count");
  CHECK(oc["expected"] == "3");
  CHECK(oc["actual"] == "3");
  CHECK(oc["status"] == "pass");
  CHECK(j["overall"] == "pass");

  auto j21 = report_json({"cells", "--n", "2", "--i", "1"});
  CHECK(check_by_id(j21, "subsets_enumerated")["actual"] == "5");
}

TEST_CASE("component pin command emits exactly two passing checks") {
  auto j = report_json({"exotic"});
  REQUIRE(j["checks"].size() == 2);
  CHECK(check_by_id(j, "component_plus")["status"] == "pass");
  CHECK(check_by_id(j, "component_minus")["status"] == "pass");
  CHECK(j["overall"] == "pass");
}

TEST_CASE("json keys keep the documented order") {
  auto path = std::filesystem::temp_directory_path() / "owb_cli_order.json";
  invoke({"signs", "--n", "2", "--out", path.string()});
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  std::string text = buf.str();
  std::filesystem::remove(path);
  std::vector<std::string> keys = {"\"version\"", "\"command\"", "\"params\"",
                                   "\"checks\"",  "\"id\"",      "\"status\"",
                                   "\"expected\"", "\"actual\"",
                                   "\"runtime_ms\"", "\"overall\""};
  std::size_t pos = 0;
  for (const auto& k : keys) {
    std::size_t found = text.find(k, pos);
    REQUIRE(found != std::string::npos);
    pos = found;
  }
}

TEST_CASE("identical invocations agree byte for byte modulo timings") {
  auto p1 = std::filesystem::temp_directory_path() / "owb_cli_d1.json";
  auto p2 = std::filesystem::temp_directory_path() / "owb_cli_d2.json";
  std::vector<std::string> base = {"special-fiber", "--i", "1", "--trials",
                                   "25", "--seed", "11"};
  auto with_out = [&](const std::filesystem::path& p) {
    auto v = base;
    v.push_back("--out");
    v.push_back(p.string());
    return v;
  };
  REQUIRE(invoke(with_out(p1)).code == 0);
  REQUIRE(invoke(with_out(p2)).code == 0);
  std::ifstream f1(p1), f2(p2);
  std::stringstream b1, b2;
  b1 << f1.rdbuf();
  b2 << f2.rdbuf();
  CHECK(strip_runtime(b1.str()) == strip_runtime(b2.str()));
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
}

TEST_CASE("usage problems exit with code two and print help") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"bogus"}).code == 2);
  CHECK(invoke({"cells", "--n", "4"}).code == 2);
  CHECK(invoke({"cells", "--n", "4", "--i", "9"}).code == 2);
  RunResult unknown = invoke({"cells", "--n", "4", "--i", "2", "--frob"});
  CHECK(unknown.code == 2);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(invoke({"blowup", "--chart", "y44"}).code == 2);
  RunResult help = invoke({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("Usage") != std::string::npos);
}

TEST_CASE("gated deep checks are skipped but do not fail the run") {
  auto j = report_json({"spin-oracle", "--n", "4", "--i", "2", "--sign", "plus"});
  REQUIRE(j["checks"].size() == 1);
  CHECK(j["checks"][0]["status"] == "skipped");
  CHECK(j["overall"] == "pass");
}

TEST_CASE("report status machinery orders fail over limit over pass") {
  CheckReport r;
  r.command = "synthetic";
  r.add({"a", CheckStatus::pass, "1", "1", 0});
  CHECK(r.overall() == "pass");
  CHECK(r.exit_code() == 0);
  r.add({"b", CheckStatus::skipped, "1", "gated", 0});
  CHECK(r.overall() == "pass");
  r.add({"c", CheckStatus::resource_limit, "1", "budget", 0});
  CHECK(r.overall() == "resource-limit");
  CHECK(r.exit_code() == 3);
  r.add({"d", CheckStatus::fail, "1", "2", 0});
  CHECK(r.overall() == "fail");
  CHECK(r.exit_code() == 1);
  CHECK_THROWS_AS(r.add({"a", CheckStatus::pass, "", "", 0}),
                  std::logic_error);
}

TEST_CASE("direct report construction rejects unknown commands") {
  DriverOptions opt;
  opt.command = "frobnicate";
  CHECK_THROWS_AS(run_report(opt), std::invalid_argument);
}

TEST_CASE("human summary carries one line per check and a closing total") {
  RunResult r = invoke({"parahoric", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[pass] maximal_class_count") != std::string::npos);
  CHECK(r.out.find("overall: pass") != std::string::npos);
}

TEST_CASE("full sweep at small size passes with deterministic skips") {
  auto j = report_json({"all", "--max-n", "2", "--trials", "10"});
  CHECK(j["overall"] == "pass");
  long skipped = 0, failed = 0;
  for (const auto& c : j["checks"]) {
    if (c["status"] == "skipped") ++skipped;
    if (c["status"] == "fail") ++failed;
  }
  CHECK(failed == 0);
  CHECK(skipped == 2);  // level-zero fiber probes have no sampling content
  std::vector<std::string> ids;
  for (const auto& c : j["checks"]) ids.push_back(c["id"]);
  std::set<std::string> uniq(ids.begin(), ids.end());
  CHECK(uniq.size() == ids.size());
}
