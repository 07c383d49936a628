#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "primroot/cli.hpp"
#include "primroot/errors.hpp"

using namespace primroot;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<const char*> args, const char* envWorkers = nullptr) {
  args.insert(args.begin(), "primroot");
  std::ostringstream out, err;
  const auto parsed = cli::parseCommandLine(static_cast<int>(args.size()), args.data(), envWorkers, out, err);
  if (!parsed.config) return {parsed.exitCode, out.str(), err.str()};
  const int code = cli::run(*parsed.config, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> dataLines(const std::string& csv) {
  std::vector<std::string> lines;
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

}  // namespace

TEST_CASE("range parsing") {
  CHECK(cli::parseRange("3:257") == std::pair<u64, u64>{3, 257});
  CHECK(cli::parseRange("5:5") == std::pair<u64, u64>{5, 5});
  CHECK_THROWS_AS(cli::parseRange("10:3"), InputError);
  CHECK_THROWS_AS(cli::parseRange("10"), InputError);
  CHECK_THROWS_AS(cli::parseRange("a:3"), InputError);
  CHECK_THROWS_AS(cli::parseRange("3:"), InputError);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"bogus"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"search", "--range", "9:3"}).code == 2);
  CHECK(invoke({"search", "--p", "8"}).code == 2);
  CHECK(invoke({"search"}).code == 2);
  CHECK(invoke({"verify", "--suite", "nope"}).code == 2);
  CHECK(invoke({"search", "--format", "xml", "--p", "7"}).code == 2);
  CHECK(invoke({"search", "--workers", "0", "--p", "7"}).code == 2);
  CHECK(invoke({"search", "--p", "7"}, "zero").code == 2);
  CHECK(invoke({"--version"}).code == 0);
  CHECK(invoke({"--help"}).code == 0);
  // p = 3 leaves [2, 3] with a root, so no violation; a window of units
  // without any root is flagged.
  CHECK(invoke({"interval", "--p", "3", "--N", "1"}).code == 0);
  CHECK(invoke({"interval", "--p", "7", "--M", "6", "--N", "1"}).code == 1);
}

TEST_CASE("search output") {
  const auto r = invoke({"search", "--p", "7"});
  REQUIRE(r.code == 0);
  const auto lines = dataLines(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "p,g,gStar,phiPm1,omegaPm1");
  CHECK(lines[1] == "7,3,3,2,2");
  CHECK(r.out.rfind("# tool=primroot version=1.0.0 schemaVersion=1\n", 0) == 0);

  const auto range = dataLines(invoke({"search", "--range", "40:45"}).out);
  REQUIRE(range.size() == 3);
  CHECK(range[1] == "41,6,7,16,2");
}

TEST_CASE("json artifact") {
  const auto r = invoke({"search", "--p", "191", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["schemaVersion"] == 1);
  CHECK(doc["metadata"]["tool"] == "primroot");
  CHECK(doc["metadata"]["violations"] == 0);
  CHECK(doc["rows"][0]["gStar"] == 19);
  CHECK_FALSE(doc["metadata"].contains("wallClockSeconds"));

  const auto timed = nlohmann::json::parse(invoke({"search", "--p", "7", "--format", "json", "--record-time"}).out);
  CHECK(timed["metadata"]["wallClockSeconds"].is_number());

  // constants default to JSON
  const auto c = invoke({"constants", "--x", "1000"});
  CHECK(nlohmann::json::parse(c.out)["rows"].size() == 6);
}

TEST_CASE("worker count does not change artifacts") {
  const std::pair<const char*, const char*> cases[] = {
      {"kernel-forms", "3:1000"}, {"charfun-agree", "3:300"}, {"short-interval-prime", "10000:20000"}};
  for (const auto& [suite, range] : cases) {
    CAPTURE(suite);
    const auto one = invoke({"verify", "--suite", suite, "--workers", "1", "--range", range});
    const auto four = invoke({"verify", "--suite", suite, "--workers", "4", "--range", range});
    const auto env = invoke({"verify", "--suite", suite, "--range", range}, "3");
    CHECK(one.out == four.out);
    CHECK(one.out == env.out);
    CHECK(one.code == four.code);
  }
  const auto seed1 = invoke({"verify", "--suite", "kernel-forms", "--seed", "1"});
  const auto seed2 = invoke({"verify", "--suite", "kernel-forms", "--seed", "2"});
  CHECK(seed1.out != seed2.out);
}

TEST_CASE("worker precedence") {
  std::ostringstream out, err;
  const char* args[] = {"primroot", "search", "--p", "7", "--workers", "2"};
  auto parsed = cli::parseCommandLine(6, args, "5", out, err);
  REQUIRE(parsed.config);
  CHECK(parsed.config->workers == 2);
  parsed = cli::parseCommandLine(4, args, "5", out, err);
  REQUIRE(parsed.config);
  CHECK(parsed.config->workers == 5);
}

TEST_CASE("every suite name resolves") {
  CHECK(cli::suiteNames().size() == 16);
  CHECK(cli::formatDouble(0.1) == "0.10000000000000001");
}
