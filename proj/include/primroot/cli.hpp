#pragma once

// Command-line harness: configuration, tabular artifacts, and the named
// verification suites.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "primroot/arith.hpp"

namespace primroot::cli {

inline constexpr const char* kToolName = "primroot";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

enum class Command { Search, Scan, Interval, Charfun, Expsum, Stats, Constants, Verify };
enum class OutFormat { Csv, Json };

const char* toString(Command c);

struct RunConfig {
  Command command = Command::Search;
  std::optional<std::pair<u64, u64>> pRange;
  std::optional<u64> p;
  std::optional<double> epsilon;
  u64 M = 2;
  std::optional<u64> N;
  std::optional<u64> b;
  std::optional<u64> u;
  std::optional<u64> t;
  std::optional<u64> x;
  std::optional<double> lambda;
  bool weighted = false;
  std::optional<std::string> suite;
  std::optional<OutFormat> format;
  std::optional<std::string> outPath;
  unsigned workers = 1;
  u64 seed = 1;
  bool recordTime = false;
};

/// Names accepted by `verify --suite`.
const std::vector<std::string>& suiteNames();

/// Parses "lo:hi". Throws InputError on malformed input or lo > hi.
std::pair<u64, u64> parseRange(const std::string& text);

/// Result of parsing argv: either a config to run or an exit code to return
/// immediately (help, version, parse failure).
struct ParseOutcome {
  std::optional<RunConfig> config;
  int exitCode = 0;
};

/// envWorkers is the value of PRIMROOT_WORKERS, if set. An explicit
/// --workers flag wins over it; it wins over the hardware default.
ParseOutcome parseCommandLine(int argc, const char* const* argv, const char* envWorkers, std::ostream& out,
                              std::ostream& err);

using Cell = std::variant<std::monostate, std::int64_t, u64, double, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> summary;
  u64 violations = 0;
};

struct Metadata {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;
  u64 violations = 0;
  std::optional<double> wallClockSeconds;
};

/// Echo of the config fields that determine the artifact content; worker
/// count and output path are excluded so they cannot change the bytes.
std::vector<std::pair<std::string, std::string>> configEcho(const RunConfig& config);

std::string formatDouble(double v);

void writeCsv(const Table& table, const Metadata& meta, std::ostream& out);
void writeJson(const Table& table, const Metadata& meta, std::ostream& out);

/// Executes the command and returns its table. Throws InputError for
/// invalid inputs.
Table execute(const RunConfig& config);

/// Executes, writes the artifact, and returns the exit status:
/// 0 = no violations, 1 = violations recorded, 2 = input error.
int run(const RunConfig& config, std::ostream& artifact, std::ostream& diag);

/// Full entry point: parse, open the output file if requested, run.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace primroot::cli
