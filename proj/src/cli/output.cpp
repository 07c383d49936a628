#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "primroot/cli.hpp"

namespace primroot::cli {

namespace {

std::string csvEscape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cellText(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(u64 v) const { return std::to_string(v); }
    std::string operator()(double v) const { return formatDouble(v); }
    std::string operator()(const std::string& v) const { return csvEscape(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json cellJson(const Cell& cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(u64 v) const { return v; }
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      return v;
    }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

std::string formatDouble(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void writeCsv(const Table& table, const Metadata& meta, std::ostream& out) {
  out << "# tool=" << kToolName << " version=" << kToolVersion << " schemaVersion=" << kSchemaVersion << "\n";
  out << "# command=" << meta.command << "\n";
  out << "# config:";
  for (const auto& [k, v] : meta.config) out << ' ' << k << '=' << v;
  out << "\n";
  out << "# violations=" << meta.violations << "\n";
  if (meta.wallClockSeconds) out << "# wallClockSeconds=" << formatDouble(*meta.wallClockSeconds) << "\n";
  for (const auto& [k, v] : table.summary) out << "# summary." << k << '=' << cellText(v) << "\n";

  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << csvEscape(table.columns[i]);
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cellText(row[i]);
    out << "\n";
  }
}

void writeJson(const Table& table, const Metadata& meta, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["schemaVersion"] = kSchemaVersion;
  auto& md = doc["metadata"];
  md["tool"] = kToolName;
  md["version"] = kToolVersion;
  md["command"] = meta.command;
  md["config"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : meta.config) md["config"][k] = v;
  md["violations"] = meta.violations;
  if (meta.wallClockSeconds) md["wallClockSeconds"] = *meta.wallClockSeconds;

  doc["summary"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : table.summary) doc["summary"][k] = cellJson(v);
  doc["columns"] = table.columns;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) r[table.columns[i]] = cellJson(row[i]);
    doc["rows"].push_back(std::move(r));
  }
  out << doc.dump(2) << "\n";
}

std::vector<std::pair<std::string, std::string>> configEcho(const RunConfig& c) {
  std::vector<std::pair<std::string, std::string>> echo;
  echo.emplace_back("command", toString(c.command));
  if (c.suite) echo.emplace_back("suite", *c.suite);
  if (c.pRange) echo.emplace_back("range", std::to_string(c.pRange->first) + ":" + std::to_string(c.pRange->second));
  if (c.p) echo.emplace_back("p", std::to_string(*c.p));
  if (c.epsilon) echo.emplace_back("epsilon", formatDouble(*c.epsilon));
  echo.emplace_back("M", std::to_string(c.M));
  if (c.N) echo.emplace_back("N", std::to_string(*c.N));
  if (c.b) echo.emplace_back("b", std::to_string(*c.b));
  if (c.u) echo.emplace_back("u", std::to_string(*c.u));
  if (c.t) echo.emplace_back("t", std::to_string(*c.t));
  if (c.x) echo.emplace_back("x", std::to_string(*c.x));
  if (c.lambda) echo.emplace_back("lambda", formatDouble(*c.lambda));
  echo.emplace_back("weighted", c.weighted ? "true" : "false");
  echo.emplace_back("seed", std::to_string(c.seed));
  return echo;
}

}  // namespace primroot::cli
