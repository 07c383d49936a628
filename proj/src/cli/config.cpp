#include <CLI11.hpp>

#include <charconv>
#include <ostream>
#include <string>

#include "primroot/cli.hpp"
#include "primroot/errors.hpp"
#include "primroot/parallel.hpp"

namespace primroot::cli {

namespace {

u64 parseU64(std::string_view text, const char* what) {
  u64 value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw InputError(std::string("malformed ") + what + ": '" + std::string(text) + "'");
  }
  return value;
}

// Flag storage shared by every subcommand.
struct Flags {
  std::string range;
  u64 p = 0;
  double epsilon = 0.0;
  u64 M = 2;
  u64 N = 0;
  u64 b = 0;
  u64 u = 0;
  u64 t = 0;
  u64 x = 0;
  double lambda = 0.0;
  bool weighted = false;
  std::string suite;
  std::string format;
  std::string out;
  unsigned workers = 0;
  u64 seed = 1;
  bool recordTime = false;
};

struct Handles {
  CLI::Option* range;
  CLI::Option* p;
  CLI::Option* epsilon;
  CLI::Option* N;
  CLI::Option* b;
  CLI::Option* u;
  CLI::Option* t;
  CLI::Option* x;
  CLI::Option* lambda;
  CLI::Option* suite;
  CLI::Option* format;
  CLI::Option* out;
  CLI::Option* workers;
};

Handles addFlags(CLI::App& app, Flags& f) {
  Handles h{};
  h.range = app.add_option("--range", f.range, "Prime range lo:hi (inclusive)");
  h.p = app.add_option("--p", f.p, "Prime modulus");
  h.epsilon = app.add_option("--epsilon", f.epsilon, "Exponent slack in (log p)^(1+epsilon)");
  app.add_option("--M", f.M, "Left endpoint of the interval [M, M+N]")->capture_default_str();
  h.N = app.add_option("--N", f.N, "Interval length");
  h.b = app.add_option("--b", f.b, "Multiplier b in e(b tau^n / p)");
  h.u = app.add_option("--u", f.u, "Single residue to evaluate");
  h.t = app.add_option("--t", f.t, "Kernel frequency t");
  h.x = app.add_option("--x", f.x, "Cutoff x for constants and partial sums");
  h.lambda = app.add_option("--lambda", f.lambda, "Poisson parameter");
  app.add_flag("--weighted", f.weighted, "Weight interval sums by von Mangoldt");
  h.suite = app.add_option("--suite", f.suite, "Verification suite name");
  h.format = app.add_option("--format", f.format, "Output format: csv or json")
                 ->check(CLI::IsMember({"csv", "json"}));
  h.out = app.add_option("--out", f.out, "Write the artifact to this path instead of stdout");
  h.workers = app.add_option("--workers", f.workers, "Worker threads (default: PRIMROOT_WORKERS or all cores)")
                  ->check(CLI::PositiveNumber);
  app.add_option("--seed", f.seed, "Seed for sampled sweeps")->capture_default_str();
  app.add_flag("--record-time", f.recordTime, "Include wall-clock seconds in the artifact metadata");
  return h;
}

template <typename T>
std::optional<T> ifGiven(const CLI::Option* opt, const T& value) {
  return opt->count() > 0 ? std::optional<T>(value) : std::nullopt;
}

}  // namespace

const char* toString(Command c) {
  switch (c) {
    case Command::Search: return "search";
    case Command::Scan: return "scan";
    case Command::Interval: return "interval";
    case Command::Charfun: return "charfun";
    case Command::Expsum: return "expsum";
    case Command::Stats: return "stats";
    case Command::Constants: return "constants";
    case Command::Verify: return "verify";
  }
  return "?";
}

std::pair<u64, u64> parseRange(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("malformed range '" + text + "', expected lo:hi");
  const u64 lo = parseU64(std::string_view(text).substr(0, colon), "range start");
  const u64 hi = parseU64(std::string_view(text).substr(colon + 1), "range end");
  if (lo > hi) throw InputError("empty range '" + text + "'");
  return {lo, hi};
}

ParseOutcome parseCommandLine(int argc, const char* const* argv, const char* envWorkers, std::ostream& out,
                              std::ostream& err) {
  CLI::App app{"Primitive-root searches, sums and constant estimates"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  constexpr Command kCommands[] = {Command::Search, Command::Scan,  Command::Interval,  Command::Charfun,
                                   Command::Expsum, Command::Stats, Command::Constants, Command::Verify};
  constexpr const char* kHelp[] = {
      "Least primitive root g(p) and least prime primitive root g*(p)",
      "Per-prime records with family flags over a range",
      "Main and error terms of the primitive-root count over [M, M+N]",
      "Compare the three characteristic-function representations",
      "Exponential sums and their a-priori bounds",
      "Gap, Weyl and Poisson-window statistics for one prime",
      "Mertens, Artin and average-gap constants",
      "Run a named verification suite",
  };

  Flags flags;
  std::vector<std::pair<CLI::App*, Handles>> subs;
  for (std::size_t i = 0; i < std::size(kCommands); ++i) {
    CLI::App* sub = app.add_subcommand(toString(kCommands[i]), kHelp[i]);
    subs.emplace_back(sub, addFlags(*sub, flags));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return {std::nullopt, 0};
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return {std::nullopt, 0};
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return {std::nullopt, 0};
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return {std::nullopt, 2};
  }

  RunConfig config;
  const Handles* h = nullptr;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].first->parsed()) {
      config.command = kCommands[i];
      h = &subs[i].second;
    }
  }
  if (h == nullptr) {
    err << "error: no command given\n";
    return {std::nullopt, 2};
  }

  try {
    if (h->range->count() > 0) config.pRange = parseRange(flags.range);
    config.p = ifGiven(h->p, flags.p);
    config.epsilon = ifGiven(h->epsilon, flags.epsilon);
    config.M = flags.M;
    config.N = ifGiven(h->N, flags.N);
    config.b = ifGiven(h->b, flags.b);
    config.u = ifGiven(h->u, flags.u);
    config.t = ifGiven(h->t, flags.t);
    config.x = ifGiven(h->x, flags.x);
    config.lambda = ifGiven(h->lambda, flags.lambda);
    config.weighted = flags.weighted;
    config.suite = ifGiven(h->suite, flags.suite);
    if (h->format->count() > 0) config.format = flags.format == "json" ? OutFormat::Json : OutFormat::Csv;
    config.outPath = ifGiven(h->out, flags.out);
    config.seed = flags.seed;
    config.recordTime = flags.recordTime;

    if (h->workers->count() > 0) {
      config.workers = flags.workers;
    } else if (envWorkers != nullptr && *envWorkers != '\0') {
      const u64 w = parseU64(envWorkers, "PRIMROOT_WORKERS");
      if (w == 0) throw InputError("PRIMROOT_WORKERS must be positive");
      config.workers = static_cast<unsigned>(w);
    } else {
      config.workers = defaultWorkers();
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return {std::nullopt, 2};
  }
  return {config, 0};
}

}  // namespace primroot::cli
