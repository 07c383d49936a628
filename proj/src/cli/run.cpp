#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <set>

#include "primroot/charfun.hpp"
#include "primroot/cli.hpp"
#include "primroot/errors.hpp"
#include "primroot/expsum.hpp"
#include "primroot/intervals.hpp"
#include "primroot/parallel.hpp"
#include "primroot/primctx.hpp"
#include "primroot/stats.hpp"

namespace primroot::cli {

namespace {

using Row = std::vector<Cell>;

// Tolerances pinned by the verification suites.
constexpr double kRouteTolerance = 1e-8;
constexpr double kLiteralTolerance = 1e-6;
constexpr double kArtinProductTolerance = 1e-6;
constexpr double kArtinEmpiricalTolerance = 5e-3;
constexpr double kGapProductTolerance = 1e-2;
constexpr double kGapEmpiricalTolerance = 2e-2;
constexpr double kMertensTolerance = 1e-2;
constexpr u64 kToleranceCutoff = 1'000'000;

Cell optCell(const std::optional<u64>& v) { return v ? Cell(*v) : Cell(std::monostate{}); }

/// Reproducible uniform draws, independent of the standard library's
/// distribution implementations.
class Sampler {
 public:
  explicit Sampler(u64 seed) : rng_(seed) {}

  u64 uniform(u64 lo, u64 hi) {
    const u64 span = hi - lo + 1;
    const u64 limit = UINT64_MAX - UINT64_MAX % span;
    u64 x;
    do {
      x = rng_();
    } while (x >= limit);
    return lo + x % span;
  }

  /// k distinct elements of `pool` (all of them if k >= size), ascending.
  std::vector<u64> choose(const std::vector<u64>& pool, std::size_t k) {
    std::vector<u64> copy = pool;
    k = std::min(k, copy.size());
    for (std::size_t i = 0; i < k; ++i) std::swap(copy[i], copy[uniform(i, copy.size() - 1)]);
    copy.resize(k);
    std::sort(copy.begin(), copy.end());
    return copy;
  }

 private:
  std::mt19937_64 rng_;
};

u64 requireP(const RunConfig& c) {
  if (!c.p) throw InputError(std::string(toString(c.command)) + ": --p is required");
  return *c.p;
}

std::pair<u64, u64> rangeOr(const RunConfig& c, u64 lo, u64 hi) { return c.pRange.value_or(std::pair{lo, hi}); }

std::vector<u64> oddPrimes(std::pair<u64, u64> range) {
  return primesInRange(std::max<u64>(range.first, 3), range.second);
}

// ---------------------------------------------------------------- commands

Table commandSearch(const RunConfig& c) {
  std::vector<u64> primes;
  if (c.p) {
    primes.push_back(*c.p);
  } else if (c.pRange) {
    primes = oddPrimes(*c.pRange);
  } else {
    throw InputError("search: --p or --range is required");
  }
  Table t;
  t.columns = {"p", "g", "gStar", "phiPm1", "omegaPm1"};
  const auto rows = parallelMap(primes.size(), c.workers, [&](std::size_t i) {
    const PrimeContext ctx = buildContext(primes[i]);
    return Row{ctx.p(), ctx.tau(), leastPrimePrimitiveRoot(ctx.p()), ctx.phiPm1(),
               static_cast<u64>(ctx.pm1Factors().distinctPrimes())};
  });
  t.rows.assign(rows.begin(), rows.end());
  return t;
}

Table commandScan(const RunConfig& c) {
  if (!c.pRange) throw InputError("scan: --range is required");
  const auto records = scanRange(c.pRange->first, c.pRange->second, c.epsilon.value_or(0.5), c.workers);
  Table t;
  t.columns = {"p", "g", "gStar", "ratio", "omegaPm1", "gap", "fermat", "germain", "highlyComposite", "rootRatio"};
  for (const auto& r : records) {
    t.rows.push_back({r.p, r.g, r.gStar, r.ratio, static_cast<u64>(r.omegaPm1), r.gap,
                      r.families.has(Family::Fermat), r.families.has(Family::Germain),
                      r.families.has(Family::HighlyComposite), r.rootRatio});
  }
  t.summary.emplace_back("primes", static_cast<u64>(records.size()));
  return t;
}

Row intervalRow(const IntervalReport& r) {
  return {r.p,          r.spec.M,     r.spec.N,         r.spec.weighted,         r.psiCount,
          r.mainTerm,   r.discrepancy, r.hits,          r.units,                 optCell(r.firstWitness),
          optCell(r.firstPrimeWitness)};
}

const std::vector<std::string> kIntervalColumns = {"p",     "M",           "N",       "weighted",
                                                   "psiCount", "mainTerm", "discrepancy", "hits",
                                                   "units",    "firstWitness", "firstPrimeWitness"};

Table commandInterval(const RunConfig& c) {
  const PrimeContext ctx = buildContext(requireP(c));
  if (!c.N) throw InputError("interval: --N is required");
  const IntervalSpec spec{c.M, *c.N, c.weighted};
  const IntervalReport r = c.weighted ? intervalWeightedSum(ctx, spec) : intervalPsiSum(ctx, spec);
  Table t;
  t.columns = kIntervalColumns;
  t.rows.push_back(intervalRow(r));
  const bool missing = c.weighted ? !r.firstPrimeWitness : !r.firstWitness;
  t.violations = missing ? 1 : 0;
  return t;
}

struct CharfunCheck {
  u64 units = 0;
  u64 disagreements = 0;
  u64 psiSum = 0;
  double maxResidual = 0.0;
  std::vector<Row> rows;
};

// Compares all representations at every unit (or just at `only`).
CharfunCheck checkCharfun(const PrimeContext& ctx, bool literal, std::optional<u64> only, bool keepRows) {
  const IndexTable index(ctx);
  std::optional<FieldCache> cache;
  if (literal) cache.emplace(ctx);
  CharfunCheck out;
  const u64 lo = only.value_or(1);
  const u64 hi = only.value_or(ctx.p() - 1);
  for (u64 u = lo; u <= hi; ++u) {
    const int expected = multiplicativeOrder(ctx, u) == ctx.p() - 1 ? 1 : 0;
    const int character = psiDivisorCharacter(ctx, u, &index).value;
    const int collapsed = psiDivisorFreeCollapsed(ctx, u, &index).value;
    std::optional<PsiEvaluation> lit;
    if (literal) lit = psiDivisorFreeLiteral(ctx, u, &*cache);
    bool agree = character == expected && collapsed == expected;
    if (lit) {
      agree = agree && lit->value == expected && lit->residualError < kLiteralTolerance;
      out.maxResidual = std::max(out.maxResidual, lit->residualError);
    }
    ++out.units;
    out.psiSum += static_cast<u64>(collapsed);
    if (!agree) ++out.disagreements;
    if (keepRows) {
      out.rows.push_back({u, multiplicativeOrder(ctx, u), static_cast<std::int64_t>(expected),
                          static_cast<std::int64_t>(character), static_cast<std::int64_t>(collapsed),
                          lit ? Cell(static_cast<std::int64_t>(lit->value)) : Cell(std::monostate{}),
                          lit ? Cell(lit->residualError) : Cell(std::monostate{}), agree});
    }
  }
  return out;
}

Table commandCharfun(const RunConfig& c) {
  const PrimeContext ctx = buildContext(requireP(c));
  if (c.u && (*c.u == 0 || *c.u >= ctx.p())) throw InputError("charfun: --u must lie in [1, p-1]");
  const bool literal = ctx.p() <= kLiteralModeCap;
  const CharfunCheck check = checkCharfun(ctx, literal, c.u, true);
  Table t;
  t.columns = {"u", "order", "expected", "divisorCharacter", "divisorFreeCollapsed", "divisorFreeLiteral",
               "literalResidual", "agree"};
  t.rows = check.rows;
  t.summary.emplace_back("tau", ctx.tau());
  t.summary.emplace_back("phiPm1", ctx.phiPm1());
  t.summary.emplace_back("maxLiteralResidual", check.maxResidual);
  t.violations = check.disagreements;
  return t;
}

Row sumRow(const std::string& name, const SumValue& s, bool enforced) {
  const bool within = s.withinBound();
  return {name,
          s.real(),
          s.imag(),
          s.magnitude(),
          s.termCount,
          s.hasBound() ? Cell(s.aprioriBound) : Cell(std::monostate{}),
          s.boundName,
          s.hasBound() ? Cell(s.margin()) : Cell(std::monostate{}),
          s.statementBound ? Cell(*s.statementBound) : Cell(std::monostate{}),
          within,
          enforced,
          s.alternate ? Cell(s.routeGap()) : Cell(std::monostate{}),
          s.degenerate};
}

const std::vector<std::string> kSumColumns = {"sum",      "real",      "imag",       "magnitude",  "termCount",
                                              "bound",    "boundName", "margin",     "statementBound",
                                              "withinBound", "enforced", "routeGap", "degenerate"};

Table commandExpsum(const RunConfig& c) {
  const PrimeContext ctx = buildContext(requireP(c));
  const u64 p = ctx.p();
  const u64 b = c.b.value_or(1);
  const u64 q = nextPrime(p);
  const auto t = static_cast<std::int64_t>(c.t.value_or(1));
  const u64 x = c.x.value_or((p - 1) / 2 == 0 ? 1 : (p - 1) / 2);

  struct Entry {
    std::string name;
    SumValue value;
    bool enforced;
  };
  const std::vector<Entry> entries = {
      {"completeGeometric", completeGeometricSum(p, b), false},
      {"incompletePower", incompletePowerSum(ctx, b, x), true},
      {"coprimeFiltered", coprimeFilteredSum(ctx, b), true},
      {"kernelFull", kernelFullSum(q, t, p), true},
      {"kernelCoprime", kernelCoprimeSum(ctx, q, t), false},
      {"gaussMixed", gaussMixedSum(ctx, q, t, b), false},
      {"equivalenceGap", equivalenceGap(ctx, b), true},
  };
  Table out;
  out.columns = kSumColumns;
  for (const auto& e : entries) {
    out.rows.push_back(sumRow(e.name, e.value, e.enforced));
    if (e.enforced && !e.value.withinBound()) ++out.violations;
    if (e.value.alternate && e.value.routeGap() > kRouteTolerance) ++out.violations;
  }
  out.summary.emplace_back("q", q);
  out.summary.emplace_back("tau", ctx.tau());
  return out;
}

Table commandStats(const RunConfig& c) {
  const PrimeContext ctx = buildContext(requireP(c));
  const double lambda = c.lambda.value_or(2.0);
  Table t;
  t.columns = {"metric", "value"};
  auto add = [&](const std::string& name, Cell v) { t.rows.push_back({name, std::move(v)}); };

  const auto gaps = gapSequence(ctx);
  const double expectedGap = static_cast<double>(ctx.p() - 1) / static_cast<double>(ctx.phiPm1());
  add("phiPm1", ctx.phiPm1());
  add("expectedGap", expectedGap);
  add("gapCount", static_cast<u64>(gaps.size()));
  if (!gaps.empty()) {
    const double mean = static_cast<double>(std::accumulate(gaps.begin(), gaps.end(), u64{0})) /
                        static_cast<double>(gaps.size());
    add("meanGap", mean);
    add("maxGap", *std::max_element(gaps.begin(), gaps.end()));
  }
  const SumValue w = weylSum(ctx, ctx.phiPm1());
  add("weylReal", w.real());
  add("weylImag", w.imag());
  add("weylMagnitude", w.magnitude());
  try {
    const WindowHistogram h = poissonWindows(ctx, lambda);
    add("poissonLambda", lambda);
    add("windowLength", h.windowLength);
    add("windows", h.windows);
    add("meanCount", h.meanCount);
    add("poissonTV", h.poissonTV);
    for (auto [k, f] : h.counts) add("windowCount." + std::to_string(k), f);
  } catch (const InputError& e) {
    add("poissonSkipped", std::string(e.what()));
  }
  return t;
}

struct ConstantCheck {
  ConstantEstimate estimate;
  std::optional<double> tolerance;
};

Table constantsTable(const std::vector<ConstantCheck>& checks) {
  Table t;
  t.columns = {"name", "x", "computed", "reference", "absError", "tolerance", "pass"};
  for (const auto& [e, tol] : checks) {
    const bool pass = !tol || (e.absError && *e.absError < *tol);
    t.rows.push_back({e.name, e.xCutoff, e.computed, e.reference ? Cell(*e.reference) : Cell(std::monostate{}),
                      e.absError ? Cell(*e.absError) : Cell(std::monostate{}),
                      tol ? Cell(*tol) : Cell(std::monostate{}), pass});
    if (!pass) ++t.violations;
  }
  return t;
}

std::optional<double> tol(u64 x, double value) {
  return x >= kToleranceCutoff ? std::optional<double>(value) : std::nullopt;
}

ConstantCheck mertensCheck(u64 x) {
  // Relative form: |e^gamma log x * product - 1|.
  ConstantEstimate m = mertensProduct(x);
  ConstantEstimate rel{"mertens-normalized", x, m.computed / *m.reference, 1.0,
                       std::abs(m.computed / *m.reference - 1.0)};
  return {rel, tol(x, kMertensTolerance)};
}

std::vector<ConstantCheck> artinChecks(u64 x) {
  const auto a = artinAverage(x);
  return {{a.product, tol(x, kArtinProductTolerance)}, {a.empirical, tol(x, kArtinEmpiricalTolerance)}};
}

std::vector<ConstantCheck> gapChecks(u64 x) {
  const auto g = gapConstant(x);
  return {{g.product, tol(x, kGapProductTolerance)}, {g.empirical, tol(x, kGapEmpiricalTolerance)}};
}

Table commandConstants(const RunConfig& c) {
  const u64 x = c.x.value_or(kToleranceCutoff);
  std::vector<ConstantCheck> checks{{mertensProduct(x), std::nullopt}, mertensCheck(x)};
  for (auto& v : artinChecks(x)) checks.push_back(v);
  for (auto& v : gapChecks(x)) checks.push_back(v);
  return constantsTable(checks);
}

// ------------------------------------------------------------------ suites

Table suiteCharfunAgree(const RunConfig& c) {
  const auto primes = oddPrimes(rangeOr(c, 3, 257));
  const auto checks = parallelMap(primes.size(), c.workers, [&](std::size_t i) {
    const PrimeContext ctx = buildContext(primes[i]);
    return checkCharfun(ctx, ctx.p() <= kLiteralModeCap, std::nullopt, false);
  });
  Table t;
  t.columns = {"p", "units", "disagreements", "maxLiteralResidual"};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    t.rows.push_back({primes[i], checks[i].units, checks[i].disagreements, checks[i].maxResidual});
    t.violations += checks[i].disagreements;
  }
  t.summary.emplace_back("primes", static_cast<u64>(primes.size()));
  return t;
}

Table suiteCharfunSum(const RunConfig& c) {
  const auto primes = oddPrimes(rangeOr(c, 3, 10000));
  const auto sums = parallelMap(primes.size(), c.workers, [&](std::size_t i) {
    const PrimeContext ctx = buildContext(primes[i]);
    const IndexTable index(ctx);
    u64 total = 0;
    for (u64 u = 1; u < ctx.p(); ++u) total += static_cast<u64>(psiDivisorFreeCollapsed(ctx, u, &index).value);
    return std::pair{ctx.phiPm1(), total};
  });
  Table t;
  t.columns = {"p", "phiPm1", "psiSum", "match"};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const bool match = sums[i].first == sums[i].second;
    t.rows.push_back({primes[i], sums[i].first, sums[i].second, match});
    if (!match) ++t.violations;
  }
  return t;
}

Table suiteSqrtBound(const RunConfig& c) {
  const auto [lo, hi] = rangeOr(c, 410, 1'000'000);
  const auto violations = verifyLeastRootBound(lo, hi, c.workers);
  Table t;
  t.columns = {"p", "g", "sqrtPMinus2"};
  for (u64 p : violations) t.rows.push_back({p, leastPrimitiveRoot(p), std::sqrt(static_cast<double>(p)) - 2.0});
  t.violations = violations.size();
  t.summary.emplace_back("primesChecked", static_cast<u64>(primesInRange(lo, hi).size()));
  return t;
}

std::vector<u64> boundSample(const RunConfig& c, Sampler& sampler) {
  return sampler.choose(oddPrimes(rangeOr(c, 1000, 100000)), 200);
}

Table suiteExpsumBounds(const RunConfig& c, bool gap) {
  Sampler sampler(c.seed);
  const auto primes = boundSample(c, sampler);
  std::vector<std::pair<u64, u64>> jobs;
  for (u64 p : primes) {
    for (int k = 0; k < 10; ++k) jobs.emplace_back(p, sampler.uniform(1, p - 1));
  }
  const auto values = parallelMap(jobs.size(), c.workers, [&](std::size_t i) {
    const PrimeContext ctx = buildContext(jobs[i].first);
    return gap ? equivalenceGap(ctx, jobs[i].second) : coprimeFilteredSum(ctx, jobs[i].second);
  });
  Table t;
  t.columns = {"p", "b", "magnitude", "bound", "margin", "withinBound"};
  double minRelativeMargin = 1.0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const SumValue& s = values[i];
    t.rows.push_back({jobs[i].first, jobs[i].second, s.magnitude(), s.aprioriBound, s.margin(), s.withinBound()});
    if (!s.withinBound()) ++t.violations;
    minRelativeMargin = std::min(minRelativeMargin, s.margin() / s.aprioriBound);
  }
  t.summary.emplace_back("primes", static_cast<u64>(primes.size()));
  t.summary.emplace_back("samples", static_cast<u64>(jobs.size()));
  t.summary.emplace_back("minRelativeMargin", minRelativeMargin);
  return t;
}

Table suiteKernelForms(const RunConfig& c) {
  Sampler sampler(c.seed);
  const auto primes = oddPrimes(rangeOr(c, 3, 1000));
  if (primes.empty()) throw InputError("kernel-forms: no odd primes in range");
  struct Job {
    u64 p, q;
    std::int64_t t;
  };
  std::vector<Job> jobs;
  for (int i = 0; i < 100; ++i) {
    const u64 p = primes[sampler.uniform(0, primes.size() - 1)];
    const u64 q = nextPrime(p);
    jobs.push_back({p, q, static_cast<std::int64_t>(sampler.uniform(1, q - 1))});
  }
  const auto gaps = parallelMap(jobs.size(), c.workers, [&](std::size_t i) {
    const PrimeContext ctx = buildContext(jobs[i].p);
    return std::pair{kernelFullSum(jobs[i].q, jobs[i].t, jobs[i].p).routeGap(),
                     kernelCoprimeSum(ctx, jobs[i].q, jobs[i].t).routeGap()};
  });
  Table t;
  t.columns = {"p", "q", "t", "fullRouteGap", "coprimeRouteGap", "pass"};
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const bool pass = gaps[i].first <= kRouteTolerance && gaps[i].second <= kRouteTolerance;
    t.rows.push_back({jobs[i].p, jobs[i].q, jobs[i].t, gaps[i].first, gaps[i].second, pass});
    if (!pass) ++t.violations;
  }
  return t;
}

Table suiteIntervalDecomp(const RunConfig& c) {
  Sampler sampler(c.seed);
  const auto primes = oddPrimes(rangeOr(c, 3, 10000));
  if (primes.empty()) throw InputError("interval-decomp: no odd primes in range");
  struct Job {
    u64 p;
    IntervalSpec spec;
    bool literal;
  };
  std::vector<Job> jobs;
  for (int i = 0; i < 1000; ++i) {
    const u64 p = primes[sampler.uniform(0, primes.size() - 1)];
    const u64 M = sampler.uniform(0, 3 * p);
    const u64 N = sampler.uniform(1, 2 * p);
    jobs.push_back({p, {M, N, false}, p <= 257});
  }
  // Dedicated literal block: 20 intervals at every prime up to 257.
  for (u64 p : oddPrimes({3, 257})) {
    for (int i = 0; i < 20; ++i) {
      const u64 M = sampler.uniform(0, 2 * p);
      const u64 N = sampler.uniform(1, p);
      jobs.push_back({p, {M, N, false}, true});
    }
  }
  const auto results = parallelMap(jobs.size(), c.workers, [&](std::size_t i) {
    const PrimeContext ctx = buildContext(jobs[i].p);
    const IntervalReport r = intervalPsiSum(ctx, jobs[i].spec);
    std::optional<Complex> literal;
    if (jobs[i].literal) literal = literalDiscrepancy(ctx, jobs[i].spec);
    return std::pair{r, literal};
  });
  Table t;
  t.columns = {"p", "M", "N", "psiCount", "mainTerm", "discrepancy", "identityResidual", "literalDiscrepancy",
               "literalError", "pass"};
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto& [r, literal] = results[i];
    const double residual = r.psiCount - r.mainTerm - r.discrepancy;
    bool pass = residual == 0.0;
    Cell litCell, errCell;
    if (literal) {
      const double err = std::abs(*literal - Complex(r.discrepancy, 0.0));
      pass = pass && err < kLiteralTolerance;
      litCell = literal->real();
      errCell = err;
    }
    t.rows.push_back({r.p, r.spec.M, r.spec.N, r.psiCount, r.mainTerm, r.discrepancy, residual, litCell, errCell,
                      pass});
    if (!pass) ++t.violations;
  }
  return t;
}

Table shortIntervalTable(const ShortIntervalSummary& s) {
  Table t;
  t.columns = {"p", "N", "witness", "ratio"};
  for (const auto& chk : s.checks) t.rows.push_back({chk.p, chk.N, optCell(chk.witness), chk.ratio});
  t.violations = s.violationCount;
  t.summary.emplace_back("primesChecked", s.primesChecked);
  t.summary.emplace_back("violationCount", s.violationCount);
  t.summary.emplace_back("maxRatio", s.maxRatio);
  t.summary.emplace_back("argmaxPrime", s.argmaxPrime);
  return t;
}

Table suiteShortInterval(const RunConfig& c) {
  const auto [lo, hi] = rangeOr(c, 10000, 1'000'000);
  return shortIntervalTable(
      verifyShortIntervalTheorem(lo, hi, c.epsilon.value_or(1.0), c.M, WitnessMode::PrimitiveRoot, c.workers));
}

Table suiteShortIntervalPrime(const RunConfig& c) {
  const auto [lo, hi] = rangeOr(c, 10000, 100000);
  return shortIntervalTable(
      verifyShortIntervalTheorem(lo, hi, c.epsilon.value_or(1.0), c.M, WitnessMode::PrimePrimitiveRoot, c.workers));
}

Table suitePrimeWindow(const RunConfig& c) {
  Sampler sampler(c.seed);
  const auto primes = sampler.choose(oddPrimes(rangeOr(c, 10000, 1'000'000)), 50);
  std::vector<std::pair<u64, u64>> jobs;
  for (u64 p : primes) {
    for (u64 M : {u64{2}, u64{1000}}) jobs.emplace_back(p, M);
  }
  const auto reports = parallelMap(jobs.size(), c.workers, [&](std::size_t i) {
    return verifyPrimeWindowTheorem(buildContext(jobs[i].first), jobs[i].second, 0.525);
  });
  Table t;
  t.columns = kIntervalColumns;
  for (const auto& r : reports) {
    t.rows.push_back(intervalRow(r));
    if (!r.firstPrimeWitness) ++t.violations;
  }
  t.summary.emplace_back("windows", static_cast<u64>(reports.size()));
  return t;
}

Table suiteMertens(const RunConfig& c) { return constantsTable({mertensCheck(c.x.value_or(kToleranceCutoff))}); }
Table suiteArtin(const RunConfig& c) { return constantsTable(artinChecks(c.x.value_or(kToleranceCutoff))); }
Table suiteGapConstant(const RunConfig& c) { return constantsTable(gapChecks(c.x.value_or(kToleranceCutoff))); }

Table suitePoisson(const RunConfig& c) {
  const PrimeContext ctx = buildContext(c.p.value_or(10007));
  const double lambda = c.lambda.value_or(2.0);
  const WindowHistogram h = poissonWindows(ctx, lambda);
  Table t;
  t.columns = {"k", "windows", "empirical", "poisson"};
  double pmf = std::exp(-lambda);
  const u64 top = std::max<u64>(h.counts.empty() ? 0 : h.counts.rbegin()->first,
                                static_cast<u64>(std::ceil(10.0 * lambda)));
  for (u64 k = 0; k <= top; ++k) {
    if (k > 0) pmf *= lambda / static_cast<double>(k);
    const auto it = h.counts.find(k);
    const u64 f = it == h.counts.end() ? 0 : it->second;
    t.rows.push_back({k, f, static_cast<double>(f) / static_cast<double>(h.windows), pmf});
  }
  const bool meanOk = std::abs(h.meanCount - lambda) <= 0.15 * lambda;
  t.summary.emplace_back("p", ctx.p());
  t.summary.emplace_back("windowLength", h.windowLength);
  t.summary.emplace_back("meanCount", h.meanCount);
  t.summary.emplace_back("poissonTV", h.poissonTV);
  t.summary.emplace_back("meanWithin15Percent", meanOk);
  return t;
}

Table suiteWeyl(const RunConfig& c) {
  std::vector<u64> primes;
  if (c.p) {
    primes.push_back(*c.p);
  } else {
    for (u64 x : {u64{1000}, u64{10000}, u64{100000}}) primes.push_back(nextPrime(x));
  }
  const auto values = parallelMap(primes.size(), c.workers, [&](std::size_t i) {
    const PrimeContext ctx = buildContext(primes[i]);
    return std::pair{ctx.phiPm1(), weylSum(ctx, ctx.phiPm1())};
  });
  Table t;
  t.columns = {"p", "t", "real", "imag", "magnitude"};
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const SumValue& s = values[i].second;
    t.rows.push_back({primes[i], values[i].first, s.real(), s.imag(), s.magnitude()});
  }
  return t;
}

Table suiteConstants(const RunConfig& c) {
  const u64 x = c.x.value_or(kToleranceCutoff);
  std::vector<ConstantCheck> checks{mertensCheck(x)};
  for (auto& v : artinChecks(x)) checks.push_back(v);
  for (auto& v : gapChecks(x)) checks.push_back(v);
  return constantsTable(checks);
}

using SuiteFn = std::function<Table(const RunConfig&)>;

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"charfun-agree", suiteCharfunAgree},
      {"charfun-sum", suiteCharfunSum},
      {"sqrt-bound", suiteSqrtBound},
      {"artin", suiteArtin},
      {"gap-constant", suiteGapConstant},
      {"expsum-bounds", [](const RunConfig& c) { return suiteExpsumBounds(c, false); }},
      {"equivalence-gap", [](const RunConfig& c) { return suiteExpsumBounds(c, true); }},
      {"kernel-forms", suiteKernelForms},
      {"interval-decomp", suiteIntervalDecomp},
      {"short-interval", suiteShortInterval},
      {"prime-window", suitePrimeWindow},
      {"mertens", suiteMertens},
      {"short-interval-prime", suiteShortIntervalPrime},
      {"constants", suiteConstants},
      {"poisson", suitePoisson},
      {"weyl", suiteWeyl},
  };
  return table;
}

Table commandVerify(const RunConfig& c) {
  if (!c.suite) throw InputError("verify: --suite is required");
  for (const auto& [name, fn] : suites()) {
    if (name == *c.suite) return fn(c);
  }
  throw InputError("verify: unknown suite '" + *c.suite + "'");
}

}  // namespace

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.first);
    return out;
  }();
  return names;
}

Table execute(const RunConfig& config) {
  switch (config.command) {
    case Command::Search: return commandSearch(config);
    case Command::Scan: return commandScan(config);
    case Command::Interval: return commandInterval(config);
    case Command::Charfun: return commandCharfun(config);
    case Command::Expsum: return commandExpsum(config);
    case Command::Stats: return commandStats(config);
    case Command::Constants: return commandConstants(config);
    case Command::Verify: return commandVerify(config);
  }
  throw InputError("unknown command");
}

int run(const RunConfig& config, std::ostream& artifact, std::ostream& diag) {
  const auto start = std::chrono::steady_clock::now();
  Table table;
  try {
    table = execute(config);
  } catch (const InputError& e) {
    diag << "error: " << e.what() << "\n";
    return 2;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Metadata meta;
  meta.command = toString(config.command);
  meta.config = configEcho(config);
  meta.violations = table.violations;
  if (config.recordTime) meta.wallClockSeconds = seconds;

  const OutFormat format =
      config.format.value_or(config.command == Command::Constants ? OutFormat::Json : OutFormat::Csv);
  if (format == OutFormat::Json) {
    writeJson(table, meta, artifact);
  } else {
    writeCsv(table, meta, artifact);
  }
  diag << meta.command << (config.suite ? " " + *config.suite : std::string()) << ": " << table.rows.size()
       << " rows, " << table.violations << " violations, " << formatDouble(seconds) << " s, " << config.workers
       << " workers\n";
  return table.violations == 0 ? 0 : 1;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const ParseOutcome parsed = parseCommandLine(argc, argv, std::getenv("PRIMROOT_WORKERS"), out, err);
  if (!parsed.config) return parsed.exitCode;
  const RunConfig& config = *parsed.config;
  if (config.outPath) {
    std::ofstream file(*config.outPath, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << *config.outPath << "' for writing\n";
      return 2;
    }
    return run(config, file, err);
  }
  return run(config, out, err);
}

}  // namespace primroot::cli
