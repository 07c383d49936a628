#include "primroot/intervals.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "primroot/charfun.hpp"
#include "primroot/errors.hpp"
#include "primroot/numeric.hpp"
#include "primroot/parallel.hpp"

namespace primroot {

namespace {

void requireSpec(const IntervalSpec& spec, const char* op) {
  if (spec.N < 1) throw InputError(std::string(op) + ": N must be >= 1");
  if (spec.M > std::numeric_limits<u64>::max() - spec.N) throw InputError(std::string(op) + ": M + N overflows");
}

template <typename Visit>
IntervalReport sweep(const PrimeContext& ctx, IntervalSpec spec, const IndexTable* index, Visit&& visit) {
  std::optional<IndexTable> local;
  if (index == nullptr) {
    local.emplace(ctx);
    index = &*local;
  }
  IntervalReport r;
  r.p = ctx.p();
  r.spec = spec;
  for (u64 u = spec.M;; ++u) {
    const u64 residue = u % ctx.p();
    if (residue != 0) {
      ++r.units;
      const int psi = psiDivisorFreeCollapsed(ctx, residue, index).value;
      if (psi == 1) ++r.hits;
      visit(r, u, psi);
    }
    if (u == spec.M + spec.N) break;
  }
  r.degenerate = r.units == 0;
  return r;
}

double pow1p(double x, double epsilon) { return std::pow(x, 1.0 + epsilon); }

}  // namespace

IntervalReport intervalPsiSum(const PrimeContext& ctx, IntervalSpec spec, const IndexTable* index) {
  requireSpec(spec, "intervalPsiSum");
  if (spec.weighted) throw InputError("intervalPsiSum: spec must be unweighted");
  IntervalReport r = sweep(ctx, spec, index, [](IntervalReport& rep, u64 u, int psi) {
    if (psi == 1 && !rep.firstWitness) rep.firstWitness = u;
  });
  r.psiCount = static_cast<double>(r.hits);
  r.mainTerm = static_cast<double>(ctx.phiPm1()) / static_cast<double>(ctx.p()) * static_cast<double>(r.units);
  r.discrepancy = r.psiCount - r.mainTerm;
  return r;
}

IntervalReport intervalWeightedSum(const PrimeContext& ctx, IntervalSpec spec, const IndexTable* index) {
  requireSpec(spec, "intervalWeightedSum");
  if (!spec.weighted) throw InputError("intervalWeightedSum: spec must be weighted");
  CompensatedSum weightedHits;
  CompensatedSum lambdaTotal;
  IntervalReport r = sweep(ctx, spec, index, [&](IntervalReport& rep, u64 u, int psi) {
    const double lambda = mangoldt(u);
    if (lambda == 0.0) return;
    lambdaTotal.add(lambda);
    if (psi != 1) return;
    weightedHits.add(lambda);
    if (!rep.firstWitness) rep.firstWitness = u;
    if (!rep.firstPrimeWitness && isPrime(u)) rep.firstPrimeWitness = u;
  });
  r.psiCount = weightedHits.value().real();
  r.mainTerm = static_cast<double>(ctx.phiPm1()) / static_cast<double>(ctx.p()) * lambdaTotal.value().real();
  r.discrepancy = r.psiCount - r.mainTerm;
  return r;
}

Complex literalDiscrepancy(const PrimeContext& ctx, IntervalSpec spec) {
  requireSpec(spec, "literalDiscrepancy");
  const u64 p = ctx.p();
  if (p > kLiteralModeCap) throw InputError("literalDiscrepancy: p exceeds the literal-mode cap");
  const RootTable roots(p);
  std::vector<std::int64_t> generators;
  u64 power = 1;
  for (u64 n = 1; n < p; ++n) {
    power = mulMod(power, ctx.tau(), p);
    if (std::gcd(n, p - 1) == 1) generators.push_back(static_cast<std::int64_t>(power));
  }
  const auto pi = static_cast<std::int64_t>(p);
  CompensatedSum acc;
  for (u64 u = spec.M;; ++u) {
    const auto residue = static_cast<std::int64_t>(u % p);
    if (residue != 0) {
      for (std::int64_t g : generators) {
        for (std::int64_t m = 1; m < pi; ++m) acc.add(roots((g - residue) * m));
      }
    }
    if (u == spec.M + spec.N) break;
  }
  return acc.value() / static_cast<double>(p);
}

std::vector<u64> verifyLeastRootBound(u64 pMin, u64 pMax, unsigned workers) {
  if (pMin <= 409) throw InputError("verifyLeastRootBound: the bound applies only to p > 409");
  if (pMin > pMax) throw InputError("verifyLeastRootBound: empty range");
  const std::vector<u64> primes = primesInRange(pMin, pMax);
  const auto flags = parallelMap(primes.size(), workers, [&](std::size_t i) -> char {
    const u64 p = primes[i];
    const double g = static_cast<double>(leastPrimitiveRoot(p));
    return g >= std::sqrt(static_cast<double>(p)) - 2.0 ? 1 : 0;
  });
  std::vector<u64> violations;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (flags[i] != 0) violations.push_back(primes[i]);
  }
  return violations;
}

ShortIntervalSummary verifyShortIntervalTheorem(u64 pMin, u64 pMax, double epsilon, u64 M, WitnessMode mode,
                                                unsigned workers) {
  if (pMin < 3 || pMin > pMax) throw InputError("verifyShortIntervalTheorem: require 3 <= pMin <= pMax");
  if (!(epsilon > 0.0)) throw InputError("verifyShortIntervalTheorem: epsilon must be positive");
  if (M < 2) throw InputError("verifyShortIntervalTheorem: M must be >= 2");

  const std::vector<u64> primes = primesInRange(pMin, pMax);
  ShortIntervalSummary summary;
  summary.checks = parallelMap(primes.size(), workers, [&](std::size_t i) {
    const PrimeContext ctx = buildContext(primes[i]);
    const double scale = pow1p(std::log(static_cast<double>(ctx.p())), epsilon);
    WindowCheck c;
    c.p = ctx.p();
    c.N = static_cast<u64>(std::ceil(scale));
    for (u64 u = M; u <= M + c.N; ++u) {
      const u64 residue = u % ctx.p();
      if (residue == 0 || !isPrimitiveRoot(ctx, residue)) continue;
      if (mode == WitnessMode::PrimePrimitiveRoot && !isPrime(u)) continue;
      c.witness = u;
      break;
    }
    c.ratio = c.witness ? static_cast<double>(*c.witness - M) / scale : std::numeric_limits<double>::quiet_NaN();
    return c;
  });

  summary.primesChecked = primes.size();
  for (const WindowCheck& c : summary.checks) {
    if (!c.witness) {
      ++summary.violationCount;
      continue;
    }
    if (summary.argmaxPrime == 0 || c.ratio > summary.maxRatio) {
      summary.maxRatio = c.ratio;
      summary.argmaxPrime = c.p;
    }
  }
  return summary;
}

IntervalReport verifyPrimeWindowTheorem(const PrimeContext& ctx, u64 M, double exponent) {
  if (M < 2) throw InputError("verifyPrimeWindowTheorem: M must be >= 2");
  if (!(exponent > 0.0)) throw InputError("verifyPrimeWindowTheorem: exponent must be positive");
  const auto N = static_cast<u64>(std::ceil(std::pow(static_cast<double>(ctx.p()), exponent)));
  return intervalWeightedSum(ctx, IntervalSpec{M, N, true});
}

}  // namespace primroot
