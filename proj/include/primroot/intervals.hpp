#pragma once

// Main-term / error-term decomposition of primitive-root counts over
// integer intervals [M, M+N], plain and von Mangoldt weighted, and the
// desk-scale checks of the short-interval statements built on them.

#include <optional>
#include <vector>

#include "primroot/numeric.hpp"
#include "primroot/primctx.hpp"

namespace primroot {

/// Inclusive interval [M, M+N].
struct IntervalSpec {
  u64 M = 0;
  u64 N = 1;
  bool weighted = false;
};

struct IntervalReport {
  u64 p = 0;
  IntervalSpec spec;
  /// Sum of Psi(u mod p), or of Psi(u mod p) * Lambda(u) when weighted.
  double psiCount = 0.0;
  double mainTerm = 0.0;
  double discrepancy = 0.0;
  /// Number of u in the interval with Psi(u mod p) = 1.
  u64 hits = 0;
  /// Number of u in the interval with u != 0 mod p.
  u64 units = 0;
  /// Least u with Psi = 1; when weighted, least prime power with Psi = 1.
  std::optional<u64> firstWitness;
  /// Weighted reports only: least prime u with Psi = 1.
  std::optional<u64> firstPrimeWitness;
  std::optional<double> epsilonUsed;
  /// Every u in the interval is a multiple of p.
  bool degenerate = false;
};

/// Unweighted count with main term phi(p-1)/p per unit in the interval.
IntervalReport intervalPsiSum(const PrimeContext& ctx, IntervalSpec spec, const IndexTable* index = nullptr);

/// Lambda-weighted count with main term phi(p-1)/p * sum Lambda(u) over
/// the units of the interval.
IntervalReport intervalWeightedSum(const PrimeContext& ctx, IntervalSpec spec, const IndexTable* index = nullptr);

/// The discrepancy rebuilt from additive characters without collapsing:
/// (1/p) sum_u sum_{gcd(n,p-1)=1} sum_{0<m<p} e((tau^n - u) m / p) over the
/// units u of the interval. Capped at p <= kLiteralModeCap.
Complex literalDiscrepancy(const PrimeContext& ctx, IntervalSpec spec);

/// Primes p in [pMin, pMax] with g(p) >= sqrt(p) - 2. Requires pMin > 409.
std::vector<u64> verifyLeastRootBound(u64 pMin, u64 pMax, unsigned workers = 1);

enum class WitnessMode { PrimitiveRoot, PrimePrimitiveRoot };

struct WindowCheck {
  u64 p = 0;
  u64 N = 0;
  std::optional<u64> witness;
  /// (witness - M) / (log p)^(1+epsilon); NaN when no witness.
  double ratio = 0.0;
};

struct ShortIntervalSummary {
  u64 primesChecked = 0;
  u64 violationCount = 0;
  double maxRatio = 0.0;
  u64 argmaxPrime = 0;
  std::vector<WindowCheck> checks;
};

/// For each prime in [pMin, pMax], searches [M, M + ceil((log p)^(1+eps))]
/// (values reduced mod p) for a witness of the requested kind.
ShortIntervalSummary verifyShortIntervalTheorem(u64 pMin, u64 pMax, double epsilon, u64 M, WitnessMode mode,
                                                unsigned workers = 1);

/// Weighted report over [M, M + ceil(p^exponent)].
IntervalReport verifyPrimeWindowTheorem(const PrimeContext& ctx, u64 M, double exponent = 0.525);

}  // namespace primroot
