#pragma once

// Averages and constants over primes, and per-prime statistics of the
// primitive roots themselves (gaps, window counts, equidistribution).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "primroot/expsum.hpp"
#include "primroot/primctx.hpp"

namespace primroot {

inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kArtinConstant = 0.3739558136;
inline constexpr double kGapConstant = 2.82638409425598556075406;

struct ConstantEstimate {
  std::string name;
  u64 xCutoff = 0;
  double computed = 0.0;
  std::optional<double> reference;
  std::optional<double> absError;
};

/// Product of (1 - 1/p) over p <= x against 1 / (e^gamma log x).
ConstantEstimate mertensProduct(u64 x);

struct ConstantPair {
  ConstantEstimate empirical;
  ConstantEstimate product;
};

/// Mean of phi(p-1)/(p-1) over odd p <= x, and the product of
/// 1 - 1/(p(p-1)) over p <= x. The p = 2 factor of 1/2 is included: it is
/// what every odd p - 1 contributes through its factor 2.
ConstantPair artinAverage(u64 x);

/// Mean of (p-1)/phi(p-1) over odd p <= x, and the product of
/// 1 + 1/(p-1)^2 over p <= x.
ConstantPair gapConstant(u64 x);

/// Differences of consecutive primitive roots in ascending order.
std::vector<u64> gapSequence(const PrimeContext& ctx);

/// (1/p) * sum over the t smallest primitive roots g of e(g/p).
SumValue weylSum(const PrimeContext& ctx, u64 t);

struct WindowHistogram {
  u64 p = 0;
  double lambda = 0.0;
  u64 windowLength = 0;
  u64 windows = 0;
  /// Primitive roots inside the covered prefix [1, windows * windowLength].
  u64 rootsCovered = 0;
  std::map<u64, u64> counts;
  double meanCount = 0.0;
  double poissonTV = 0.0;
};

/// Splits [1, p-1] into disjoint windows of length round(lambda (p-1)/phi(p-1))
/// and compares the per-window root counts to Poisson(lambda).
WindowHistogram poissonWindows(const PrimeContext& ctx, double lambda);

}  // namespace primroot
