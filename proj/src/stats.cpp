#include "primroot/stats.hpp"

#include <cmath>
#include <string>

#include "primroot/errors.hpp"

namespace primroot {

namespace {

void requireCutoff(u64 x, u64 least, const char* op) {
  if (x < least) throw InputError(std::string(op) + ": x must be >= " + std::to_string(least));
}

ConstantEstimate withReference(std::string name, u64 x, double computed, double reference) {
  return {std::move(name), x, computed, reference, std::abs(computed - reference)};
}

// phi(n) for every n <= limit.
std::vector<std::uint32_t> totientTable(u64 limit) {
  std::vector<std::uint32_t> phi(limit + 1);
  for (u64 n = 0; n <= limit; ++n) phi[n] = static_cast<std::uint32_t>(n);
  for (u64 n = 2; n <= limit; ++n) {
    if (phi[n] != n) continue;
    for (u64 m = n; m <= limit; m += n) phi[m] -= phi[m] / static_cast<std::uint32_t>(n);
  }
  return phi;
}

double logd(u64 n) { return std::log(static_cast<double>(n)); }

}  // namespace

ConstantEstimate mertensProduct(u64 x) {
  requireCutoff(x, 2, "mertensProduct");
  double product = 1.0;
  for (u64 p : sievePrimes(x)) product *= 1.0 - 1.0 / static_cast<double>(p);
  return withReference("mertens", x, product, 1.0 / (std::exp(kEulerGamma) * logd(x)));
}

ConstantPair artinAverage(u64 x) {
  requireCutoff(x, 3, "artinAverage");
  const PrimeTable primes = sievePrimes(x);
  const auto phi = totientTable(x);
  double sum = 0.0;
  double product = 1.0;
  u64 count = 0;
  for (u64 p : primes) {
    const double pd = static_cast<double>(p);
    product *= 1.0 - 1.0 / (pd * (pd - 1.0));
    if (p == 2) continue;
    sum += static_cast<double>(phi[p - 1]) / static_cast<double>(p - 1);
    ++count;
  }
  return {withReference("artin-empirical", x, sum / static_cast<double>(count), kArtinConstant),
          withReference("artin-product", x, product, kArtinConstant)};
}

ConstantPair gapConstant(u64 x) {
  requireCutoff(x, 2, "gapConstant");
  const PrimeTable primes = sievePrimes(x);
  const auto phi = totientTable(x);
  double sum = 0.0;
  double product = 1.0;
  u64 count = 0;
  for (u64 p : primes) {
    const double pm1 = static_cast<double>(p - 1);
    product *= 1.0 + 1.0 / (pm1 * pm1);
    if (p == 2) continue;
    sum += pm1 / static_cast<double>(phi[p - 1]);
    ++count;
  }
  // x = 2 has no odd prime to average over.
  const double mean = count == 0 ? 0.0 : sum / static_cast<double>(count);
  return {withReference("gap-empirical", x, mean, kGapConstant), withReference("gap-product", x, product, kGapConstant)};
}

std::vector<u64> gapSequence(const PrimeContext& ctx) {
  const std::vector<u64> roots = enumeratePrimitiveRoots(ctx);
  std::vector<u64> gaps;
  if (roots.size() < 2) return gaps;
  gaps.reserve(roots.size() - 1);
  for (std::size_t i = 1; i < roots.size(); ++i) gaps.push_back(roots[i] - roots[i - 1]);
  return gaps;
}

SumValue weylSum(const PrimeContext& ctx, u64 t) {
  if (t == 0 || t > ctx.phiPm1()) throw InputError("weylSum: t must lie in [1, phi(p-1)]");
  const std::vector<u64> roots = enumeratePrimitiveRoots(ctx);
  CompensatedSum acc;
  for (u64 n = 0; n < t; ++n) acc.add(unitRoot(static_cast<std::int64_t>(roots[n]), ctx.p()));
  SumValue s;
  s.value = acc.value() / static_cast<double>(ctx.p());
  s.compensation = acc.compensation() / static_cast<double>(ctx.p());
  s.termCount = t;
  return s;
}

WindowHistogram poissonWindows(const PrimeContext& ctx, double lambda) {
  if (!(lambda > 0.0)) throw InputError("poissonWindows: lambda must be positive");
  const u64 p = ctx.p();
  const double expectedGap = static_cast<double>(p - 1) / static_cast<double>(ctx.phiPm1());
  const auto length = static_cast<u64>(std::llround(lambda * expectedGap));
  if (length < 1) throw InputError("poissonWindows: window length rounds to zero");
  if (length >= p - 1) throw InputError("poissonWindows: window covers the whole range [1, p-1]");

  WindowHistogram h;
  h.p = p;
  h.lambda = lambda;
  h.windowLength = length;
  h.windows = (p - 1) / length;

  std::vector<u64> perWindow(h.windows, 0);
  for (u64 g : enumeratePrimitiveRoots(ctx)) {
    const u64 w = (g - 1) / length;
    if (w < h.windows) ++perWindow[w];
  }
  for (u64 c : perWindow) {
    ++h.counts[c];
    h.rootsCovered += c;
  }
  h.meanCount = static_cast<double>(h.rootsCovered) / static_cast<double>(h.windows);

  // Total variation against Poisson(lambda) on {0..K} plus one tail bucket.
  const auto cutoff = static_cast<u64>(std::ceil(10.0 * lambda));
  double tv = 0.0;
  double pmf = std::exp(-lambda);
  double poissonMass = 0.0;
  u64 empiricalInRange = 0;
  for (u64 k = 0; k <= cutoff; ++k) {
    if (k > 0) pmf *= lambda / static_cast<double>(k);
    const auto it = h.counts.find(k);
    const u64 freq = it == h.counts.end() ? 0 : it->second;
    empiricalInRange += freq;
    tv += std::abs(static_cast<double>(freq) / static_cast<double>(h.windows) - pmf);
    poissonMass += pmf;
  }
  const double empiricalTail = static_cast<double>(h.windows - empiricalInRange) / static_cast<double>(h.windows);
  tv += std::abs(empiricalTail - std::max(0.0, 1.0 - poissonMass));
  h.poissonTV = std::min(1.0, 0.5 * tv);
  return h;
}

}  // namespace primroot
