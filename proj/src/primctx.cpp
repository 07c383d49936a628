#include "primroot/primctx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

#include "primroot/errors.hpp"
#include "primroot/parallel.hpp"

namespace primroot {

namespace {

bool passesRootTest(u64 p, const Factorization& pm1, u64 u) {
  if (u % p == 0) return false;
  for (const auto& f : pm1.factors()) {
    if (powMod(u, (p - 1) / f.prime, p) == 1) return false;
  }
  return true;
}

void requireOddPrime(u64 p, const char* op) {
  if (p < 3 || !isPrime(p)) {
    throw InputError(std::string(op) + ": p must be an odd prime, got " + std::to_string(p));
  }
}

void requireUnit(const PrimeContext& ctx, u64 u, const char* op) {
  if (u == 0 || u >= ctx.p()) {
    throw InputError(std::string(op) + ": residue must lie in [1, p-1], got " + std::to_string(u));
  }
}

u64 leastRootGiven(u64 p, const Factorization& pm1) {
  for (u64 u = 2; u < p; ++u) {
    if (passesRootTest(p, pm1, u)) return u;
  }
  // p = 3 reaches here only if the test itself is wrong.
  throw InternalError("no primitive root found mod " + std::to_string(p));
}

u64 leastPrimeRootGiven(u64 p, const Factorization& pm1) {
  for (u64 q : smallPrimes()) {
    if (q >= p) break;
    if (passesRootTest(p, pm1, q)) return q;
  }
  for (u64 q = nextPrime(smallPrimes().limit()); q < p; q = nextPrime(q)) {
    if (passesRootTest(p, pm1, q)) return q;
  }
  throw InternalError("no prime primitive root found mod " + std::to_string(p));
}

}  // namespace

PrimeContext buildContext(u64 p) {
  requireOddPrime(p, "buildContext");
  Factorization pm1 = factorize(p - 1);
  const u64 phi = totient(pm1);
  const u64 tau = leastRootGiven(p, pm1);
  return PrimeContext(p, std::move(pm1), phi, tau);
}

u64 multiplicativeOrder(const PrimeContext& ctx, u64 u) {
  requireUnit(ctx, u, "multiplicativeOrder");
  const u64 p = ctx.p();
  u64 order = p - 1;
  for (const auto& [prime, exponent] : ctx.pm1Factors().factors()) {
    for (unsigned e = 0; e < exponent; ++e) {
      if (powMod(u, order / prime, p) != 1) break;
      order /= prime;
    }
  }
  return order;
}

bool isPrimitiveRoot(const PrimeContext& ctx, u64 u) {
  requireUnit(ctx, u, "isPrimitiveRoot");
  return passesRootTest(ctx.p(), ctx.pm1Factors(), u);
}

u64 leastPrimitiveRoot(u64 p) {
  requireOddPrime(p, "leastPrimitiveRoot");
  return leastRootGiven(p, factorize(p - 1));
}

u64 leastPrimePrimitiveRoot(u64 p) {
  requireOddPrime(p, "leastPrimePrimitiveRoot");
  return leastPrimeRootGiven(p, factorize(p - 1));
}

std::vector<u64> enumeratePrimitiveRoots(const PrimeContext& ctx) {
  const u64 p = ctx.p();
  std::vector<u64> roots;
  roots.reserve(ctx.phiPm1());
  u64 power = 1;
  for (u64 n = 1; n < p; ++n) {
    power = mulMod(power, ctx.tau(), p);
    if (std::gcd(n, p - 1) == 1) roots.push_back(power);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

u64 discreteLog(const PrimeContext& ctx, u64 u) {
  requireUnit(ctx, u, "discreteLog");
  const u64 p = ctx.p();
  const u64 order = p - 1;
  auto step = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(order))));
  while (step * step < order) ++step;

  std::unordered_map<u64, u64> baby;
  baby.reserve(step);
  u64 power = 1;
  for (u64 j = 0; j < step; ++j) {
    baby.try_emplace(power, j);
    power = mulMod(power, ctx.tau(), p);
  }
  // power == tau^step; giant stride multiplies by tau^-step.
  const u64 stride = powMod(power, p - 2, p);
  u64 gamma = u;
  for (u64 i = 0; i < step; ++i) {
    if (auto it = baby.find(gamma); it != baby.end()) return (i * step + it->second) % order;
    gamma = mulMod(gamma, stride, p);
  }
  throw InternalError("discreteLog: no solution for u=" + std::to_string(u) + " mod " + std::to_string(p));
}

IndexTable::IndexTable(const PrimeContext& ctx) : p_(ctx.p()) {
  if (p_ > std::numeric_limits<std::uint32_t>::max()) {
    throw InputError("IndexTable: p too large for a full index table");
  }
  logs_.assign(p_, 0);
  powers_.resize(p_ - 1);
  u64 power = 1;
  for (u64 n = 0; n + 1 < p_; ++n) {
    powers_[n] = static_cast<std::uint32_t>(power);
    logs_[power] = static_cast<std::uint32_t>(n);
    power = mulMod(power, ctx.tau(), p_);
  }
}

u64 IndexTable::log(u64 u) const {
  if (u == 0 || u >= p_) throw InputError("IndexTable::log: residue must lie in [1, p-1]");
  return logs_[u];
}

FamilyFlags classifyFamilies(const Factorization& pm1) {
  FamilyFlags flags;
  const auto factors = pm1.factors();
  if (factors.empty() || factors[0].prime != 2) return flags;

  if (factors.size() == 1) flags.set(Family::Fermat);
  // 2^a * q with q prime; q = 2 folds into the single-factor case 2^(a+1).
  if ((factors.size() == 1 && factors[0].exponent >= 2) ||
      (factors.size() == 2 && factors[1].exponent == 1)) {
    flags.set(Family::Germain);
  }

  bool initialSegment = true;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].prime != smallPrimes()[i]) {
      initialSegment = false;
      break;
    }
  }
  if (initialSegment) flags.set(Family::HighlyComposite);
  return flags;
}

ScanRecord scanPrime(u64 p, double epsilon) {
  requireOddPrime(p, "scanPrime");
  const Factorization pm1 = factorize(p - 1);
  const u64 phi = totient(pm1);
  ScanRecord r;
  r.p = p;
  r.g = leastRootGiven(p, pm1);
  r.gStar = leastPrimeRootGiven(p, pm1);
  r.ratio = static_cast<double>(phi) / static_cast<double>(p - 1);
  r.omegaPm1 = static_cast<unsigned>(pm1.distinctPrimes());
  r.gap = static_cast<double>(p - 1) / static_cast<double>(phi);
  r.families = classifyFamilies(pm1);
  r.rootRatio = static_cast<double>(r.g) / std::pow(std::log(static_cast<double>(p)), 1.0 + epsilon);
  return r;
}

std::vector<ScanRecord> scanRange(u64 pMin, u64 pMax, double epsilon, unsigned workers) {
  if (pMin < 3 || pMin > pMax) {
    throw InputError("scanRange: require 3 <= pMin <= pMax");
  }
  const std::vector<u64> primes = primesInRange(pMin, pMax);
  return parallelMap(primes.size(), workers,
                     [&](std::size_t i) { return scanPrime(primes[i], epsilon); });
}

}  // namespace primroot
