#include "primroot/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "primroot/errors.hpp"

namespace primroot {

namespace {

// Covers trial division for every n <= 10^12.
constexpr u64 kCachedSieveLimit = 1'000'000;

u64 isqrt(u64 n) {
  auto r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool millerRabinWitness(u64 n, u64 a, u64 d, unsigned s) {
  u64 x = powMod(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mulMod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

u64 powMod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulMod(result, base, m);
    base = mulMod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool isPrime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  if (n < 37 * 37) return true;
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic below 3.3 * 10^24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (millerRabinWitness(n, a, d, s)) return false;
  }
  return true;
}

const PrimeTable& smallPrimes() {
  static const PrimeTable table = sievePrimes(kCachedSieveLimit);
  return table;
}

bool PrimeTable::contains(u64 n) const {
  return std::binary_search(primes_.begin(), primes_.end(), n);
}

PrimeTable sievePrimes(u64 limit) {
  if (limit < 2) throw InputError("sievePrimes: limit must be >= 2, got " + std::to_string(limit));
  // Index i stands for the odd number 2i+1.
  const u64 half = (limit - 1) / 2 + 1;
  std::vector<bool> composite(half, false);
  for (u64 i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
    if (composite[i]) continue;
    const u64 p = 2 * i + 1;
    for (u64 j = (p * p) / 2; j < half; j += p) composite[j] = true;
  }
  std::vector<u64> primes{2};
  for (u64 i = 1; i < half; ++i) {
    if (!composite[i] && 2 * i + 1 <= limit) primes.push_back(2 * i + 1);
  }
  return PrimeTable(limit, std::move(primes));
}

std::vector<u64> primesInRange(u64 lo, u64 hi) {
  std::vector<u64> out;
  if (hi < 2 || lo > hi) return out;
  lo = std::max<u64>(lo, 2);
  const u64 root = isqrt(hi);
  const PrimeTable base = root >= 2 ? sievePrimes(root) : PrimeTable(2, {2});

  constexpr u64 kSegment = 1 << 18;
  std::vector<bool> composite;
  for (u64 segLo = lo; segLo <= hi; segLo += kSegment) {
    const u64 segHi = std::min(hi, segLo + kSegment - 1);
    composite.assign(segHi - segLo + 1, false);
    for (u64 p : base) {
      if (p * p > segHi) break;
      u64 start = std::max(p * p, (segLo + p - 1) / p * p);
      for (u64 m = start; m <= segHi; m += p) composite[m - segLo] = true;
    }
    for (u64 n = segLo; n <= segHi; ++n) {
      if (!composite[n - segLo]) out.push_back(n);
    }
    if (segHi == hi) break;
  }
  return out;
}

Factorization::Factorization(u64 n, std::vector<PrimeFactor> factors)
    : n_(n), factors_(std::move(factors)) {
  if (n_ == 0) throw InputError("Factorization: n must be positive");
  u128 product = 1;
  u64 previous = 1;
  for (const auto& [prime, exponent] : factors_) {
    if (exponent == 0 || prime <= previous || !isPrime(prime)) {
      throw InputError("Factorization: factors must be ascending primes with positive exponents");
    }
    previous = prime;
    for (unsigned e = 0; e < exponent; ++e) {
      product *= prime;
      if (product > n_) throw InputError("Factorization: product exceeds n");
    }
  }
  if (product != n_) throw InputError("Factorization: product does not equal n");
}

bool Factorization::squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const PrimeFactor& f) { return f.exponent == 1; });
}

Factorization factorize(u64 n) {
  if (n == 0) throw InputError("factorize: n must be positive");
  std::vector<PrimeFactor> factors;
  u64 rest = n;
  auto strip = [&](u64 p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) factors.push_back({p, e});
  };

  bool exhausted = false;
  for (u64 p : smallPrimes()) {
    if (p * p > rest) {
      exhausted = true;
      break;
    }
    strip(p);
  }
  if (!exhausted) {
    // Beyond the cached table: odd trial divisors.
    for (u64 d = kCachedSieveLimit + 1; d <= rest / d; d += 2) strip(d);
  }
  if (rest > 1) factors.push_back({rest, 1});
  return Factorization(n, std::move(factors));
}

u64 totient(const Factorization& f) {
  u64 result = f.n();
  for (const auto& [prime, exponent] : f.factors()) result = result / prime * (prime - 1);
  return result;
}

u64 totient(u64 n) { return totient(factorize(n)); }

int moebius(const Factorization& f) {
  if (!f.squarefree()) return 0;
  return f.distinctPrimes() % 2 == 0 ? 1 : -1;
}

int moebius(u64 n) { return moebius(factorize(n)); }

unsigned omega(u64 n) { return static_cast<unsigned>(factorize(n).distinctPrimes()); }

double mangoldt(u64 n) {
  if (n < 2) return 0.0;
  const auto f = factorize(n);
  if (f.distinctPrimes() != 1) return 0.0;
  return std::log(static_cast<double>(f.factors()[0].prime));
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& [prime, exponent] : f.factors()) {
    const std::size_t count = out.size();
    u64 power = 1;
    for (unsigned e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 nextPrime(u64 n) {
  if (n < 2) return 2;
  constexpr u64 kMax = std::numeric_limits<u64>::max();
  // Largest 64-bit prime is 2^64 - 59.
  if (n >= kMax - 58) throw InputError("nextPrime: no 64-bit prime above " + std::to_string(n));
  u64 candidate = n % 2 == 0 ? n + 1 : n + 2;
  while (!isPrime(candidate)) candidate += 2;
  return candidate;
}

}  // namespace primroot
