#pragma once

// Multiplicative arithmetic: sieve, trial-division factorization, divisor
// enumeration and the functions phi, mu, omega, Lambda.

#include <cstdint>
#include <span>
#include <vector>

namespace primroot {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulMod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

/// base^exp mod m by square-and-multiply; 128-bit intermediates.
u64 powMod(u64 base, u64 exp, u64 m);

/// Deterministic primality for the full 64-bit range.
bool isPrime(u64 n);

/// Immutable sorted list of every prime <= limit.
class PrimeTable {
 public:
  PrimeTable() = default;
  PrimeTable(u64 limit, std::vector<u64> primes)
      : limit_(limit), primes_(std::move(primes)) {}

  u64 limit() const { return limit_; }
  std::span<const u64> primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  u64 operator[](std::size_t i) const { return primes_[i]; }
  auto begin() const { return primes_.begin(); }
  auto end() const { return primes_.end(); }

  /// Membership by binary search; n must not exceed limit().
  bool contains(u64 n) const;

 private:
  u64 limit_ = 0;
  std::vector<u64> primes_;
};

/// Sieve of Eratosthenes over odd numbers. Throws InputError for limit < 2.
PrimeTable sievePrimes(u64 limit);

/// Shared table of all primes <= 10^6, built once on first use.
const PrimeTable& smallPrimes();

/// Primes in [lo, hi] via a segmented sieve seeded with primes <= sqrt(hi).
std::vector<u64> primesInRange(u64 lo, u64 hi);

struct PrimeFactor {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

class Factorization {
 public:
  Factorization() = default;
  /// Validates the invariants (ascending primes, positive exponents,
  /// product equals n); throws InputError otherwise.
  Factorization(u64 n, std::vector<PrimeFactor> factors);

  u64 n() const { return n_; }
  std::span<const PrimeFactor> factors() const { return factors_; }
  std::size_t distinctPrimes() const { return factors_.size(); }
  bool squarefree() const;

 private:
  u64 n_ = 1;
  std::vector<PrimeFactor> factors_;
};

/// Trial division against a cached prime table up to sqrt(n).
Factorization factorize(u64 n);

u64 totient(u64 n);
u64 totient(const Factorization& f);

int moebius(u64 n);
int moebius(const Factorization& f);

unsigned omega(u64 n);

/// Natural log of q when n = q^k, zero otherwise.
double mangoldt(u64 n);

/// All divisors, ascending.
std::vector<u64> divisors(const Factorization& f);

/// Smallest prime strictly greater than n. Throws InputError on overflow.
u64 nextPrime(u64 n);

}  // namespace primroot
