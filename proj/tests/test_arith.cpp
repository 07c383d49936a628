#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "primroot/arith.hpp"
#include "primroot/errors.hpp"

using namespace primroot;

TEST_CASE("sievePrimes small tables and errors") {
  const auto t10 = sievePrimes(10);
  CHECK(std::vector<u64>(t10.begin(), t10.end()) == std::vector<u64>{2, 3, 5, 7});
  const auto t2 = sievePrimes(2);
  CHECK(t2.size() == 1);
  CHECK(t2[0] == 2);
  CHECK_THROWS_AS(sievePrimes(1), InputError);
  CHECK_THROWS_AS(sievePrimes(0), InputError);
}

TEST_CASE("sievePrimes to 10^6 matches trial division") {
  const auto table = sievePrimes(1'000'000);
  CHECK(table.size() == 78498);
  CHECK(table[0] == 2);
  CHECK(table[1] == 3);
  CHECK(table[2] == 5);
  CHECK(table[3] == 7);
  // Spot-check membership against the trial-division oracle.
  for (u64 n = 1; n <= 20000; ++n) CHECK(table.contains(n) == oracle::isPrime(n));
  for (u64 p : table) {
    if (p > 2000) break;
    CHECK(oracle::isPrime(p));
  }
}

TEST_CASE("primesInRange agrees with the full sieve") {
  const auto table = sievePrimes(300'000);
  for (auto [lo, hi] : {std::pair<u64, u64>{1, 100}, {14, 16}, {262000, 300000}, {99991, 99991}}) {
    std::vector<u64> expected;
    for (u64 p : table) {
      if (p >= lo && p <= hi) expected.push_back(p);
    }
    CHECK(primesInRange(lo, hi) == expected);
  }
}

TEST_CASE("isPrime against trial division and known large values") {
  for (u64 n = 0; n < 50000; ++n) CHECK(isPrime(n) == oracle::isPrime(n));
  CHECK(isPrime(1000000007ULL));
  CHECK_FALSE(isPrime(1000000007ULL * 3));
  CHECK(isPrime(18446744073709551557ULL));
  CHECK_FALSE(isPrime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST_CASE("factorize examples") {
  CHECK(factorize(12).factors().size() == 2);
  CHECK(factorize(12).factors()[0] == PrimeFactor{2, 2});
  CHECK(factorize(12).factors()[1] == PrimeFactor{3, 1});
  CHECK(factorize(1).factors().empty());
  const auto f = factorize(1000002);
  REQUIRE(f.factors().size() == 3);
  CHECK(f.factors()[0] == PrimeFactor{2, 1});
  CHECK(f.factors()[1] == PrimeFactor{3, 1});
  CHECK(f.factors()[2] == PrimeFactor{166667, 1});
  CHECK_THROWS_AS(factorize(0), InputError);
}

TEST_CASE("factorize property: product and primality of every factor") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const u64 n = oracle::uniform(rng, 1, 1'000'000'000'000ULL);
    const auto f = factorize(n);
    u64 product = 1;
    u64 previous = 1;
    for (const auto& [p, e] : f.factors()) {
      CHECK(p > previous);
      CHECK(e >= 1);
      CHECK(isPrime(p));
      previous = p;
      for (unsigned k = 0; k < e; ++k) product *= p;
    }
    CHECK(product == n);
  }
}

TEST_CASE("Factorization rejects invalid factor lists") {
  CHECK_THROWS_AS(Factorization(12, {{3, 1}, {2, 2}}), InputError);
  CHECK_THROWS_AS(Factorization(12, {{2, 1}, {3, 1}}), InputError);
  CHECK_THROWS_AS(Factorization(8, {{4, 1}, {2, 1}}), InputError);
  CHECK_THROWS_AS(Factorization(4, {{2, 0}, {2, 2}}), InputError);
  CHECK_NOTHROW(Factorization(12, {{2, 2}, {3, 1}}));
}

TEST_CASE("totient, moebius, omega, mangoldt examples") {
  CHECK(totient(1) == 1);
  CHECK(totient(12) == 4);
  CHECK(totient(7919) == 7918);
  CHECK(moebius(1) == 1);
  CHECK(moebius(4) == 0);
  CHECK(moebius(6) == 1);
  CHECK(moebius(30) == -1);
  CHECK(omega(1) == 0);
  CHECK(omega(12) == 2);
  CHECK(omega(30030) == 6);
  CHECK(mangoldt(8) == doctest::Approx(std::log(2.0)));
  CHECK(mangoldt(6) == 0.0);
  CHECK(mangoldt(1) == 0.0);
  CHECK(mangoldt(49) == doctest::Approx(std::log(7.0)));
}

TEST_CASE("divisors examples") {
  CHECK(divisors(factorize(12)) == std::vector<u64>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(factorize(1)) == std::vector<u64>{1});
  CHECK(divisors(factorize(101)) == std::vector<u64>{1, 101});
  const auto f = factorize(720720);
  std::size_t expected = 1;
  for (const auto& pf : f.factors()) expected *= pf.exponent + 1;
  CHECK(divisors(f).size() == expected);
}

TEST_CASE("nextPrime examples and overflow") {
  CHECK(nextPrime(7) == 11);
  CHECK(nextPrime(1) == 2);
  CHECK(nextPrime(2) == 3);
  CHECK(nextPrime(1'000'000) == 1000003);
  CHECK(nextPrime(18446744073709551556ULL) == 18446744073709551557ULL);
  CHECK_THROWS_AS(nextPrime(18446744073709551557ULL), InputError);
}

TEST_CASE("moebius sum over divisors is the indicator of 1") {
  for (u64 n = 1; n <= 10000; ++n) {
    int sum = 0;
    for (u64 d : divisors(factorize(n))) sum += moebius(d);
    CHECK(sum == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("totient agrees with the gcd count and the product formula") {
  for (u64 n = 1; n <= 2000; ++n) CHECK(totient(n) == oracle::totient(n));
  for (u64 n = 1; n <= 10000; ++n) {
    u64 value = n;
    for (auto [p, e] : oracle::factor(n)) value = value / p * (p - 1);
    CHECK(totient(n) == value);
  }
}

TEST_CASE("moebius matches oracle") {
  for (u64 n = 1; n <= 10000; ++n) CHECK(moebius(n) == oracle::moebius(n));
}

TEST_CASE("reciprocal divisor sum against 2 log log n") {
  // The 2 log log n form fails exactly at n = 18 and n = 24 on [16, 10^6];
  // Robin's unconditional bound holds throughout.
  constexpr u64 kLimit = 1'000'000;
  std::vector<double> reciprocal(kLimit + 1, 0.0);
  for (u64 d = 1; d <= kLimit; ++d) {
    for (u64 m = d; m <= kLimit; m += d) reciprocal[m] += 1.0 / static_cast<double>(d);
  }
  std::set<u64> exceptions;
  for (u64 n = 16; n <= kLimit; ++n) {
    const double ll = std::log(std::log(static_cast<double>(n)));
    if (reciprocal[n] > 2.0 * ll) exceptions.insert(n);
    CHECK(reciprocal[n] < std::exp(0.5772156649015329) * ll + 0.6483 / ll);
  }
  CHECK(exceptions == std::set<u64>{18, 24});
  // Spot check one value with the library divisor enumeration.
  double s = 0;
  for (u64 d : divisors(factorize(720720))) s += 1.0 / static_cast<double>(d);
  CHECK(s == doctest::Approx(reciprocal[720720]));
}

TEST_CASE("maximum omega below 10^6 is 7 at 510510") {
  unsigned best = 0;
  u64 where = 0;
  for (u64 n = 1; n <= 1'000'000; ++n) {
    const unsigned w = omega(n);
    if (w > best) {
      best = w;
      where = n;
    }
  }
  CHECK(best == 7);
  CHECK(where == 510510);
}

TEST_CASE("Fermat-Euler congruence for random moduli") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const u64 n = oracle::uniform(rng, 2, 1'000'000);
    const u64 phi = totient(n);
    int tried = 0;
    while (tried < 10) {
      const u64 a = oracle::uniform(rng, 1, n);
      if (std::gcd(a, n) != 1) continue;
      CHECK(powMod(a, phi, n) == 1 % n);
      ++tried;
    }
  }
}
