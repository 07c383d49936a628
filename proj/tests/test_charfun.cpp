#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "primroot/charfun.hpp"
#include "primroot/errors.hpp"

using namespace primroot;

TEST_CASE("divisor-character form examples") {
  const auto ctx = buildContext(7);
  CHECK(psiDivisorCharacter(ctx, 3).value == 1);
  CHECK(psiDivisorCharacter(ctx, 2).value == 0);
  CHECK(psiDivisorCharacter(ctx, 1).value == 0);
  CHECK(psiDivisorCharacter(ctx, 3).residualError == 0.0);
  CHECK_THROWS_AS(psiDivisorCharacter(ctx, 0), InputError);
  CHECK_THROWS_AS(psiDivisorCharacter(ctx, 7), InputError);
}

TEST_CASE("collapsed divisor-free form examples") {
  const auto c7 = buildContext(7);
  CHECK(psiDivisorFreeCollapsed(c7, 5).value == 1);
  CHECK(psiDivisorFreeCollapsed(c7, 4).value == 0);
  CHECK(psiDivisorFreeCollapsed(buildContext(5), 2).value == 1);
  CHECK_THROWS_AS(psiDivisorFreeCollapsed(c7, 0), InputError);
}

TEST_CASE("literal divisor-free form examples and cap") {
  const auto c7 = buildContext(7);
  const auto e = psiDivisorFreeLiteral(c7, 3);
  CHECK(e.value == 1);
  CHECK(e.residualError < 1e-9);
  REQUIRE(e.raw.has_value());
  CHECK(std::abs(e.raw->imag()) < 1e-6);
  CHECK(psiDivisorFreeLiteral(c7, 1).value == 0);
  CHECK_THROWS_AS(psiDivisorFreeLiteral(buildContext(1009), 2), InputError);
  CHECK_THROWS_AS(psiDivisorFreeLiteral(c7, 0), InputError);

  const auto c257 = buildContext(257);
  const FieldCache cache(c257);
  for (u64 u = 1; u < 257; ++u) {
    CHECK(psiDivisorFreeLiteral(c257, u, &cache).value == (oracle::order(257, u) == 256 ? 1 : 0));
  }
}

TEST_CASE("collapsed sum over the field equals phi(p-1) for p <= 10^4") {
  for (u64 p : sievePrimes(10000)) {
    if (p == 2) continue;
    const auto ctx = buildContext(p);
    const IndexTable index(ctx);
    u64 total = 0;
    for (u64 u = 1; u < p; ++u) total += psiDivisorFreeCollapsed(ctx, u, &index).value;
    CHECK(total == ctx.phiPm1());
  }
  // The table-free walk gives the same answer.
  const auto ctx = buildContext(1013);
  u64 total = 0;
  for (u64 u = 1; u < 1013; ++u) total += psiDivisorFreeCollapsed(ctx, u).value;
  CHECK(total == ctx.phiPm1());
}

TEST_CASE("Ramanujan closed form matches the literal character sum") {
  for (u64 p : sievePrimes(1000)) {
    if (p == 2) continue;
    const auto ctx = buildContext(p);
    for (u64 d : divisors(ctx.pm1Factors())) {
      for (u64 m = 0; m < p - 1; m += 1 + (p / 40)) {
        const auto literal = oracle::characterSum(d, m);
        CHECK(std::abs(literal - std::complex<double>(static_cast<double>(ramanujanSum(d, m)), 0.0)) < 1e-8);
      }
    }
  }
}

TEST_CASE("prime-power-residue character sums are phi(q) or -1") {
  // For prime q | p-1, the sum of chi(u) over characters of order q is q-1
  // when u is a q-th power and -1 otherwise.
  for (u64 p : sievePrimes(500)) {
    if (p == 2) continue;
    const auto ctx = buildContext(p);
    for (const auto& f : ctx.pm1Factors().factors()) {
      const u64 q = f.prime;
      for (u64 u = 1; u < p; ++u) {
        const u64 m = discreteLog(ctx, u);
        const bool power = powMod(u, (p - 1) / q, p) == 1;
        const auto s = oracle::characterSum(q, m);
        CHECK(std::abs(s - std::complex<double>(power ? double(q - 1) : -1.0, 0.0)) < 1e-9);
      }
    }
  }
}

TEST_CASE("three-way agreement for small primes") {
  for (u64 p : sievePrimes(100)) {
    if (p == 2) continue;
    const auto ctx = buildContext(p);
    const FieldCache cache(ctx);
    for (u64 u = 1; u < p; ++u) {
      const int expected = oracle::order(p, u) == p - 1 ? 1 : 0;
      CHECK(psiDivisorCharacter(ctx, u).value == expected);
      CHECK(psiDivisorFreeCollapsed(ctx, u).value == expected);
      CHECK(psiDivisorFreeLiteral(ctx, u, &cache).value == expected);
    }
  }
}
