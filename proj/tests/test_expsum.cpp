#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "primroot/errors.hpp"
#include "primroot/expsum.hpp"

using namespace primroot;
using oracle::e;

namespace {

double log3(double p) { return std::pow(std::log(p), 3); }

}  // namespace

TEST_CASE("complete geometric sum") {
  CHECK(std::abs(completeGeometricSum(7, 1).value - Complex(-1, 0)) < 1e-8);
  CHECK(std::abs(completeGeometricSum(7, 3).value - Complex(-1, 0)) < 1e-8);
  const auto d = completeGeometricSum(7, 0);
  CHECK(d.degenerate);
  CHECK(d.value == Complex(6, 0));
  CHECK(completeGeometricSum(10007, 17).termCount == 10006);
  CHECK(std::abs(completeGeometricSum(10007, 17).value - Complex(-1, 0)) < 1e-8);
}

TEST_CASE("incomplete power sum") {
  const auto c7 = buildContext(7);
  CHECK(std::abs(incompletePowerSum(c7, 1, 6).value - Complex(-1, 0)) < 1e-12);
  CHECK(std::abs(incompletePowerSum(c7, 1, 1).value - e(3.0 / 7.0)) < 1e-12);
  const auto big = incompletePowerSum(buildContext(10007), 5, 5000);
  CHECK(big.boundName == "Thm3.2");
  CHECK(big.termCount == 5000);
  CHECK(big.aprioriBound == doctest::Approx(std::sqrt(10007.0) * std::pow(std::log(10007.0), 2)));
  CHECK(big.withinBound());
  CHECK(big.statementBound.has_value());
  CHECK_THROWS_AS(incompletePowerSum(c7, 0, 3), InputError);
  CHECK_THROWS_AS(incompletePowerSum(c7, 1, 7), InputError);
}

TEST_CASE("summation kernel expansion reproduces the incomplete sum") {
  for (u64 p : {7, 31, 101, 211}) {
    const auto ctx = buildContext(p);
    const u64 q = nextPrime(p);
    for (u64 x : {u64{1}, (p - 1) / 2, p - 1}) {
      for (u64 b : {u64{1}, p - 1}) {
        const auto direct = incompletePowerSum(ctx, b, x);
        const auto kernel = kernelExpansion(ctx, b, x, q);
        CHECK(std::abs(direct.value - kernel.value) < 1e-8);
      }
    }
  }
}

TEST_CASE("coprime filtered sum") {
  const auto c7 = buildContext(7);
  const auto s = coprimeFilteredSum(c7, 1);
  CHECK(s.termCount == 2);
  CHECK(std::abs(s.value - (e(3.0 / 7.0) + e(5.0 / 7.0))) < 1e-12);
  CHECK(std::abs(coprimeFilteredSum(buildContext(3), 1).value - e(2.0 / 3.0)) < 1e-12);
  const auto big = coprimeFilteredSum(buildContext(10007), 1);
  CHECK(big.boundName == "Thm3.4");
  CHECK(big.aprioriBound == doctest::Approx(std::sqrt(10007.0) * log3(10007.0)));
  CHECK(big.withinBound());
}

TEST_CASE("kernel full sum") {
  const auto s = kernelFullSum(11, 1, 7);
  std::complex<double> direct = 0;
  for (int n = 1; n <= 6; ++n) direct += e(n / 11.0);
  CHECK(std::abs(s.value - direct) < 1e-12);
  CHECK(s.routeGap() < 1e-8);
  const auto s5 = kernelFullSum(11, 5, 7);
  CHECK(s5.aprioriBound == doctest::Approx(22.0 / (5.0 * std::numbers::pi)));
  CHECK(s5.withinBound());
  const auto d = kernelFullSum(11, 0, 7);
  CHECK(d.degenerate);
  CHECK(d.value == Complex(6, 0));
  CHECK_THROWS_AS(kernelFullSum(7, 1, 7), InputError);
  CHECK_THROWS_AS(kernelFullSum(12, 1, 7), InputError);
}

TEST_CASE("kernel full sum bound holds with the circular distance") {
  for (u64 p : {7, 31, 101, 503}) {
    const u64 q = nextPrime(p);
    for (std::int64_t t = 1; t < static_cast<std::int64_t>(q); ++t) CHECK(kernelFullSum(q, t, p).withinBound());
  }
}

TEST_CASE("kernel coprime sum") {
  const auto c7 = buildContext(7);
  const auto s = kernelCoprimeSum(c7, 11, 1);
  CHECK(std::abs(s.value - (e(1.0 / 11.0) + e(5.0 / 11.0))) < 1e-12);
  CHECK(s.routeGap() < 1e-8);
  const auto s31 = kernelCoprimeSum(buildContext(31), 37, 3);
  CHECK(s31.routeGap() < 1e-8);
  const auto s10 = kernelCoprimeSum(c7, 11, 10);
  CHECK(s10.magnitude() <= 44.0 * std::log(std::log(7.0)) / (10.0 * std::numbers::pi));
  CHECK(s10.withinBound());
}

TEST_CASE("Moebius and closed forms agree on random triples") {
  std::mt19937_64 rng(31337);
  const auto table = sievePrimes(1000);
  for (int i = 0; i < 100; ++i) {
    const u64 p = table[oracle::uniform(rng, 1, table.size() - 1)];
    const u64 q = nextPrime(p);
    const auto t = static_cast<std::int64_t>(oracle::uniform(rng, 1, q - 1));
    const auto ctx = buildContext(p);
    // Independent direct sums.
    std::complex<double> full = 0, coprime = 0;
    for (u64 n = 1; n < p; ++n) {
      const auto w = e(static_cast<double>((static_cast<u64>(t) * n) % q) / static_cast<double>(q));
      full += w;
      if (std::gcd(n, p - 1) == 1) coprime += w;
    }
    const auto fs = kernelFullSum(q, t, p);
    const auto cs = kernelCoprimeSum(ctx, q, t);
    CHECK(std::abs(*fs.alternate - full) < 1e-8);
    CHECK(std::abs(fs.value - full) < 1e-8);
    CHECK(std::abs(cs.value - coprime) < 1e-8);
  }
}

TEST_CASE("gauss mixed sum") {
  const auto c7 = buildContext(7);
  std::complex<double> direct = 0;
  u64 power = 1;
  for (u64 s = 1; s <= 6; ++s) {
    power = power * 3 % 7;
    direct += std::conj(e(static_cast<double>(s) / 11.0)) * e(static_cast<double>(power) / 7.0);
  }
  const auto g = gaussMixedSum(c7, 11, 1, 1);
  CHECK(std::abs(g.value - direct) < 1e-12);
  CHECK(g.boundName == "L333.27");
  CHECK(g.termCount == 6);

  const auto big = gaussMixedSum(buildContext(101), 103, 7, 2);
  CHECK(big.aprioriBound == doctest::Approx(2.0 * std::sqrt(103.0) * std::log(103.0)));

  // b = 0 collapses psi to 1: the conjugate of the full kernel sum.
  const auto zero = gaussMixedSum(c7, 11, 1, 0);
  CHECK(zero.degenerate);
  CHECK(std::abs(zero.value - std::conj(kernelFullSum(11, 1, 7).value)) < 1e-12);
}

TEST_CASE("equivalence gap") {
  CHECK(std::abs(equivalenceGap(buildContext(7), 1).value) == 0.0);
  const auto c31 = buildContext(31);
  const auto gap = equivalenceGap(c31, 30);
  CHECK(gap.termCount == 8);
  CHECK(std::abs(gap.value - (coprimeFilteredSum(c31, 30).value - coprimeFilteredSum(c31, 1).value)) < 1e-12);
  const auto big = equivalenceGap(buildContext(10007), 9);
  CHECK(big.aprioriBound == doctest::Approx(16.0 * std::sqrt(10007.0) * log3(10007.0)));
  CHECK(big.withinBound());
}

TEST_CASE("coprime index set maps to a coset of the primitive roots") {
  for (u64 p : sievePrimes(1000)) {
    if (p == 2) continue;
    const auto ctx = buildContext(p);
    const auto roots = enumeratePrimitiveRoots(ctx);
    for (u64 b = 1; b < p; b += 1 + p / 50) {
      std::vector<u64> image, coset;
      u64 power = 1;
      for (u64 n = 1; n < p; ++n) {
        power = power * ctx.tau() % p;
        if (std::gcd(n, p - 1) == 1) image.push_back(b * power % p);
      }
      for (u64 g : roots) coset.push_back(b * g % p);
      std::sort(image.begin(), image.end());
      std::sort(coset.begin(), coset.end());
      CHECK(image == coset);
      CHECK(image.size() == roots.size());
    }
  }
}

TEST_CASE("conjugate symmetry of the coprime sum") {
  for (u64 p : sievePrimes(1000)) {
    if (p == 2) continue;
    const auto ctx = buildContext(p);
    const RootTable roots(p);
    for (u64 b = 1; b < p; ++b) {
      const auto a = coprimeFilteredSum(ctx, b, &roots).value;
      const auto c = coprimeFilteredSum(ctx, p - b, &roots).value;
      if (std::abs(a - std::conj(c)) > 1e-9) FAIL("symmetry broken at p=" << p << " b=" << b);
    }
  }
}
