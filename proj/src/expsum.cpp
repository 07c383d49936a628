#include "primroot/expsum.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "primroot/errors.hpp"

namespace primroot {

namespace {

constexpr double kPi = std::numbers::pi;

double logd(u64 n) { return std::log(static_cast<double>(n)); }

void requireResidue(u64 p, u64 b, const char* op) {
  if (b == 0 || b >= p) {
    throw InputError(std::string(op) + ": b must lie in [1, p-1], got " + std::to_string(b));
  }
}

void requireKernelPrime(u64 q, u64 p, const char* op) {
  if (q <= p || !isPrime(q)) {
    throw InputError(std::string(op) + ": auxiliary modulus must be a prime q > p");
  }
}

Complex root(std::int64_t k, u64 modulus, const RootTable* table) {
  return table != nullptr ? (*table)(k) : unitRoot(k, modulus);
}

// sum_{m=1}^{count} z^m with z = e(step/q); z = 1 only when step = 0 mod q.
Complex geometricBlock(std::int64_t step, u64 q, u64 count) {
  const auto qi = static_cast<std::int64_t>(q);
  if (step % qi == 0) return {static_cast<double>(count), 0.0};
  const Complex z = unitRoot(step, q);
  const Complex zEnd = unitRoot(static_cast<std::int64_t>((static_cast<__int128>(step) * (count + 1)) % qi), q);
  return (z - zEnd) / (Complex(1.0, 0.0) - z);
}

SumValue coprimeSumImpl(const PrimeContext& ctx, u64 b, const RootTable* roots) {
  const u64 p = ctx.p();
  CompensatedSum acc;
  u64 power = 1;
  u64 terms = 0;
  for (u64 n = 1; n < p; ++n) {
    power = mulMod(power, ctx.tau(), p);
    if (std::gcd(n, p - 1) != 1) continue;
    acc.add(root(static_cast<std::int64_t>(mulMod(b, power, p)), p, roots));
    ++terms;
  }
  SumValue s;
  s.value = acc.value();
  s.compensation = acc.compensation();
  s.termCount = terms;
  return s;
}

}  // namespace

u64 circularDistance(std::int64_t t, u64 q) {
  const auto qi = static_cast<std::int64_t>(q);
  std::int64_t r = t % qi;
  if (r < 0) r += qi;
  return static_cast<u64>(std::min(r, qi - r));
}

SumValue completeGeometricSum(u64 p, u64 b) {
  if (!isPrime(p)) throw InputError("completeGeometricSum: p must be prime");
  SumValue s;
  s.termCount = p - 1;
  if (b % p == 0) {
    s.value = {static_cast<double>(p - 1), 0.0};
    s.degenerate = true;
    return s;
  }
  CompensatedSum acc;
  for (u64 v = 1; v < p; ++v) acc.add(unitRoot(static_cast<std::int64_t>(mulMod(b % p, v, p)), p));
  s.value = acc.value();
  s.compensation = acc.compensation();
  s.alternate = Complex(-1.0, 0.0);
  return s;
}

SumValue incompletePowerSum(const PrimeContext& ctx, u64 b, u64 x) {
  const u64 p = ctx.p();
  requireResidue(p, b, "incompletePowerSum");
  if (x == 0 || x >= p) throw InputError("incompletePowerSum: x must lie in [1, p-1]");
  CompensatedSum acc;
  u64 power = 1;
  for (u64 n = 1; n <= x; ++n) {
    power = mulMod(power, ctx.tau(), p);
    acc.add(unitRoot(static_cast<std::int64_t>(mulMod(b, power, p)), p));
  }
  SumValue s;
  s.value = acc.value();
  s.compensation = acc.compensation();
  s.termCount = x;
  const double lp = logd(p);
  s.aprioriBound = std::sqrt(static_cast<double>(p)) * lp * lp;
  s.statementBound = std::sqrt(static_cast<double>(p)) * lp;
  s.boundName = "Thm3.2";
  return s;
}

SumValue kernelExpansion(const PrimeContext& ctx, u64 b, u64 x, u64 q) {
  const u64 p = ctx.p();
  requireResidue(p, b, "kernelExpansion");
  requireKernelPrime(q, p, "kernelExpansion");
  if (x == 0 || x >= p) throw InputError("kernelExpansion: x must lie in [1, p-1]");

  std::vector<Complex> f(p);
  u64 power = 1;
  for (u64 s = 1; s < p; ++s) {
    power = mulMod(power, ctx.tau(), p);
    f[s] = unitRoot(static_cast<std::int64_t>(mulMod(b, power, p)), p);
  }
  const RootTable omega(q);
  CompensatedSum acc;
  for (u64 t = 0; t < q; ++t) {
    CompensatedSum transform;
    for (u64 s = 1; s < p; ++s) transform.add(omega(-static_cast<std::int64_t>((t * s) % q)) * f[s]);
    const Complex block = geometricBlock(static_cast<std::int64_t>(t), q, x);
    acc.add(transform.value() * block / static_cast<double>(q));
  }
  SumValue s;
  s.value = acc.value();
  s.compensation = acc.compensation();
  s.termCount = q * (p - 1);
  return s;
}

SumValue coprimeFilteredSum(const PrimeContext& ctx, u64 b, const RootTable* roots) {
  requireResidue(ctx.p(), b, "coprimeFilteredSum");
  SumValue s = coprimeSumImpl(ctx, b, roots);
  const double lp = logd(ctx.p());
  s.aprioriBound = std::sqrt(static_cast<double>(ctx.p())) * lp * lp * lp;
  s.boundName = "Thm3.4";
  return s;
}

SumValue kernelFullSum(u64 q, std::int64_t t, u64 p) {
  requireKernelPrime(q, p, "kernelFullSum");
  if (!isPrime(p)) throw InputError("kernelFullSum: p must be prime");
  SumValue s;
  s.termCount = p - 1;
  const u64 dist = circularDistance(t, q);
  if (dist == 0) {
    s.value = {static_cast<double>(p - 1), 0.0};
    s.degenerate = true;
    return s;
  }
  CompensatedSum acc;
  const auto qi = static_cast<std::int64_t>(q);
  for (u64 n = 1; n < p; ++n) acc.add(unitRoot((t % qi) * static_cast<std::int64_t>(n), q));
  s.value = acc.value();
  s.compensation = acc.compensation();
  // (w^t - w^{tp}) / (1 - w^t)
  const Complex wt = unitRoot(t, q);
  const Complex wtp = unitRoot((t % qi) * static_cast<std::int64_t>(p % q), q);
  s.alternate = (wt - wtp) / (Complex(1.0, 0.0) - wt);
  s.aprioriBound = 2.0 * static_cast<double>(q) / (kPi * static_cast<double>(dist));
  s.boundName = "L333.20";
  return s;
}

SumValue kernelCoprimeSum(const PrimeContext& ctx, u64 q, std::int64_t t) {
  const u64 p = ctx.p();
  requireKernelPrime(q, p, "kernelCoprimeSum");
  const auto qi = static_cast<std::int64_t>(q);
  const std::int64_t tr = ((t % qi) + qi) % qi;

  // sum_{d | p-1} mu(d) sum_{m <= (p-1)/d} w^{t d m}
  CompensatedSum moebiusForm;
  for (u64 d : divisors(ctx.pm1Factors())) {
    const int mu = moebius(d);
    if (mu == 0) continue;
    const Complex block = geometricBlock(static_cast<std::int64_t>((static_cast<__int128>(tr) * d) % qi), q, (p - 1) / d);
    moebiusForm.add(static_cast<double>(mu) * block);
  }

  CompensatedSum direct;
  u64 terms = 0;
  for (u64 n = 1; n < p; ++n) {
    if (std::gcd(n, p - 1) != 1) continue;
    direct.add(unitRoot(static_cast<std::int64_t>((static_cast<__int128>(tr) * n) % qi), q));
    ++terms;
  }

  SumValue s;
  s.value = moebiusForm.value();
  s.compensation = moebiusForm.compensation();
  s.alternate = direct.value();
  s.termCount = terms;
  const u64 dist = circularDistance(t, q);
  if (dist == 0) {
    s.degenerate = true;
    return s;
  }
  s.aprioriBound = 4.0 * static_cast<double>(q) * std::log(logd(p)) / (kPi * static_cast<double>(dist));
  s.boundName = "L333.24";
  return s;
}

SumValue gaussMixedSum(const PrimeContext& ctx, u64 q, std::int64_t t, u64 b) {
  const u64 p = ctx.p();
  requireKernelPrime(q, p, "gaussMixedSum");
  if (b >= p) throw InputError("gaussMixedSum: b must lie in [0, p-1]");
  const auto qi = static_cast<std::int64_t>(q);
  const std::int64_t tr = ((t % qi) + qi) % qi;
  CompensatedSum acc;
  u64 power = 1;
  for (u64 s = 1; s < p; ++s) {
    power = mulMod(power, ctx.tau(), p);
    const Complex chi = unitRoot(-static_cast<std::int64_t>((static_cast<__int128>(tr) * s) % qi), q);
    const Complex psi = unitRoot(static_cast<std::int64_t>(mulMod(b, power, p)), p);
    acc.add(chi * psi);
  }
  SumValue out;
  out.value = acc.value();
  out.compensation = acc.compensation();
  out.termCount = p - 1;
  out.aprioriBound = 2.0 * std::sqrt(static_cast<double>(q)) * logd(q);
  out.boundName = "L333.27";
  out.degenerate = b == 0;
  return out;
}

SumValue equivalenceGap(const PrimeContext& ctx, u64 b, const RootTable* roots) {
  requireResidue(ctx.p(), b, "equivalenceGap");
  const SumValue sb = coprimeSumImpl(ctx, b, roots);
  const SumValue s1 = coprimeSumImpl(ctx, 1, roots);
  SumValue s;
  s.value = sb.value - s1.value;
  s.compensation = sb.compensation + s1.compensation;
  s.termCount = sb.termCount;
  const double lp = logd(ctx.p());
  s.aprioriBound = 16.0 * std::sqrt(static_cast<double>(ctx.p())) * lp * lp * lp;
  s.boundName = "L333.22";
  return s;
}

}  // namespace primroot
