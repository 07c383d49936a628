#include "primroot/charfun.hpp"

#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "primroot/errors.hpp"

namespace primroot {

namespace {

using i128 = __int128;

struct Rational {
  i128 num = 0;
  i128 den = 1;

  void reduce() {
    i128 a = num < 0 ? -num : num;
    i128 b = den;
    while (b != 0) {
      const i128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      num /= a;
      den /= a;
    }
  }

  Rational& operator+=(const Rational& o) {
    num = num * o.den + o.num * den;
    den *= o.den;
    reduce();
    return *this;
  }
};

void requireNonzero(const PrimeContext& ctx, u64 u, const char* op) {
  if (u % ctx.p() == 0) {
    throw InputError(std::string(op) + ": Psi is defined on nonzero residues only");
  }
  if (u >= ctx.p()) {
    throw InputError(std::string(op) + ": residue must lie in [1, p-1], got " + std::to_string(u));
  }
}

u64 indexOf(const PrimeContext& ctx, u64 u, const IndexTable* index) {
  return index != nullptr ? index->log(u) : discreteLog(ctx, u);
}

}  // namespace

const char* toString(Representation r) {
  switch (r) {
    case Representation::DivisorCharacter: return "DivisorCharacter";
    case Representation::DivisorFreeCollapsed: return "DivisorFreeCollapsed";
    case Representation::DivisorFreeLiteral: return "DivisorFreeLiteral";
  }
  return "?";
}

std::int64_t ramanujanSum(u64 d, u64 m) {
  if (d == 0) throw InputError("ramanujanSum: d must be positive");
  const u64 g = std::gcd(m, d);
  const u64 q = d / g;
  return static_cast<std::int64_t>(moebius(q)) * static_cast<std::int64_t>(totient(d) / totient(q));
}

PsiEvaluation psiDivisorCharacter(const PrimeContext& ctx, u64 u, const IndexTable* index) {
  requireNonzero(ctx, u, "psiDivisorCharacter");
  const u64 m = indexOf(ctx, u, index);

  // sum over d | p-1 of mu(d)/phi(d) * sum_{ord chi = d} chi(tau^m);
  // the inner character sum is the Ramanujan sum c_d(m).
  Rational sum;
  for (u64 d : divisors(ctx.pm1Factors())) {
    const Factorization fd = factorize(d);
    const int mu = moebius(fd);
    if (mu == 0) continue;
    sum += Rational{static_cast<i128>(mu) * ramanujanSum(d, m), static_cast<i128>(totient(fd))};
  }
  Rational psi{sum.num * static_cast<i128>(ctx.phiPm1()), sum.den * static_cast<i128>(ctx.p() - 1)};
  psi.reduce();
  if (psi.den != 1 || (psi.num != 0 && psi.num != 1)) {
    throw InternalError("psiDivisorCharacter: non-indicator value at p=" + std::to_string(ctx.p()));
  }

  PsiEvaluation e;
  e.p = ctx.p();
  e.u = u;
  e.value = static_cast<int>(psi.num);
  e.representation = Representation::DivisorCharacter;
  return e;
}

PsiEvaluation psiDivisorFreeCollapsed(const PrimeContext& ctx, u64 u, const IndexTable* index) {
  requireNonzero(ctx, u, "psiDivisorFreeCollapsed");
  const u64 p = ctx.p();
  // Inner sum over m is p when tau^n = u and 0 otherwise, so Psi(u) counts
  // exponents n coprime to p-1 with tau^n = u.
  int count = 0;
  if (index != nullptr) {
    // tau^n = u has the single solution n = log u in [0, p-2]; n = 0 maps to p-1.
    u64 n = index->log(u);
    if (n == 0) n = p - 1;
    count = std::gcd(n, p - 1) == 1 ? 1 : 0;
  } else {
    u64 power = 1;
    for (u64 n = 1; n < p; ++n) {
      power = mulMod(power, ctx.tau(), p);
      if (power == u && std::gcd(n, p - 1) == 1) ++count;
    }
  }
  if (count > 1) throw InternalError("psiDivisorFreeCollapsed: multiple solutions");

  PsiEvaluation e;
  e.p = p;
  e.u = u;
  e.value = count;
  e.representation = Representation::DivisorFreeCollapsed;
  return e;
}

PsiEvaluation psiDivisorFreeLiteral(const PrimeContext& ctx, u64 u, const FieldCache* cache) {
  requireNonzero(ctx, u, "psiDivisorFreeLiteral");
  const u64 p = ctx.p();
  if (p > kLiteralModeCap) {
    throw InputError("psiDivisorFreeLiteral: p=" + std::to_string(p) + " exceeds the literal-mode cap of " +
                     std::to_string(kLiteralModeCap) + "; use the collapsed representation");
  }
  std::optional<RootTable> local;
  if (cache == nullptr) local.emplace(p);
  const RootTable& roots = cache == nullptr ? *local : cache->roots();

  CompensatedSum total;
  u64 power = 1;
  const auto pi = static_cast<std::int64_t>(p);
  for (u64 n = 1; n < p; ++n) {
    power = mulMod(power, ctx.tau(), p);
    if (std::gcd(n, p - 1) != 1) continue;
    const std::int64_t diff = static_cast<std::int64_t>(power) - static_cast<std::int64_t>(u);
    for (std::int64_t m = 0; m < pi; ++m) total.add(roots(diff * m) / static_cast<double>(p));
  }

  const Complex raw = total.value();
  PsiEvaluation e;
  e.p = p;
  e.u = u;
  e.value = static_cast<int>(std::lround(raw.real()));
  e.representation = Representation::DivisorFreeLiteral;
  e.residualError = std::abs(raw - Complex(e.value, 0.0));
  e.raw = raw;
  if (e.residualError >= kSnapTolerance) {
    throw InternalError("psiDivisorFreeLiteral: residual " + std::to_string(e.residualError) +
                        " exceeds snapping tolerance at p=" + std::to_string(p));
  }
  return e;
}

}  // namespace primroot
