#pragma once

// Two representations of the primitive-root indicator Psi(u): the
// character-sum form over divisors of p-1, and the divisor-free form built
// from additive characters (collapsed exactly, or summed literally).

#include <cstdint>
#include <optional>

#include "primroot/numeric.hpp"
#include "primroot/primctx.hpp"

namespace primroot {

enum class Representation { DivisorCharacter, DivisorFreeCollapsed, DivisorFreeLiteral };

const char* toString(Representation r);

struct PsiEvaluation {
  u64 p = 0;
  u64 u = 0;
  int value = 0;
  Representation representation = Representation::DivisorCharacter;
  double residualError = 0.0;
  /// Unrounded complex value; only the literal path fills this.
  std::optional<Complex> raw;
};

/// Index table plus e^{2 pi i k/p} table, built once per prime and shared
/// read-only across whole-field sweeps.
class FieldCache {
 public:
  explicit FieldCache(const PrimeContext& ctx) : index_(ctx), roots_(ctx.p()) {}

  const IndexTable& index() const { return index_; }
  const RootTable& roots() const { return roots_; }

 private:
  IndexTable index_;
  RootTable roots_;
};

/// Largest p accepted by the literal evaluator.
inline constexpr u64 kLiteralModeCap = 1000;

/// Snapping tolerance for the literal evaluator.
inline constexpr double kSnapTolerance = 1e-6;

/// c_d(m) = mu(d/g) phi(d) / phi(d/g), g = gcd(m, d).
std::int64_t ramanujanSum(u64 d, u64 m);

// With an index table the discrete log is a lookup; without one it is
// computed by baby-step giant-step (character form) or the collapsed form
// walks tau^n directly.
PsiEvaluation psiDivisorCharacter(const PrimeContext& ctx, u64 u, const IndexTable* index = nullptr);
PsiEvaluation psiDivisorFreeCollapsed(const PrimeContext& ctx, u64 u, const IndexTable* index = nullptr);
PsiEvaluation psiDivisorFreeLiteral(const PrimeContext& ctx, u64 u, const FieldCache* cache = nullptr);

}  // namespace primroot
