#pragma once

// Exponential sums over powers of a primitive root, finite summation
// kernels over an auxiliary prime q > p, and mixed Gauss-type sums. Every
// result carries the a-priori bound it is checked against.

#include <optional>
#include <string>

#include "primroot/numeric.hpp"
#include "primroot/primctx.hpp"

namespace primroot {

struct SumValue {
  Complex value;
  u64 termCount = 0;
  double aprioriBound = 0.0;
  std::string boundName;
  bool degenerate = false;
  /// Accumulated compensation from the summation, a rounding health metric.
  double compensation = 0.0;
  /// Second evaluation route (closed form, Moebius form, ...), when one exists.
  std::optional<Complex> alternate;
  /// Sharper bound quoted alongside the proof bound, reported only.
  std::optional<double> statementBound;

  double real() const { return value.real(); }
  double imag() const { return value.imag(); }
  double magnitude() const { return std::abs(value); }
  bool hasBound() const { return !boundName.empty(); }
  bool withinBound() const { return !hasBound() || magnitude() <= aprioriBound; }
  double margin() const { return aprioriBound - magnitude(); }
  /// |value - alternate|, or 0 when no second route exists.
  double routeGap() const { return alternate ? std::abs(value - *alternate) : 0.0; }
};

/// Distance from t to the nearest multiple of q; the kernel bounds use this.
u64 circularDistance(std::int64_t t, u64 q);

/// Sum of e(bv/p) over v in [1, p-1]; -1 unless b = 0 (mod p).
SumValue completeGeometricSum(u64 p, u64 b);

/// Sum over n in [1, x] of e(b tau^n / p).
SumValue incompletePowerSum(const PrimeContext& ctx, u64 b, u64 x);

/// The same sum rebuilt through the finite summation kernel with auxiliary
/// prime q: (1/q) sum_t (sum_s w^{-ts} f(s)) (sum_{n<=x} w^{tn}).
SumValue kernelExpansion(const PrimeContext& ctx, u64 b, u64 x, u64 q);

/// Sum over n in [1, p-1], gcd(n, p-1) = 1, of e(b tau^n / p).
SumValue coprimeFilteredSum(const PrimeContext& ctx, u64 b, const RootTable* roots = nullptr);

/// Sum over n in [1, p-1] of w^{tn}, w = e(1/q); alternate is the
/// geometric closed form.
SumValue kernelFullSum(u64 q, std::int64_t t, u64 p);

/// Sum over n coprime to p-1 of w^{tn}, evaluated through the Moebius
/// expansion over d | p-1; alternate is the direct sum.
SumValue kernelCoprimeSum(const PrimeContext& ctx, u64 q, std::int64_t t);

/// Sum over s in [1, p-1] of w^{-ts} e(b tau^s / p). Bound is reported,
/// not enforced.
SumValue gaussMixedSum(const PrimeContext& ctx, u64 q, std::int64_t t, u64 b);

/// S_b - S_1 for the coprime-filtered sums.
SumValue equivalenceGap(const PrimeContext& ctx, u64 b, const RootTable* roots = nullptr);

}  // namespace primroot
