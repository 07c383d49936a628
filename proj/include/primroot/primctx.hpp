#pragma once

// Per-prime context and primitive-root machinery.

#include <cstdint>
#include <optional>
#include <vector>

#include "primroot/arith.hpp"

namespace primroot {

/// An odd prime p with the factorization of p-1, phi(p-1), and the least
/// primitive root tau used as the fixed reference generator.
class PrimeContext {
 public:
  u64 p() const { return p_; }
  const Factorization& pm1Factors() const { return pm1Factors_; }
  u64 phiPm1() const { return phiPm1_; }
  u64 tau() const { return tau_; }

  friend PrimeContext buildContext(u64 p);

 private:
  PrimeContext(u64 p, Factorization f, u64 phi, u64 tau)
      : p_(p), pm1Factors_(std::move(f)), phiPm1_(phi), tau_(tau) {}

  u64 p_;
  Factorization pm1Factors_;
  u64 phiPm1_;
  u64 tau_;
};

/// Throws InputError unless p is an odd prime.
PrimeContext buildContext(u64 p);

/// Least k >= 1 with u^k = 1 (mod p), found by stripping prime factors
/// from p-1 while the power stays 1.
u64 multiplicativeOrder(const PrimeContext& ctx, u64 u);

/// u^((p-1)/q) != 1 for every prime q | p-1.
bool isPrimitiveRoot(const PrimeContext& ctx, u64 u);

u64 leastPrimitiveRoot(u64 p);
u64 leastPrimePrimitiveRoot(u64 p);

/// All phi(p-1) primitive roots, ascending.
std::vector<u64> enumeratePrimitiveRoots(const PrimeContext& ctx);

/// m in [0, p-2] with tau^m = u (mod p), by baby-step giant-step.
u64 discreteLog(const PrimeContext& ctx, u64 u);

/// Full index table for whole-field sweeps: O(p) memory, O(1) lookup.
class IndexTable {
 public:
  explicit IndexTable(const PrimeContext& ctx);

  /// Discrete log of u relative to tau, in [0, p-2].
  u64 log(u64 u) const;
  /// tau^n mod p for n in [0, p-2].
  u64 power(u64 n) const { return powers_[n % powers_.size()]; }
  u64 p() const { return p_; }

 private:
  u64 p_;
  std::vector<std::uint32_t> logs_;
  std::vector<std::uint32_t> powers_;
};

enum class Family : unsigned {
  Fermat = 1u << 0,
  Germain = 1u << 1,
  HighlyComposite = 1u << 2,
};

struct FamilyFlags {
  unsigned bits = 0;

  bool has(Family f) const { return (bits & static_cast<unsigned>(f)) != 0; }
  void set(Family f) { bits |= static_cast<unsigned>(f); }
  friend bool operator==(const FamilyFlags&, const FamilyFlags&) = default;
};

/// Family membership from the factorization of p-1:
///   Fermat: p-1 is a power of two.
///   Germain: p-1 = 2^a * q with a >= 1 and q prime.
///   HighlyComposite: the primes dividing p-1 are exactly the first omega(p-1) primes.
FamilyFlags classifyFamilies(const Factorization& pm1);

struct ScanRecord {
  u64 p = 0;
  u64 g = 0;
  u64 gStar = 0;
  double ratio = 0.0;
  unsigned omegaPm1 = 0;
  double gap = 0.0;
  FamilyFlags families;
  /// g / (log p)^(1+epsilon), the normalized least-root position.
  double rootRatio = 0.0;
};

ScanRecord scanPrime(u64 p, double epsilon);

/// One record per prime in [pMin, pMax], ascending. Work is split over
/// `workers` threads; output does not depend on the worker count.
std::vector<ScanRecord> scanRange(u64 pMin, u64 pMax, double epsilon, unsigned workers = 1);

}  // namespace primroot
