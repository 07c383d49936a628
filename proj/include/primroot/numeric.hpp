#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace primroot {

using Complex = std::complex<double>;

/// Neumaier-compensated summation of complex terms. The running
/// compensation doubles as an estimate of accumulated rounding error.
class CompensatedSum {
 public:
  void add(Complex term) {
    addPart(re_, reComp_, term.real());
    addPart(im_, imComp_, term.imag());
  }

  Complex value() const { return {re_ + reComp_, im_ + imComp_}; }
  double compensation() const { return std::hypot(reComp_, imComp_); }

 private:
  static void addPart(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double re_ = 0.0, reComp_ = 0.0;
  double im_ = 0.0, imComp_ = 0.0;
};

/// e^{2 pi i k / modulus}, reducing k mod modulus before forming the angle.
inline Complex unitRoot(std::int64_t k, std::uint64_t modulus) {
  const auto m = static_cast<std::int64_t>(modulus);
  std::int64_t r = k % m;
  if (r < 0) r += m;
  const double angle = 2.0 * std::numbers::pi * (static_cast<double>(r) / static_cast<double>(modulus));
  return std::polar(1.0, angle);
}

/// Cached powers of e^{2 pi i / modulus} for whole-field sweeps.
class RootTable {
 public:
  explicit RootTable(std::uint64_t modulus) : modulus_(modulus), roots_(modulus) {
    for (std::uint64_t k = 0; k < modulus; ++k) roots_[k] = unitRoot(static_cast<std::int64_t>(k), modulus);
  }

  Complex operator()(std::int64_t k) const {
    const auto m = static_cast<std::int64_t>(modulus_);
    std::int64_t r = k % m;
    if (r < 0) r += m;
    return roots_[static_cast<std::size_t>(r)];
  }
  std::uint64_t modulus() const { return modulus_; }

 private:
  std::uint64_t modulus_;
  std::vector<Complex> roots_;
};

}  // namespace primroot
