#pragma once

#include <mpfr.h>

#include <cmath>

#include "zeno/error.hpp"

namespace zeno::hp {

/// Decimal precision governing every arbitrary-precision operation.
///
/// `digits` is the number of significant decimal figures the caller wants;
/// `guard_digits` are carried on top of that inside every kernel. The binary
/// mantissa is ceil((digits + guard) * log2(10)) + 32 bits.
///
/// Digits below 30 are accepted so that deliberately under-resolved runs can
/// be demonstrated to fail; accuracy guarantees are only made from 30 up.
class PrecisionContext {
 public:
  static constexpr int kDefaultGuardDigits = 20;
  static constexpr int kMinGuaranteedDigits = 30;

  explicit PrecisionContext(int digits, int guard_digits = kDefaultGuardDigits)
      : digits_(digits), guard_digits_(guard_digits) {
    if (digits < 1) throw ValidationError("precision digits must be positive");
    if (guard_digits < 0) throw ValidationError("guard digits must be non-negative");
  }

  int digits() const noexcept { return digits_; }
  int guard_digits() const noexcept { return guard_digits_; }

  mpfr_prec_t bits() const noexcept {
    constexpr double kLog2Of10 = 3.32192809488736234787;
    return static_cast<mpfr_prec_t>(std::ceil((digits_ + guard_digits_) * kLog2Of10)) + 32;
  }

  /// Unit roundoff of the working mantissa, as a power of ten exponent.
  double log10_epsilon() const noexcept {
    return -static_cast<double>(bits() - 1) * 0.30102999566398119521;
  }

  PrecisionContext scaled(int factor) const { return PrecisionContext(digits_ * factor, guard_digits_); }

  bool guarantees_accuracy() const noexcept { return digits_ >= kMinGuaranteedDigits; }

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  int digits_;
  int guard_digits_;
};

}  // namespace zeno::hp
