#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "zeno/hp/context.hpp"

namespace zeno::hp {

/// Arbitrary-precision real backed by an MPFR value that owns its mantissa.
///
/// Every value carries its own precision. Binary operators produce a result
/// at the larger of the operand precisions; copy-assignment adopts the
/// precision of the source. Functions that take a PrecisionContext round
/// their result to that context.
class HReal {
 public:
  HReal();
  explicit HReal(const PrecisionContext& ctx);
  HReal(long value, const PrecisionContext& ctx);
  HReal(double value, const PrecisionContext& ctx);

  /// Decimal literal such as "1.1", "-4e-300", "+2.5E+10". Throws ValidationError.
  static HReal parse(std::string_view text, const PrecisionContext& ctx);
  static HReal pi(const PrecisionContext& ctx);
  /// 10^exponent, rounded once.
  static HReal pow10(long exponent, const PrecisionContext& ctx);

  HReal(const HReal& other);
  HReal(HReal&& other) noexcept;
  HReal& operator=(const HReal& other);
  HReal& operator=(HReal&& other) noexcept;
  ~HReal();

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }
  HReal rounded(const PrecisionContext& ctx) const;

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; meaningless for zero.
  long binary_exponent() const noexcept { return mpfr_get_exp(value_); }

  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  /// log10|x|, usable far outside the double exponent range. -inf for zero.
  double log10_abs() const;

  /// "+d.ddd…e+XX" with exactly `significant_digits` digits.
  std::string to_scientific(int significant_digits) const;

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  HReal operator-() const;
  HReal& operator+=(const HReal& rhs);
  HReal& operator-=(const HReal& rhs);
  HReal& operator*=(const HReal& rhs);
  HReal& operator/=(const HReal& rhs);

  friend HReal operator+(const HReal& a, const HReal& b);
  friend HReal operator-(const HReal& a, const HReal& b);
  friend HReal operator*(const HReal& a, const HReal& b);
  friend HReal operator/(const HReal& a, const HReal& b);
  friend HReal operator*(const HReal& a, long b);
  friend HReal operator/(const HReal& a, long b);

  friend bool operator==(const HReal& a, const HReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const HReal& a, const HReal& b);
  friend bool operator==(const HReal& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const HReal& a, long b);

 private:
  static mpfr_prec_t joint_precision(const HReal& a, const HReal& b) {
    return a.precision() > b.precision() ? a.precision() : b.precision();
  }
  explicit HReal(mpfr_prec_t bits);

  mpfr_t value_;
};

HReal abs(const HReal& x);
HReal sqrt(const HReal& x, const PrecisionContext& ctx);
HReal exp(const HReal& x, const PrecisionContext& ctx);
HReal log(const HReal& x, const PrecisionContext& ctx);
HReal cos(const HReal& x, const PrecisionContext& ctx);
HReal sin(const HReal& x, const PrecisionContext& ctx);
HReal hypot(const HReal& x, const HReal& y, const PrecisionContext& ctx);
HReal pow(const HReal& x, unsigned long n, const PrecisionContext& ctx);
HReal max(const HReal& a, const HReal& b);

/// |a - b| / max(|a|, |b|), or 0 when both vanish.
HReal relative_difference(const HReal& a, const HReal& b);

}  // namespace zeno::hp
