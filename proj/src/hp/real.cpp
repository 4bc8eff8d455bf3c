#include "zeno/hp/real.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>

namespace zeno::hp {

namespace {
constexpr mpfr_prec_t kPlaceholderBits = 64;
}  // namespace

HReal::HReal() : HReal(kPlaceholderBits) {}

HReal::HReal(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

HReal::HReal(const PrecisionContext& ctx) : HReal(ctx.bits()) {}

HReal::HReal(long value, const PrecisionContext& ctx) : HReal(ctx.bits()) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

HReal::HReal(double value, const PrecisionContext& ctx) : HReal(ctx.bits()) {
  mpfr_set_d(value_, value, MPFR_RNDN);
}

HReal HReal::parse(std::string_view text, const PrecisionContext& ctx) {
  std::string buffer(text);
  // mpfr_strtofr accepts "inf"/"nan" and hex forms; restrict to decimal literals.
  bool seen_digit = false;
  for (char c : buffer) {
    if (c >= '0' && c <= '9') {
      seen_digit = true;
    } else if (c != '+' && c != '-' && c != '.' && c != 'e' && c != 'E') {
      throw ValidationError("not a decimal literal: '" + buffer + "'");
    }
  }
  if (!seen_digit) throw ValidationError("not a decimal literal: '" + buffer + "'");
  HReal result(ctx);
  char* end = nullptr;
  mpfr_strtofr(result.value_, buffer.c_str(), &end, 10, MPFR_RNDN);
  if (end == buffer.c_str() || *end != '\0') {
    throw ValidationError("not a decimal literal: '" + buffer + "'");
  }
  return result;
}

HReal HReal::pi(const PrecisionContext& ctx) {
  HReal result(ctx);
  mpfr_const_pi(result.value_, MPFR_RNDN);
  return result;
}

HReal HReal::pow10(long exponent, const PrecisionContext& ctx) {
  HReal result(ctx);
  mpfr_ui_pow_ui(result.value_, 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent), MPFR_RNDN);
  if (exponent < 0) mpfr_ui_div(result.value_, 1, result.value_, MPFR_RNDN);
  return result;
}

HReal::HReal(const HReal& other) : HReal(other.precision()) {
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

HReal::HReal(HReal&& other) noexcept : HReal(MPFR_PREC_MIN) {
  mpfr_swap(value_, other.value_);
}

HReal& HReal::operator=(const HReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

HReal& HReal::operator=(HReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

HReal::~HReal() { mpfr_clear(value_); }

HReal HReal::rounded(const PrecisionContext& ctx) const {
  HReal result(ctx);
  mpfr_set(result.value_, value_, MPFR_RNDN);
  return result;
}

double HReal::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long exponent = 0;
  const double mantissa = mpfr_get_d_2exp(&exponent, value_, MPFR_RNDN);
  return std::log10(std::fabs(mantissa)) + static_cast<double>(exponent) * 0.30102999566398119521;
}

std::string HReal::to_scientific(int significant_digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() > 0 ? "+inf" : "-inf";
  if (is_zero()) {
    return "+0" + (significant_digits > 1 ? "." + std::string(static_cast<std::size_t>(significant_digits - 1), '0') : "") + "e+00";
  }
  mpfr_exp_t exponent = 0;
  char* raw = mpfr_get_str(nullptr, &exponent, 10, static_cast<size_t>(significant_digits), value_, MPFR_RNDN);
  std::string digits(raw);
  mpfr_free_str(raw);

  std::string out;
  if (!digits.empty() && digits.front() == '-') {
    out.push_back('-');
    digits.erase(digits.begin());
  } else {
    out.push_back('+');
  }
  const long decimal_exponent = static_cast<long>(exponent) - 1;
  out.push_back(digits.front());
  if (digits.size() > 1) {
    out.push_back('.');
    out.append(digits, 1, std::string::npos);
  }
  char exp_buffer[32];
  std::snprintf(exp_buffer, sizeof exp_buffer, "e%c%02ld", decimal_exponent < 0 ? '-' : '+',
                decimal_exponent < 0 ? -decimal_exponent : decimal_exponent);
  out.append(exp_buffer);
  return out;
}

HReal HReal::operator-() const {
  HReal result(precision());
  mpfr_neg(result.value_, value_, MPFR_RNDN);
  return result;
}

HReal& HReal::operator+=(const HReal& rhs) { return *this = *this + rhs; }
HReal& HReal::operator-=(const HReal& rhs) { return *this = *this - rhs; }
HReal& HReal::operator*=(const HReal& rhs) { return *this = *this * rhs; }
HReal& HReal::operator/=(const HReal& rhs) { return *this = *this / rhs; }

HReal operator+(const HReal& a, const HReal& b) {
  HReal result(HReal::joint_precision(a, b));
  mpfr_add(result.value_, a.value_, b.value_, MPFR_RNDN);
  return result;
}

HReal operator-(const HReal& a, const HReal& b) {
  HReal result(HReal::joint_precision(a, b));
  mpfr_sub(result.value_, a.value_, b.value_, MPFR_RNDN);
  return result;
}

HReal operator*(const HReal& a, const HReal& b) {
  HReal result(HReal::joint_precision(a, b));
  mpfr_mul(result.value_, a.value_, b.value_, MPFR_RNDN);
  return result;
}

HReal operator/(const HReal& a, const HReal& b) {
  HReal result(HReal::joint_precision(a, b));
  mpfr_div(result.value_, a.value_, b.value_, MPFR_RNDN);
  return result;
}

HReal operator*(const HReal& a, long b) {
  HReal result(a.precision());
  mpfr_mul_si(result.value_, a.value_, b, MPFR_RNDN);
  return result;
}

HReal operator/(const HReal& a, long b) {
  HReal result(a.precision());
  mpfr_div_si(result.value_, a.value_, b, MPFR_RNDN);
  return result;
}

std::partial_ordering operator<=>(const HReal& a, const HReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const HReal& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

HReal abs(const HReal& x) {
  HReal result = x;
  mpfr_abs(result.get(), result.get(), MPFR_RNDN);
  return result;
}

HReal sqrt(const HReal& x, const PrecisionContext& ctx) {
  HReal result(ctx);
  mpfr_sqrt(result.get(), x.get(), MPFR_RNDN);
  return result;
}

HReal exp(const HReal& x, const PrecisionContext& ctx) {
  HReal result(ctx);
  mpfr_exp(result.get(), x.get(), MPFR_RNDN);
  return result;
}

HReal log(const HReal& x, const PrecisionContext& ctx) {
  HReal result(ctx);
  mpfr_log(result.get(), x.get(), MPFR_RNDN);
  return result;
}

HReal cos(const HReal& x, const PrecisionContext& ctx) {
  HReal result(ctx);
  mpfr_cos(result.get(), x.get(), MPFR_RNDN);
  return result;
}

HReal sin(const HReal& x, const PrecisionContext& ctx) {
  HReal result(ctx);
  mpfr_sin(result.get(), x.get(), MPFR_RNDN);
  return result;
}

HReal hypot(const HReal& x, const HReal& y, const PrecisionContext& ctx) {
  HReal result(ctx);
  mpfr_hypot(result.get(), x.get(), y.get(), MPFR_RNDN);
  return result;
}

HReal pow(const HReal& x, unsigned long n, const PrecisionContext& ctx) {
  HReal result(ctx);
  mpfr_pow_ui(result.get(), x.get(), n, MPFR_RNDN);
  return result;
}

HReal max(const HReal& a, const HReal& b) { return a < b ? b : a; }

HReal relative_difference(const HReal& a, const HReal& b) {
  HReal scale = max(abs(a), abs(b));
  if (scale.is_zero()) return HReal();
  return abs(a - b) / scale;
}

}  // namespace zeno::hp
