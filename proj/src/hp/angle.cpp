#include "zeno/hp/angle.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>

namespace zeno::hp {

Angle Angle::pi_fraction(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw ValidationError("angle fraction with zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  return Angle(PiFraction{numerator, denominator});
}

Angle Angle::from_radians(HReal radians) { return Angle(std::move(radians)); }

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError("bad angle literal: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Angle Angle::parse(std::string_view text, const PrecisionContext& ctx) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  const auto pi_pos = compact.find("pi");
  if (pi_pos == std::string::npos) return from_radians(HReal::parse(compact, ctx));

  std::string_view head(compact.data(), pi_pos);
  std::string_view tail(compact.data() + pi_pos + 2, compact.size() - pi_pos - 2);
  if (!head.empty() && head.back() == '*') head.remove_suffix(1);
  std::int64_t numerator = 1;
  if (head == "-") {
    numerator = -1;
  } else if (!head.empty() && head != "+") {
    numerator = parse_int(head.front() == '+' ? head.substr(1) : head, text);
  }
  std::int64_t denominator = 1;
  if (!tail.empty()) {
    if (tail.front() != '/') throw ValidationError("bad angle literal: '" + std::string(text) + "'");
    denominator = parse_int(tail.substr(1), text);
  }
  return pi_fraction(numerator, denominator);
}

HReal Angle::radians(const PrecisionContext& ctx) const {
  if (const auto* f = std::get_if<PiFraction>(&value_)) {
    return HReal::pi(ctx) * f->numerator / f->denominator;
  }
  return std::get<HReal>(value_).rounded(ctx);
}

std::pair<HReal, HReal> Angle::cos_sin(const PrecisionContext& ctx) const {
  if (const auto* f = std::get_if<PiFraction>(&value_)) {
    if ((2 * f->numerator) % f->denominator == 0) {
      // Quarter turns: k = 2 num / den mod 4.
      const std::int64_t k = (((2 * f->numerator) / f->denominator) % 4 + 4) % 4;
      static constexpr long kCos[4] = {1, 0, -1, 0};
      static constexpr long kSin[4] = {0, 1, 0, -1};
      return {HReal(kCos[k], ctx), HReal(kSin[k], ctx)};
    }
  }
  const HReal theta = radians(ctx);
  HReal c(ctx), s(ctx);
  mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
  return {std::move(c), std::move(s)};
}

double Angle::approx_radians() const {
  if (const auto* f = std::get_if<PiFraction>(&value_)) {
    return std::numbers::pi * static_cast<double>(f->numerator) / static_cast<double>(f->denominator);
  }
  return std::get<HReal>(value_).to_double();
}

std::string Angle::to_string() const {
  if (const auto* f = std::get_if<PiFraction>(&value_)) {
    std::string out;
    if (f->numerator == 0) return "0";
    if (f->numerator == -1) {
      out = "-pi";
    } else if (f->numerator == 1) {
      out = "pi";
    } else {
      out = std::to_string(f->numerator) + "pi";
    }
    if (f->denominator != 1) out += "/" + std::to_string(f->denominator);
    return out;
  }
  return std::get<HReal>(value_).to_scientific(30);
}

Angle Angle::operator+(const Angle& rhs) const {
  const auto* a = std::get_if<PiFraction>(&value_);
  const auto* b = std::get_if<PiFraction>(&rhs.value_);
  if (a && b) {
    return pi_fraction(a->numerator * b->denominator + b->numerator * a->denominator,
                       a->denominator * b->denominator);
  }
  // Mixed sums are materialised at the finer of the two precisions (at least 64 bits).
  mpfr_prec_t bits = 64;
  if (!a) bits = std::max(bits, std::get<HReal>(value_).precision());
  if (!b) bits = std::max(bits, std::get<HReal>(rhs.value_).precision());
  HReal lhs_rad, rhs_rad;
  mpfr_set_prec(lhs_rad.get(), bits + 16);
  mpfr_set_prec(rhs_rad.get(), bits + 16);
  auto to_radians = [&](const Angle& angle, HReal& out) {
    if (const auto* f = std::get_if<PiFraction>(&angle.value_)) {
      mpfr_const_pi(out.get(), MPFR_RNDN);
      mpfr_mul_si(out.get(), out.get(), static_cast<long>(f->numerator), MPFR_RNDN);
      mpfr_div_si(out.get(), out.get(), static_cast<long>(f->denominator), MPFR_RNDN);
    } else {
      mpfr_set(out.get(), std::get<HReal>(angle.value_).get(), MPFR_RNDN);
    }
  };
  to_radians(*this, lhs_rad);
  to_radians(rhs, rhs_rad);
  return from_radians(lhs_rad + rhs_rad);
}

Angle Angle::operator-() const {
  if (const auto* f = std::get_if<PiFraction>(&value_)) return pi_fraction(-f->numerator, f->denominator);
  return from_radians(-std::get<HReal>(value_));
}

bool operator==(const Angle& a, const Angle& b) {
  const auto* fa = std::get_if<Angle::PiFraction>(&a.value_);
  const auto* fb = std::get_if<Angle::PiFraction>(&b.value_);
  if (fa && fb) return fa->numerator == fb->numerator && fa->denominator == fb->denominator;
  if (!fa && !fb) return std::get<HReal>(a.value_) == std::get<HReal>(b.value_);
  return false;
}

}  // namespace zeno::hp
