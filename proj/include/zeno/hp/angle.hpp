#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "zeno/hp/real.hpp"

namespace zeno::hp {

/// A plane angle. Rational multiples of pi are kept exact so that quarter
/// turns produce exact 0/±1 trigonometric values at any precision.
class Angle {
 public:
  Angle() : value_(PiFraction{0, 1}) {}

  static Angle pi_fraction(std::int64_t numerator, std::int64_t denominator);
  static Angle from_radians(HReal radians);
  /// Accepts "pi/2", "-3pi/8", "3*pi/8", "pi" and decimal radians "0.25".
  static Angle parse(std::string_view text, const PrecisionContext& ctx);

  HReal radians(const PrecisionContext& ctx) const;
  /// (cos, sin), exact for multiples of pi/2 given as fractions.
  std::pair<HReal, HReal> cos_sin(const PrecisionContext& ctx) const;
  double approx_radians() const;
  std::string to_string() const;
  bool is_pi_fraction() const { return std::holds_alternative<PiFraction>(value_); }

  Angle operator+(const Angle& rhs) const;
  Angle operator-() const;

  friend bool operator==(const Angle& a, const Angle& b);

 private:
  struct PiFraction {
    std::int64_t numerator;
    std::int64_t denominator;
  };
  explicit Angle(std::variant<PiFraction, HReal> value) : value_(std::move(value)) {}

  std::variant<PiFraction, HReal> value_;
};

}  // namespace zeno::hp
