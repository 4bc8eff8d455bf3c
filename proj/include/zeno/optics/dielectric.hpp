#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include "zeno/hp/complex.hpp"

namespace zeno::optics {

/// A decimal literal kept as text so it can be materialised exactly at any
/// precision ("1.1" is never routed through a binary double).
class Decimal {
 public:
  Decimal() : text_("0") {}
  /// Throws ValidationError for anything that is not a plain decimal literal.
  explicit Decimal(std::string_view text);

  hp::HReal at(const hp::PrecisionContext& ctx) const { return hp::HReal::parse(text_, ctx); }
  double approx() const { return std::stod(text_); }
  const std::string& text() const noexcept { return text_; }

  friend bool operator==(const Decimal&, const Decimal&) = default;

 private:
  std::string text_;
};

/// Complex literal in "a+bi" syntax: "1", "1+2i", "1.1+0.001i", "-2i", "3-i".
struct ComplexLiteral {
  Decimal re;
  Decimal im;

  static ComplexLiteral parse(std::string_view text);
  hp::HComplex at(const hp::PrecisionContext& ctx) const { return {re.at(ctx), im.at(ctx)}; }
  std::complex<double> approx() const { return {re.approx(), im.approx()}; }
  std::string to_string() const;

  friend bool operator==(const ComplexLiteral&, const ComplexLiteral&) = default;
};

/// One principal dielectric eigenvalue eps + 4 pi i sigma / omega, given
/// either directly as a complex literal or through its conductivity.
class AxisPermittivity {
 public:
  AxisPermittivity() : AxisPermittivity(ComplexLiteral{Decimal("1"), Decimal("0")}) {}
  /// Throws ValidationError when Im < 0 (active medium).
  explicit AxisPermittivity(ComplexLiteral value);
  static AxisPermittivity from_conductivity(Decimal eps_real, Decimal sigma, Decimal omega);

  hp::HComplex value(const hp::PrecisionContext& ctx) const;
  std::complex<double> approx() const;
  std::string to_string() const;

  friend bool operator==(const AxisPermittivity&, const AxisPermittivity&) = default;

 private:
  struct Conductivity {
    Decimal sigma;
    Decimal omega;
    friend bool operator==(const Conductivity&, const Conductivity&) = default;
  };

  ComplexLiteral literal_;
  std::optional<Conductivity> conductivity_;
};

/// Principal eigenvalues of the slab's 2×2 dielectric tensor: `allowed`
/// along the transmission axis, `blocked` along the absorbing axis.
struct DielectricEigenvalues {
  AxisPermittivity allowed;
  AxisPermittivity blocked;

  static DielectricEigenvalues vacuum() { return {}; }
  static DielectricEigenvalues parse(std::string_view allowed, std::string_view blocked) {
    return {AxisPermittivity(ComplexLiteral::parse(allowed)), AxisPermittivity(ComplexLiteral::parse(blocked))};
  }

  friend bool operator==(const DielectricEigenvalues&, const DielectricEigenvalues&) = default;
};

}  // namespace zeno::optics
