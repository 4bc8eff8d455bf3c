#include "zeno/optics/dielectric.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

namespace zeno::optics {

namespace {

const hp::PrecisionContext kSignCheck(30);

bool is_decimal(std::string_view text) {
  try {
    (void)hp::HReal::parse(text, kSignCheck);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

}  // namespace

Decimal::Decimal(std::string_view text) : text_(text) {
  if (!is_decimal(text_)) throw ValidationError("not a decimal literal: '" + text_ + "'");
}

ComplexLiteral ComplexLiteral::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ValidationError("empty complex literal");
  if (s.back() != 'i' && s.back() != 'j') return {Decimal(s), Decimal("0")};

  s.pop_back();
  // Split at the last sign that is not the leading sign nor part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re_text = split == std::string::npos ? "0" : s.substr(0, split);
  std::string im_text = split == std::string::npos ? s : s.substr(split);
  if (im_text.empty() || im_text == "+") im_text = "1";
  if (im_text == "-") im_text = "-1";
  try {
    return {Decimal(re_text), Decimal(im_text)};
  } catch (const ValidationError&) {
    throw ValidationError("bad complex literal: '" + std::string(text) + "' (expected a+bi)");
  }
}

std::string ComplexLiteral::to_string() const {
  const std::string& im_text = im.text();
  const bool explicit_sign = !im_text.empty() && (im_text.front() == '-' || im_text.front() == '+');
  return re.text() + (explicit_sign ? "" : "+") + im_text + "i";
}

AxisPermittivity::AxisPermittivity(ComplexLiteral value) : literal_(std::move(value)) {
  if (literal_.im.at(kSignCheck).sign() < 0) {
    throw ValidationError("dielectric eigenvalue " + literal_.to_string() +
                          " has negative imaginary part (active medium)");
  }
}

AxisPermittivity AxisPermittivity::from_conductivity(Decimal eps_real, Decimal sigma, Decimal omega) {
  if (sigma.at(kSignCheck).sign() < 0) throw ValidationError("conductivity must be non-negative");
  if (omega.at(kSignCheck).sign() <= 0) throw ValidationError("angular frequency must be positive");
  AxisPermittivity p(ComplexLiteral{std::move(eps_real), Decimal("0")});
  p.conductivity_ = Conductivity{std::move(sigma), std::move(omega)};
  return p;
}

hp::HComplex AxisPermittivity::value(const hp::PrecisionContext& ctx) const {
  if (!conductivity_) return literal_.at(ctx);
  hp::HReal im = hp::HReal::pi(ctx) * 4L * conductivity_->sigma.at(ctx) / conductivity_->omega.at(ctx);
  return {literal_.re.at(ctx), im.rounded(ctx)};
}

std::complex<double> AxisPermittivity::approx() const {
  if (!conductivity_) return literal_.approx();
  return {literal_.re.approx(),
          4.0 * std::numbers::pi * conductivity_->sigma.approx() / conductivity_->omega.approx()};
}

std::string AxisPermittivity::to_string() const {
  if (!conductivity_) return literal_.to_string();
  return literal_.re.text() + "+4pi*i*" + conductivity_->sigma.text() + "/" + conductivity_->omega.text();
}

}  // namespace zeno::optics
