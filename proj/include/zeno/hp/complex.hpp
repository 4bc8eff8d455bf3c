#pragma once

#include <algorithm>
#include <complex>
#include <string>

#include "zeno/hp/real.hpp"

namespace zeno::hp {

/// Arbitrary-precision complex scalar. Products use fused exact
/// multiply-add (ad ± bc rounded once), so each component of a product is
/// correctly rounded.
class HComplex {
 public:
  HComplex() = default;
  explicit HComplex(const PrecisionContext& ctx) : re_(ctx), im_(ctx) {}
  HComplex(HReal re, HReal im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit HComplex(HReal re);
  HComplex(long re, long im, const PrecisionContext& ctx) : re_(re, ctx), im_(im, ctx) {}
  HComplex(std::complex<double> z, const PrecisionContext& ctx) : re_(z.real(), ctx), im_(z.imag(), ctx) {}

  const HReal& re() const noexcept { return re_; }
  const HReal& im() const noexcept { return im_; }
  HReal& re() noexcept { return re_; }
  HReal& im() noexcept { return im_; }

  mpfr_prec_t precision() const noexcept { return std::max(re_.precision(), im_.precision()); }
  HComplex rounded(const PrecisionContext& ctx) const { return {re_.rounded(ctx), im_.rounded(ctx)}; }
  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  /// |z|^2, exact up to a single rounding.
  HReal norm() const;
  HReal abs(const PrecisionContext& ctx) const { return hypot(re_, im_, ctx); }
  /// max(|re|, |im|); cheap modulus surrogate for norms and pivoting bounds.
  HReal max_component() const { return max(hp::abs(re_), hp::abs(im_)); }
  HComplex conj() const { return {re_, -im_}; }
  /// Multiplication by +i; exact.
  HComplex times_i() const { return {-im_, re_}; }
  /// Multiplication by -i; exact.
  HComplex times_minus_i() const { return {im_, -re_}; }

  HComplex operator-() const { return {-re_, -im_}; }
  HComplex& operator+=(const HComplex& rhs);
  HComplex& operator-=(const HComplex& rhs);
  HComplex& operator*=(const HComplex& rhs);
  HComplex& operator/=(const HComplex& rhs);

  friend HComplex operator+(const HComplex& a, const HComplex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
  friend HComplex operator-(const HComplex& a, const HComplex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
  friend HComplex operator*(const HComplex& a, const HComplex& b);
  friend HComplex operator/(const HComplex& a, const HComplex& b);
  friend HComplex operator*(const HComplex& a, const HReal& b) { return {a.re_ * b, a.im_ * b}; }
  friend HComplex operator*(const HReal& a, const HComplex& b) { return b * a; }
  friend HComplex operator/(const HComplex& a, const HReal& b) { return {a.re_ / b, a.im_ / b}; }
  friend HComplex operator*(const HComplex& a, long b) { return {a.re_ * b, a.im_ * b}; }
  friend HComplex operator/(const HComplex& a, long b) { return {a.re_ / b, a.im_ / b}; }

  friend bool operator==(const HComplex& a, const HComplex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  HReal re_;
  HReal im_;
};

/// Principal square root: Re w >= 0, and Im w >= 0 when Re w = 0.
HComplex csqrt(const HComplex& z, const PrecisionContext& ctx);

HComplex cexp(const HComplex& z, const PrecisionContext& ctx);

struct CosSin {
  HComplex cos;
  HComplex sin;
};

/// cos z and sin z from circular functions of Re z and hyperbolic functions
/// of Im z; no cancellation occurs however large |Im z| is.
CosSin ctrig(const HComplex& z, const PrecisionContext& ctx);

/// |a - b| / max(|a|, |b|) with the component-max modulus; 0 when both vanish.
HReal relative_difference(const HComplex& a, const HComplex& b);

}  // namespace zeno::hp

#include <span>

namespace zeno::hp {

/// sum_k lhs[k] * rhs[k], with every partial product formed exactly and the
/// sum rounded once to `ctx` per component.
HComplex exact_dot(std::span<const HComplex* const> lhs, std::span<const HComplex* const> rhs,
                   const PrecisionContext& ctx);

}  // namespace zeno::hp
