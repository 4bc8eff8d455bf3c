#include "zeno/hp/complex.hpp"

namespace zeno::hp {

namespace {

mpfr_prec_t joint(const HComplex& a, const HComplex& b) { return std::max(a.precision(), b.precision()); }

HReal zero_at(mpfr_prec_t bits) {
  HReal r;
  mpfr_set_prec(r.get(), bits);
  mpfr_set_zero(r.get(), 1);
  return r;
}

}  // namespace

HComplex::HComplex(HReal re) : re_(std::move(re)), im_(zero_at(re_.precision())) {}

HReal HComplex::norm() const {
  HReal result = zero_at(precision());
  mpfr_fmma(result.get(), re_.get(), re_.get(), im_.get(), im_.get(), MPFR_RNDN);
  return result;
}

HComplex& HComplex::operator+=(const HComplex& rhs) { return *this = *this + rhs; }
HComplex& HComplex::operator-=(const HComplex& rhs) { return *this = *this - rhs; }
HComplex& HComplex::operator*=(const HComplex& rhs) { return *this = *this * rhs; }
HComplex& HComplex::operator/=(const HComplex& rhs) { return *this = *this / rhs; }

HComplex operator*(const HComplex& a, const HComplex& b) {
  const mpfr_prec_t bits = joint(a, b);
  HReal re = zero_at(bits);
  HReal im = zero_at(bits);
  mpfr_fmms(re.get(), a.re_.get(), b.re_.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_fmma(im.get(), a.re_.get(), b.im_.get(), a.im_.get(), b.re_.get(), MPFR_RNDN);
  return {std::move(re), std::move(im)};
}

HComplex operator/(const HComplex& a, const HComplex& b) {
  const mpfr_prec_t bits = joint(a, b);
  HReal re = zero_at(bits);
  HReal im = zero_at(bits);
  HReal denom = zero_at(bits);
  mpfr_fmma(re.get(), a.re_.get(), b.re_.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_fmms(im.get(), a.im_.get(), b.re_.get(), a.re_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_fmma(denom.get(), b.re_.get(), b.re_.get(), b.im_.get(), b.im_.get(), MPFR_RNDN);
  mpfr_div(re.get(), re.get(), denom.get(), MPFR_RNDN);
  mpfr_div(im.get(), im.get(), denom.get(), MPFR_RNDN);
  return {std::move(re), std::move(im)};
}

HComplex csqrt(const HComplex& z, const PrecisionContext& ctx) {
  if (z.is_zero()) return HComplex(ctx);
  // Work with a few extra bits so the final rounding dominates.
  const PrecisionContext work(ctx.digits() + 5, ctx.guard_digits());
  const HReal modulus = hypot(z.re(), z.im(), work);
  const HReal half_sum = (modulus + abs(z.re())) / 2L;
  const HReal a = sqrt(half_sum, work);  // > 0 because z != 0
  const HReal b = abs(z.im()) / (a * 2L);
  const bool negative_im = z.im().sign() < 0;
  if (z.re().sign() >= 0) {
    return HComplex(a, negative_im ? -b : b).rounded(ctx);
  }
  return HComplex(b, negative_im ? -a : a).rounded(ctx);
}

HComplex cexp(const HComplex& z, const PrecisionContext& ctx) {
  const HReal scale = exp(z.re(), ctx);
  HReal c(ctx);
  HReal s(ctx);
  mpfr_sin_cos(s.get(), c.get(), z.im().get(), MPFR_RNDN);
  return {scale * c, scale * s};
}

CosSin ctrig(const HComplex& z, const PrecisionContext& ctx) {
  // e^{iz} = e^{-y}(cos x + i sin x), e^{-iz} = e^{y}(cos x - i sin x);
  // their half sum and difference are taken analytically: the e^{±y} pair
  // enters only through cosh y and sinh y, each correctly rounded.
  HReal cos_x(ctx), sin_x(ctx), cosh_y(ctx), sinh_y(ctx);
  mpfr_sin_cos(sin_x.get(), cos_x.get(), z.re().get(), MPFR_RNDN);
  mpfr_sinh_cosh(sinh_y.get(), cosh_y.get(), z.im().get(), MPFR_RNDN);
  return CosSin{
      HComplex(cos_x * cosh_y, -(sin_x * sinh_y)),
      HComplex(sin_x * cosh_y, cos_x * sinh_y),
  };
}

HReal relative_difference(const HComplex& a, const HComplex& b) {
  const HReal scale = max(a.max_component(), b.max_component());
  if (scale.is_zero()) return HReal();
  return (a - b).max_component() / scale;
}

}  // namespace zeno::hp

#include <vector>

namespace zeno::hp {

HComplex exact_dot(std::span<const HComplex* const> lhs, std::span<const HComplex* const> rhs,
                   const PrecisionContext& ctx) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("exact_dot: length mismatch");
  const std::size_t n = lhs.size();
  std::vector<HReal> re_terms(2 * n), im_terms(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    const HComplex& a = *lhs[k];
    const HComplex& b = *rhs[k];
    auto exact_product = [](HReal& out, const HReal& x, const HReal& y, bool negate) {
      mpfr_set_prec(out.get(), x.precision() + y.precision());
      mpfr_mul(out.get(), x.get(), y.get(), MPFR_RNDN);  // exact at this precision
      if (negate) mpfr_neg(out.get(), out.get(), MPFR_RNDN);
    };
    exact_product(re_terms[2 * k], a.re(), b.re(), false);
    exact_product(re_terms[2 * k + 1], a.im(), b.im(), true);
    exact_product(im_terms[2 * k], a.re(), b.im(), false);
    exact_product(im_terms[2 * k + 1], a.im(), b.re(), false);
  }
  std::vector<mpfr_ptr> re_ptrs, im_ptrs;
  re_ptrs.reserve(2 * n);
  im_ptrs.reserve(2 * n);
  for (std::size_t k = 0; k < 2 * n; ++k) {
    re_ptrs.push_back(re_terms[k].get());
    im_ptrs.push_back(im_terms[k].get());
  }
  HReal re(ctx), im(ctx);
  mpfr_sum(re.get(), re_ptrs.data(), re_ptrs.size(), MPFR_RNDN);
  mpfr_sum(im.get(), im_ptrs.data(), im_ptrs.size(), MPFR_RNDN);
  return {std::move(re), std::move(im)};
}

}  // namespace zeno::hp
