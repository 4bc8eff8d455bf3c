#include "zeno/hp/matrix.hpp"

namespace zeno::hp {

Mat2 rotation2(const Angle& theta, const PrecisionContext& ctx) {
  auto [c, s] = theta.cos_sin(ctx);
  Mat2 r(ctx);
  r(0, 0) = HComplex(c);
  r(0, 1) = HComplex(-s);
  r(1, 0) = HComplex(s);
  r(1, 1) = HComplex(c);
  return r;
}

Mat2 spectral_combine(const Angle& theta, const HComplex& f1, const HComplex& f2, const PrecisionContext& ctx) {
  auto [c, s] = theta.cos_sin(ctx);
  const HReal cc = c * c;
  const HReal ss = s * s;
  const HReal sc = s * c;
  Mat2 m;
  m(0, 0) = (f1 * cc + f2 * ss).rounded(ctx);
  m(1, 1) = (f1 * ss + f2 * cc).rounded(ctx);
  const HComplex off = ((f1 - f2) * sc).rounded(ctx);
  m(0, 1) = off;
  m(1, 0) = off;
  return m;
}

Mat4 block_matrix(const Mat2& a, const Mat2& b, const Mat2& c, const Mat2& d) {
  Mat4 m;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      m(i, j) = a(i, j);
      m(i, j + 2) = b(i, j);
      m(i + 2, j) = c(i, j);
      m(i + 2, j + 2) = d(i, j);
    }
  }
  return m;
}

}  // namespace zeno::hp
