#include "zeno/optics/baseline.hpp"

namespace zeno::optics {

hp::HReal projection_probability(int n, const hp::PrecisionContext& ctx) {
  if (n < 1) throw ValidationError("projection probability needs n >= 1");
  const hp::HReal c = hp::Angle::pi_fraction(1, 2 * static_cast<std::int64_t>(n)).cos_sin(ctx).first;
  return hp::pow(c * c, static_cast<unsigned long>(n), ctx);
}

hp::HReal two_polarizer_probability(const hp::Angle& theta, const hp::PrecisionContext& ctx) {
  const hp::HReal c = theta.cos_sin(ctx).first;
  return (c * c).rounded(ctx);
}

hp::HReal intermediate_polarizer_probability(const hp::Angle& theta, const hp::PrecisionContext& ctx) {
  const hp::Angle complement = hp::Angle::pi_fraction(1, 2) + (-theta);
  return (two_polarizer_probability(theta, ctx) * two_polarizer_probability(complement, ctx)).rounded(ctx);
}

}  // namespace zeno::optics
