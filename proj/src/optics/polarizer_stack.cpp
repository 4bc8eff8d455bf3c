#include "zeno/optics/polarizer_stack.hpp"

#include <cmath>
#include <string>

namespace zeno::optics {

using hp::HComplex;
using hp::HReal;
using hp::Mat2;
using hp::Mat4;
using hp::PrecisionContext;

void PolarizerSlab::validate() const {
  if (xi.at(PrecisionContext(30)).sign() <= 0) throw ValidationError("slab thickness xi must be positive");
}

HReal ScatteringAmplitudes::flux() const { return t1.norm() + t2.norm() + r1.norm() + r2.norm(); }

StackConfig StackConfig::zeno(int n, Decimal xi, DielectricEigenvalues eps) {
  StackConfig config;
  config.n_polarizers = n;
  config.xi = std::move(xi);
  config.eps = std::move(eps);
  config.angle_schedule = zeno_angle_schedule(n);
  return config;
}

void StackConfig::validate() const {
  if (n_polarizers < 1) throw ValidationError("stack needs at least one polarizer");
  if (angle_schedule.size() != static_cast<std::size_t>(n_polarizers)) {
    throw ValidationError("angle schedule has " + std::to_string(angle_schedule.size()) + " entries for " +
                          std::to_string(n_polarizers) + " polarizers");
  }
  if (digits && *digits < 1) throw ValidationError("digits must be positive");
  PolarizerSlab{hp::Angle(), xi, eps}.validate();
  if (spacer_xi) PolarizerSlab::vacuum_spacer(*spacer_xi).validate();
}

std::vector<PolarizerSlab> StackConfig::slabs() const {
  std::vector<PolarizerSlab> out;
  out.reserve(static_cast<std::size_t>(2 * n_polarizers));
  for (int k = 0; k < n_polarizers; ++k) {
    if (spacer_xi && k > 0) out.push_back(PolarizerSlab::vacuum_spacer(*spacer_xi));
    out.push_back(PolarizerSlab{angle_schedule[static_cast<std::size_t>(k)], xi, eps});
  }
  return out;
}

Mat2 dielectric_tensor(const hp::Angle& theta, const DielectricEigenvalues& eps, const PrecisionContext& ctx) {
  return hp::spectral_apply(theta, eps.allowed.value(ctx), eps.blocked.value(ctx),
                            [](const HComplex& lam) { return lam; }, ctx);
}

namespace {

/// Scalar kernels of one principal channel: cos(xi sqrt l), sin(xi sqrt l)/sqrt l, sqrt l sin(xi sqrt l).
struct ChannelKernels {
  HComplex cos_term;
  HComplex sin_over_root;
  HComplex root_times_sin;
};

ChannelKernels channel_kernels(const HComplex& lambda, const HReal& xi, const PrecisionContext& ctx) {
  const HComplex root = hp::csqrt(lambda, ctx);
  const HComplex phase = root * xi;
  auto [c, s] = hp::ctrig(phase, ctx);
  ChannelKernels k;
  k.cos_term = std::move(c);
  // xi sinc(xi sqrt l) at l = 0; sin(w)/w has no cancellation for small w != 0.
  k.sin_over_root = root.is_zero() ? HComplex(xi.rounded(ctx)) : (s / root).rounded(ctx);
  k.root_times_sin = (root * s).rounded(ctx);
  return k;
}

struct SlabKernels {
  ChannelKernels allowed;
  ChannelKernels blocked;
};

SlabKernels slab_kernels(const Decimal& xi, const DielectricEigenvalues& eps, const PrecisionContext& ctx) {
  const HReal xi_value = xi.at(ctx);
  return {channel_kernels(eps.allowed.value(ctx), xi_value, ctx),
          channel_kernels(eps.blocked.value(ctx), xi_value, ctx)};
}

// X tau_2, with tau_2 = [[0, -i], [i, 0]].
Mat2 times_tau2(const Mat2& x) {
  Mat2 out;
  for (std::size_t i = 0; i < 2; ++i) {
    out(i, 0) = x(i, 1).times_i();
    out(i, 1) = x(i, 0).times_minus_i();
  }
  return out;
}

// tau_2 X.
Mat2 tau2_times(const Mat2& x) {
  Mat2 out;
  for (std::size_t j = 0; j < 2; ++j) {
    out(0, j) = x(1, j).times_minus_i();
    out(1, j) = x(0, j).times_i();
  }
  return out;
}

Mat4 assemble_slab(const hp::Angle& theta, const SlabKernels& k, const PrecisionContext& ctx) {
  const Mat2 cos_block = hp::spectral_combine(theta, k.allowed.cos_term, k.blocked.cos_term, ctx);
  const Mat2 sin_over_root = hp::spectral_combine(theta, k.allowed.sin_over_root, k.blocked.sin_over_root, ctx);
  const Mat2 root_times_sin = hp::spectral_combine(theta, k.allowed.root_times_sin, k.blocked.root_times_sin, ctx);
  Mat2 upper_right = times_tau2(sin_over_root);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) upper_right(i, j) = -upper_right(i, j);
  }
  return hp::block_matrix(cos_block, upper_right, tau2_times(root_times_sin), tau2_times(times_tau2(cos_block)));
}

}  // namespace

Mat4 slab_transfer(const PolarizerSlab& slab, const PrecisionContext& ctx) {
  slab.validate();
  return assemble_slab(slab.theta, slab_kernels(slab.xi, slab.eps, ctx), ctx);
}

std::vector<hp::Angle> zeno_angle_schedule(int n) {
  if (n < 1) throw ValidationError("schedule needs n >= 1");
  std::vector<hp::Angle> angles;
  angles.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) angles.push_back(hp::Angle::pi_fraction(k, 2 * n));
  return angles;
}

Mat4 stack_transfer(std::span<const PolarizerSlab> slabs, const PrecisionContext& ctx) {
  if (slabs.empty()) throw ValidationError("stack needs at least one slab");
  // Kernels depend only on (xi, eps); neighbouring slabs usually share them.
  const PolarizerSlab* cached_for = nullptr;
  SlabKernels kernels;
  Mat4 total;
  bool first = true;
  for (const PolarizerSlab& slab : slabs) {
    slab.validate();
    if (!cached_for || !(cached_for->xi == slab.xi && cached_for->eps == slab.eps)) {
      kernels = slab_kernels(slab.xi, slab.eps, ctx);
      cached_for = &slab;
    }
    Mat4 m = assemble_slab(slab.theta, kernels, ctx);
    total = first ? std::move(m) : hp::multiply(m, total, ctx);
    first = false;
  }
  return total;
}

ScatteringAmplitudes solve_boundary(const Mat4& m_tot, const PrecisionContext& ctx) {
  // Unknowns (R1, R2, T1, T2).
  hp::Mat4 system(ctx);
  hp::Vec4 rhs;
  const HComplex one(1, 0, ctx);
  for (std::size_t i = 0; i < 4; ++i) {
    system(i, 0) = m_tot(i, 0) - m_tot(i, 3);
    system(i, 1) = m_tot(i, 1) + m_tot(i, 2);
    rhs[i] = -(m_tot(i, 0) + m_tot(i, 3));
  }
  system(0, 2) = -one;
  system(3, 2) = -one;
  system(1, 3) = -one;
  system(2, 3) = one;

  const hp::Vec4 x = hp::solve(system, rhs, ctx);
  ScatteringAmplitudes amps{x[2], x[3], x[0], x[1], HReal(ctx)};

  const hp::Vec4 incoming{one + amps.r1, amps.r2, amps.r2, one - amps.r1};
  const hp::Vec4 outgoing{amps.t1, amps.t2, -amps.t2, amps.t1};
  const hp::Vec4 image = hp::apply(m_tot, incoming, ctx);
  HReal residual = (image[0] - outgoing[0]).max_component();
  for (std::size_t i = 1; i < 4; ++i) residual = hp::max(residual, (image[i] - outgoing[i]).max_component());
  const HReal scale = hp::max(HReal(1L, ctx), hp::max_entry(outgoing));
  amps.relation_residual = residual / scale;

  // The residual is only meaningful above the rounding floor of M_tot itself:
  // an absolute error of eps·|M| per entry is already present in the product.
  const double floor_log10 =
      ctx.log10_epsilon() + m_tot.max_entry().log10_abs() + hp::max_entry(incoming).log10_abs() - scale.log10_abs();
  const double residual_log10 = amps.relation_residual.log10_abs();
  if (!amps.relation_residual.is_finite() || residual_log10 > kRelationToleranceLog10 ||
      floor_log10 > kRelationToleranceLog10) {
    throw PrecisionExhausted("boundary solution not certified at " + std::to_string(ctx.digits()) +
                             " digits: relative residual 1e" + std::to_string(static_cast<int>(std::ceil(residual_log10))) +
                             ", rounding floor 1e" + std::to_string(static_cast<int>(std::ceil(floor_log10))) +
                             " (limit 1e-20)");
  }
  return amps;
}

HReal transmission_probability(const ScatteringAmplitudes& amps) { return amps.t2.norm(); }

int estimate_digits(const StackConfig& config, int guard) {
  double span = 0.0;
  for (const PolarizerSlab& slab : config.slabs()) {
    const double growth = std::max(std::sqrt(slab.eps.allowed.approx()).imag(), std::sqrt(slab.eps.blocked.approx()).imag());
    span += slab.xi.approx() * growth;
  }
  return static_cast<int>(std::ceil(span / std::log(10.0))) + guard;
}

Mat4 frame_rotation(const hp::Angle& delta, const PrecisionContext& ctx) {
  const Mat2 r = hp::rotation2(delta, ctx);
  return hp::block_matrix(r, Mat2(ctx), Mat2(ctx), r);
}

StackEvaluation evaluate_stack(const StackConfig& config) {
  config.validate();
  StackEvaluation result;
  result.digits_used = config.digits.value_or(estimate_digits(config));
  const PrecisionContext ctx(result.digits_used);
  const std::vector<PolarizerSlab> slabs = config.slabs();
  result.m_tot = stack_transfer(slabs, ctx);
  result.amplitudes = solve_boundary(result.m_tot, ctx);
  result.p_maxwell = transmission_probability(result.amplitudes);
  const HComplex det = hp::determinant(result.m_tot, ctx);
  result.det_residual = (det - HComplex(1, 0, ctx)).abs(ctx);
  return result;
}

}  // namespace zeno::optics
