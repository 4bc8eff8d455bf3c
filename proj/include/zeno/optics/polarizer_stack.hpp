#pragma once

#include <optional>
#include <span>
#include <vector>

#include "zeno/hp/matrix.hpp"
#include "zeno/optics/dielectric.hpp"

namespace zeno::optics {

/// One polarizer: blocked-axis pattern rotated by `theta` in the lab frame,
/// optical thickness xi = omega a / c.
struct PolarizerSlab {
  hp::Angle theta;
  Decimal xi;
  DielectricEigenvalues eps;

  static PolarizerSlab vacuum_spacer(Decimal xi) { return {hp::Angle(), std::move(xi), DielectricEigenvalues::vacuum()}; }
  /// Throws ValidationError unless xi > 0.
  void validate() const;
};

/// Amplitudes of the boundary problem for a wave incident polarized along
/// lab axis 1, plus the relative residual of the defining relation.
struct ScatteringAmplitudes {
  hp::HComplex t1;
  hp::HComplex t2;
  hp::HComplex r1;
  hp::HComplex r2;
  hp::HReal relation_residual;

  /// |T1|^2 + |T2|^2 + |R1|^2 + |R2|^2; equals 1 for lossless stacks.
  hp::HReal flux() const;
};

/// A stack of identical polarizers at the given lab-frame angles, optionally
/// separated by vacuum spacers.
struct StackConfig {
  int n_polarizers = 1;
  Decimal xi{"100"};
  DielectricEigenvalues eps;
  std::vector<hp::Angle> angle_schedule;
  std::optional<int> digits;
  std::optional<Decimal> spacer_xi;

  /// N polarizers at the equal-increment schedule k pi / 2N.
  static StackConfig zeno(int n, Decimal xi, DielectricEigenvalues eps);
  /// Throws ValidationError when the configuration is inconsistent.
  void validate() const;
  std::vector<PolarizerSlab> slabs() const;
};

/// Relative residual above which the boundary solution is rejected.
inline constexpr double kRelationToleranceLog10 = -20.0;

/// (eps1 + eps2)/2 + (eps1 - eps2)/2 · R(theta) tau_3 R(theta)^{-1}.
hp::Mat2 dielectric_tensor(const hp::Angle& theta, const DielectricEigenvalues& eps, const hp::PrecisionContext& ctx);

/// Transfer matrix carrying (E1, E2, B1, B2) across one slab.
hp::Mat4 slab_transfer(const PolarizerSlab& slab, const hp::PrecisionContext& ctx);

/// theta_k = k pi / (2n), k = 1..n; the last polarizer is crossed with the input.
std::vector<hp::Angle> zeno_angle_schedule(int n);

/// M_N ··· M_2 M_1: later slabs multiply on the left.
hp::Mat4 stack_transfer(std::span<const PolarizerSlab> slabs, const hp::PrecisionContext& ctx);

/// Solves M (1+R1, R2, R2, 1-R1)^T = (T1, T2, -T2, T1)^T.
/// Throws PrecisionExhausted when the solution cannot be certified to a
/// relative residual of 1e-20 at the working precision.
ScatteringAmplitudes solve_boundary(const hp::Mat4& m_tot, const hp::PrecisionContext& ctx);

/// P_N = |T2|^2.
hp::HReal transmission_probability(const ScatteringAmplitudes& amps);

/// Decimal span of the most amplified channel plus `guard` digits.
int estimate_digits(const StackConfig& config, int guard = 200);

/// blockdiag(R(delta), R(delta)): the frame rotation acting on (E, B).
hp::Mat4 frame_rotation(const hp::Angle& delta, const hp::PrecisionContext& ctx);

struct StackEvaluation {
  int digits_used = 0;
  hp::Mat4 m_tot;
  ScatteringAmplitudes amplitudes;
  hp::HReal p_maxwell;
  /// |det M_tot - 1|
  hp::HReal det_residual;
};

/// Full pipeline at config.digits, or at estimate_digits(config) when unset.
StackEvaluation evaluate_stack(const StackConfig& config);

}  // namespace zeno::optics
