#include "zeno/app/selftest.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "zeno/app/experiment.hpp"
#include "zeno/app/output.hpp"
#include "zeno/error.hpp"
#include "zeno/optics/baseline.hpp"
#include "zeno/photon/photon_wave.hpp"
#include "zeno/subspace/subspace_dynamics.hpp"

namespace zeno::app {

namespace {

using hp::HReal;
using hp::PrecisionContext;

std::string sci(double x) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << x;
  return s.str();
}

/// Returns a detail string; pass iff `ok` is set.
struct Outcome {
  bool ok;
  std::string detail;
};

Outcome within(double value, double limit) { return {value <= limit, sci(value) + " <= " + sci(limit)}; }

Outcome check_baseline() {
  const PrecisionContext ctx(50);
  const double p1 = optics::projection_probability(1, ctx).to_double();
  const HReal p2 = optics::projection_probability(2, ctx);
  const HReal pb = optics::intermediate_polarizer_probability(hp::Angle::pi_fraction(1, 4), ctx);
  const double err = std::max({std::abs(p1), hp::abs(p2 - HReal::parse("0.25", ctx)).to_double(),
                               hp::abs(pb - HReal::parse("0.25", ctx)).to_double()});
  return within(err, 1e-20);
}

Outcome check_vacuum_stack() {
  ExperimentConfig config;
  config.n_min = 1;
  config.n_max = 4;
  config.eps = optics::DielectricEigenvalues::vacuum();
  config.digits = DigitsChoice{60};
  config.threads = 1;
  const ExperimentResult result = run_experiment(config);
  double worst = 0.0;
  for (const ResultRow& row : result.rows) {
    worst = std::max({worst, row.p_maxwell.to_double(), std::abs(row.t1.norm().to_double() - 1.0)});
  }
  return within(worst, 1e-40);
}

Outcome check_lossless_flux() {
  optics::StackConfig config = optics::StackConfig::zeno(3, optics::Decimal("1"), optics::DielectricEigenvalues::parse("1", "2"));
  config.digits = 60;
  const optics::StackEvaluation eval = optics::evaluate_stack(config);
  return within(std::abs(eval.amplitudes.flux().to_double() - 1.0), 1e-40);
}

Outcome check_slab_determinant() {
  const PrecisionContext ctx(60);
  const optics::PolarizerSlab slab{hp::Angle::pi_fraction(1, 3), optics::Decimal("3"),
                                   optics::DielectricEigenvalues::parse("1.1+0.001i", "1.1+0.05i")};
  const hp::HComplex det = hp::determinant(optics::slab_transfer(slab, ctx), ctx);
  return within((det - hp::HComplex(1, 0, ctx)).abs(ctx).to_double(), 1e-50);
}

Outcome check_precision_guard() {
  optics::StackConfig config = optics::StackConfig::zeno(20, optics::Decimal("100"), optics::DielectricEigenvalues::parse("1", "1+2i"));
  config.digits = 15;
  try {
    (void)optics::evaluate_stack(config);
  } catch (const PrecisionExhausted&) {
    return {true, "PrecisionExhausted raised at 15 digits"};
  }
  return {false, "15-digit evaluation returned a value"};
}

Outcome check_spin_algebra() {
  const auto s = photon::spin1_matrices();
  const photon::Complex i(0.0, 1.0);
  double worst = (s[0] * s[0] + s[1] * s[1] + s[2] * s[2] - 2.0 * photon::CMat3::Identity()).cwiseAbs().maxCoeff();
  for (std::size_t a = 0; a < 3; ++a) {
    const std::size_t b = (a + 1) % 3, c = (a + 2) % 3;
    worst = std::max(worst, (s[a] * s[b] - s[b] * s[a] - i * s[c]).cwiseAbs().maxCoeff());
  }
  return {worst == 0.0, "max entry defect " + sci(worst)};
}

Outcome check_photon_residuals() {
  const std::vector<photon::SpaceTime> samples = {{photon::Vec3(0.1, -0.2, 0.3), 0.4}, {photon::Vec3(1, 2, 3), -1.5}};
  const auto wave = photon::PlaneWaveField::circular(2.5);
  const double circular = std::max({photon::schroedinger_curl_residual(wave, samples),
                                    photon::schroedinger_matrix_residual(wave, samples),
                                    photon::maxwell_split_check(wave, samples)});
  const double linear = photon::schroedinger_curl_residual(photon::PlaneWaveField::linear(2.5), samples);
  const double ok = std::max(circular, std::abs(linear - 2.5 * std::numbers::sqrt2));
  return within(ok, 1e-12);
}

Outcome check_tcp() {
  using photon::DiscreteSymmetry;
  const bool ok = photon::compose({DiscreteSymmetry::T, DiscreteSymmetry::C, DiscreteSymmetry::P}).is_identity() &&
                  photon::compose({DiscreteSymmetry::C, DiscreteSymmetry::C}).is_identity();
  return {ok, "T C P = 1, C C = 1"};
}

Outcome check_subspace_partition() {
  subspace::Matrix h(2, 2);
  h << 0.3, subspace::Complex(0.1, 0.2), subspace::Complex(0.1, -0.2), -0.4;
  const subspace::SubspaceBlocks blocks = subspace::partition({h, 1});
  const bool ok = blocks.h(0, 0) == h(0, 0) && blocks.v(0, 0) == h(0, 1) && blocks.hp(0, 0) == h(1, 1) &&
                  blocks.reassemble() == h;
  return {ok, "H=[a], V=[g], H'=[b], exact reassembly"};
}

Outcome check_scalar_self_energy() {
  const double a = 0.2, g = 0.3, w = -0.1, energy = 0.25, eta = 0.05;
  subspace::Matrix h(2, 2);
  h << a, g, g, w;
  const subspace::SubspaceBlocks blocks = subspace::partition({h, 1});
  const subspace::SelfEnergy se = subspace::self_energy(blocks, energy, eta);
  const double x = energy - w, den = x * x + eta * eta;
  const double err = std::max(std::abs(se.delta(0, 0) - g * g * x / den), std::abs(se.gamma(0, 0) - 2 * g * g * eta / den));
  return within(err, 1e-12);
}

Outcome check_dt_halving() {
  const subspace::MonsterSystem sys = subspace::random_system(4, 2, 7);
  subspace::Vector psi0 = subspace::Vector::Zero(2);
  psi0(0) = 1.0;
  const double coarse = subspace::max_deviation(sys, psi0, 10.0, 0.05);
  const double fine = subspace::max_deviation(sys, psi0, 10.0, 0.025);
  const double ratio = coarse / fine;
  return {ratio >= 3.5 && ratio <= 4.5, "ratio " + sci(ratio)};
}

Outcome check_csv_round_trip() {
  ExperimentConfig config;
  config.n_min = 1;
  config.n_max = 3;
  config.xi = optics::Decimal("2");
  config.eps = optics::DielectricEigenvalues::parse("1", "1+0.5i");
  config.threads = 1;
  const ExperimentResult result = run_experiment(config);
  std::ostringstream first;
  write_csv(first, result);
  std::istringstream in(first.str());
  std::ostringstream second;
  write_csv(second, read_csv(in));
  return {first.str() == second.str(), "re-emitted CSV is byte-identical"};
}

}  // namespace

std::vector<CheckResult> run_selftest() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> checks = {
      {"baseline probabilities", check_baseline},
      {"vacuum stack transmits nothing crossed", check_vacuum_stack},
      {"lossless stack conserves flux", check_lossless_flux},
      {"slab determinant is one", check_slab_determinant},
      {"15 digits fail loudly", check_precision_guard},
      {"spin-1 algebra", check_spin_algebra},
      {"plane-wave residuals", check_photon_residuals},
      {"discrete symmetries", check_tcp},
      {"subspace partition", check_subspace_partition},
      {"scalar self-energy", check_scalar_self_energy},
      {"non-local evolution order", check_dt_halving},
      {"CSV round trip", check_csv_round_trip},
  };
  std::vector<CheckResult> results;
  for (const auto& [name, check] : checks) {
    try {
      Outcome o = check();
      results.push_back({name, o.ok, std::move(o.detail)});
    } catch (const std::exception& e) {
      results.push_back({name, false, std::string("threw: ") + e.what()});
    }
  }
  return results;
}

}  // namespace zeno::app
