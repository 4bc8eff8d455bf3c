// Acceptance gate: one PASS/FAIL line per criterion. Pass criterion ids as
// arguments to run a subset; exit status is non-zero if any selected one fails.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle/smatrix_oracle.hpp"
#include "zeno/app/experiment.hpp"
#include "zeno/error.hpp"
#include "zeno/optics/baseline.hpp"
#include "zeno/optics/polarizer_stack.hpp"
#include "zeno/photon/photon_wave.hpp"
#include "zeno/subspace/subspace_dynamics.hpp"

namespace {

using zeno::hp::HReal;
using zeno::hp::PrecisionContext;
namespace optics = zeno::optics;

// Pinned tolerances and runtime budgets (seconds).
constexpr double kBaselineTol = 1e-20;
constexpr double kZenoLimitSlack = 1e-6;
constexpr int kZenoLimitN = 10000;
constexpr double kCaseIICloseness = 0.05;
constexpr int kExpectedDigitsCaseII = 883;
constexpr int kDetHeadroomDigits = 50;
constexpr double kConvergenceRelTol = 1e-6;
constexpr double kOracleTol = 1e-8;
constexpr double kFluxTol = 1e-12;
constexpr double kPhotonTol = 1e-12;
constexpr double kRatioLow = 3.5, kRatioHigh = 4.5;
constexpr double kScalarSelfEnergyTol = 1e-12;
constexpr double kGammaPsdTol = 1e-12;

constexpr double kBudgetBaseline = 1, kBudgetZenoLimit = 10, kBudgetCaseII = 600, kBudgetCaseIII = 120;
constexpr double kBudgetPhoton = 1, kBudgetSubspace = 30;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "VIOLATED ") + what;
  }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::string sci(double x) { return fmt("%.3e", x); }

optics::DielectricEigenvalues case_ii() { return optics::DielectricEigenvalues::parse("1", "1+2i"); }
optics::DielectricEigenvalues case_iii() { return optics::DielectricEigenvalues::parse("1.1+0.001i", "1.1+0.05i"); }

zeno::app::ExperimentConfig sweep(const optics::DielectricEigenvalues& eps, int n_max = 20) {
  zeno::app::ExperimentConfig config;
  config.n_min = 1;
  config.n_max = n_max;
  config.xi = optics::Decimal("100");
  config.eps = eps;
  config.digits = zeno::app::DigitsChoice{};
  return config;
}

std::vector<double> p_values(const zeno::app::ExperimentResult& result) {
  std::vector<double> p;
  for (const auto& row : result.rows) p.push_back(row.p_maxwell.to_double());
  return p;
}

Verdict baseline_exactness() {
  Verdict v;
  const PrecisionContext ctx(60);
  const HReal quarter = HReal::parse("0.25", ctx);
  const double p1 = zeno::hp::abs(optics::projection_probability(1, ctx)).to_double();
  const double p2 = zeno::hp::abs(optics::projection_probability(2, ctx) - quarter).to_double();
  const double pb = zeno::hp::abs(optics::intermediate_polarizer_probability(zeno::hp::Angle::pi_fraction(1, 4), ctx) - quarter).to_double();
  v.require(p1 <= kBaselineTol, "|P(1)| = " + sci(p1));
  v.require(p2 <= kBaselineTol, "|P(2) - 1/4| = " + sci(p2));
  v.require(pb <= kBaselineTol, "|p_b(pi/4) - 1/4| = " + sci(pb));
  return v;
}

Verdict zeno_limit() {
  Verdict v;
  const PrecisionContext ctx(40);
  HReal previous = optics::projection_probability(1, ctx);
  int first_violation = 0;
  for (int n = 2; n <= kZenoLimitN; ++n) {
    HReal p = optics::projection_probability(n, ctx);
    if (!(p > previous) && first_violation == 0) first_violation = n;
    previous = std::move(p);
  }
  const double p_last = previous.to_double();
  const double lower = 1.0 - std::numbers::pi * std::numbers::pi / (4.0 * kZenoLimitN) - kZenoLimitSlack;
  v.require(p_last >= lower && p_last <= 1.0, "P(1e4) = " + fmt("%.10f", p_last) + " in [" + fmt("%.10f", lower) + ", 1]");
  v.require(first_violation == 0, first_violation == 0 ? "strictly increasing for N = 1..1e4"
                                                       : "not increasing at N = " + std::to_string(first_violation));
  return v;
}

Verdict case_ii_closeness() {
  Verdict v;
  const auto result = zeno::app::run_experiment(sweep(case_ii()));
  v.require(!result.failure, result.failure ? "failed at N=" + std::to_string(result.failure->n) : "all 20 rows computed");
  double worst = 0.0;
  bool increasing = true;
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    if (result.rows[i].n >= 2) worst = std::max(worst, result.rows[i].abs_diff.to_double());
    if (i > 0 && !(result.rows[i].p_maxwell > result.rows[i - 1].p_maxwell)) increasing = false;
  }
  v.require(worst <= kCaseIICloseness, "max_{N>=2} |P_maxwell - P_projection| = " + fmt("%.4f", worst));
  v.require(increasing, "P_maxwell strictly increasing");
  if (!result.rows.empty()) v.detail += "; P_20 = " + fmt("%.6f", result.rows.back().p_maxwell.to_double());
  return v;
}

Verdict case_iii_shape() {
  Verdict v;
  const auto result = zeno::app::run_experiment(sweep(case_iii()));
  v.require(!result.failure && result.rows.size() == 20, "all 20 rows computed");
  const std::vector<double> p = p_values(result);
  if (p.size() < 20) return v;
  bool rising = true, falling = true;
  for (int n = 2; n <= 3; ++n) rising = rising && result.rows[n - 1].p_maxwell > result.rows[n - 2].p_maxwell;
  for (int n = 7; n <= 20; ++n) falling = falling && result.rows[n - 1].p_maxwell < result.rows[n - 2].p_maxwell;
  v.require(rising, "strictly increasing N = 1..3 (" + fmt("%.5f", p[0]) + ", " + fmt("%.5f", p[1]) + ", " + fmt("%.5f", p[2]) + ")");
  v.require(falling, "strictly decreasing N = 6..20 (" + fmt("%.5f", p[5]) + " -> " + fmt("%.5f", p[19]) + ")");
  return v;
}

Verdict dynamic_range() {
  Verdict v;
  optics::StackConfig config = optics::StackConfig::zeno(20, optics::Decimal("100"), case_ii());
  const int digits = optics::estimate_digits(config);
  v.require(digits == kExpectedDigitsCaseII, "estimate_digits = " + std::to_string(digits));
  const optics::StackEvaluation eval = optics::evaluate_stack(config);
  const double log_entry = eval.m_tot.max_entry().log10_abs();
  const double log_det = eval.det_residual.log10_abs();
  const double limit = -(eval.digits_used - kDetHeadroomDigits);
  v.require(log_det <= limit, "|det M_tot - 1| = 1e" + fmt("%.1f", log_det) + " vs limit 1e" + fmt("%.0f", limit));
  // Informational: the defect on the scale max_entry^2 at which the unit determinant cancels.
  v.detail += "; max entry 1e" + fmt("%.1f", log_entry) + ", defect / max_entry^2 = 1e" + fmt("%.1f", log_det - 2 * log_entry);
  return v;
}

Verdict precision_convergence() {
  Verdict v;
  double worst = 0.0;
  int worst_n = 0;
  for (const auto& eps : {case_ii(), case_iii()}) {
    for (int n = 1; n <= 20; ++n) {
      optics::StackConfig config = optics::StackConfig::zeno(n, optics::Decimal("100"), eps);
      const optics::StackEvaluation base = optics::evaluate_stack(config);
      config.digits = 2 * base.digits_used;
      const optics::StackEvaluation fine = optics::evaluate_stack(config);
      const double rel = zeno::hp::relative_difference(base.p_maxwell, fine.p_maxwell).to_double();
      if (rel > worst) {
        worst = rel;
        worst_n = n;
      }
    }
  }
  v.require(worst <= kConvergenceRelTol, "max relative change auto -> 2x auto = " + sci(worst) + " (N=" + std::to_string(worst_n) + ")");
  optics::StackConfig low = optics::StackConfig::zeno(20, optics::Decimal("100"), case_ii());
  low.digits = 15;
  bool raised = false;
  try {
    (void)optics::evaluate_stack(low);
  } catch (const zeno::PrecisionExhausted&) {
    raised = true;
  }
  v.require(raised, "digits = 15 at N = 20 raises PrecisionExhausted");
  return v;
}

double amplitude_gap(const optics::ScatteringAmplitudes& hp, const oracle::Amplitudes& ref) {
  auto gap = [](const zeno::hp::HComplex& a, oracle::cd b) {
    return std::abs(std::complex<double>(a.re().to_double(), a.im().to_double()) - b);
  };
  return std::max({gap(hp.t1, ref.t1), gap(hp.t2, ref.t2), gap(hp.r1, ref.r1), gap(hp.r2, ref.r2)});
}

Verdict oracle_equivalence() {
  Verdict v;
  double worst = 0.0;
  for (int n = 1; n <= 6; ++n) {
    const auto config = optics::StackConfig::zeno(n, optics::Decimal("1"), optics::DielectricEigenvalues::parse("1", "1+0.2i"));
    const auto eval = optics::evaluate_stack(config);
    worst = std::max(worst, amplitude_gap(eval.amplitudes, oracle::scatter(oracle::zeno_layers(n, 1.0, 1.0, {1.0, 0.2}))));
  }
  v.require(worst <= kOracleTol, "max amplitude gap vs scattering-matrix oracle, N = 1..6: " + sci(worst));

  double flux_hp = 0.0, flux_oracle = 0.0;
  const std::vector<std::pair<const char*, const char*>> lossless = {{"1", "2"}, {"1", "1"}, {"2.5", "1.3"}};
  for (const auto& [a, b] : lossless) {
    for (int n = 1; n <= 6; ++n) {
      const auto config = optics::StackConfig::zeno(n, optics::Decimal("1"), optics::DielectricEigenvalues::parse(a, b));
      const auto eval = optics::evaluate_stack(config);
      flux_hp = std::max(flux_hp, std::abs(eval.amplitudes.flux().to_double() - 1.0));
      const auto ref = oracle::scatter(oracle::zeno_layers(n, 1.0, std::stod(a), std::stod(b)));
      flux_oracle = std::max(flux_oracle, std::abs(ref.flux() - 1.0));
    }
  }
  v.require(flux_hp <= kFluxTol && flux_oracle <= kFluxTol,
            "lossless flux defect " + sci(flux_hp) + " (oracle " + sci(flux_oracle) + ")");
  return v;
}

Verdict photon_wave() {
  using namespace zeno::photon;
  Verdict v;
  const auto s = spin1_matrices();
  double algebra = (s[0] * s[0] + s[1] * s[1] + s[2] * s[2] - 2.0 * CMat3::Identity()).cwiseAbs().maxCoeff();
  for (std::size_t a = 0; a < 3; ++a) {
    const std::size_t b = (a + 1) % 3, c = (a + 2) % 3;
    algebra = std::max(algebra, (s[a] * s[b] - s[b] * s[a] - Complex(0, 1) * s[c]).cwiseAbs().maxCoeff());
  }
  v.require(algebra == 0.0, "spin algebra defect " + sci(algebra));

  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::vector<SpaceTime> samples;
  for (int i = 0; i < 32; ++i) samples.push_back({Vec3(u(rng), u(rng), u(rng)), u(rng)});
  double worst = 0.0;
  for (double omega : {0.1, 1.0, 3.7}) {
    const auto w = PlaneWaveField::circular(omega);
    worst = std::max({worst, schroedinger_curl_residual(w, samples), schroedinger_matrix_residual(w, samples),
                      maxwell_split_check(w, samples)});
  }
  v.require(worst <= kPhotonTol, "circular-wave residuals " + sci(worst));

  bool involutions = true;
  for (auto sym : {DiscreteSymmetry::C, DiscreteSymmetry::P, DiscreteSymmetry::T}) {
    involutions = involutions && compose({sym, sym}).is_identity();
  }
  v.require(compose({DiscreteSymmetry::T, DiscreteSymmetry::C, DiscreteSymmetry::P}).is_identity() && involutions,
            "T C P = identity");
  return v;
}

Verdict subspace_dynamics() {
  using namespace zeno::subspace;
  Verdict v;
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> n_dist(2, 16);
  std::uniform_real_distribution<double> e_dist(-1.5, 1.5), log_eta(-3.0, 0.0);
  double ratio_min = 1e9, ratio_max = 0.0, gamma_min = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = n_dist(rng);
    const int m = std::uniform_int_distribution<int>(1, std::min(4, n - 1))(rng);
    const MonsterSystem sys = random_system(n, m, 1000 + static_cast<std::uint64_t>(trial));
    Vector psi0 = Vector::Random(m);
    psi0.normalize();
    const double coarse = max_deviation(sys, psi0, 20.0, 0.05);
    const double fine = max_deviation(sys, psi0, 20.0, 0.025);
    ratio_min = std::min(ratio_min, coarse / fine);
    ratio_max = std::max(ratio_max, coarse / fine);
    const SubspaceBlocks blocks = partition(sys);
    for (int k = 0; k < 5; ++k) {
      const SelfEnergy se = self_energy(blocks, e_dist(rng), std::pow(10.0, log_eta(rng)));
      gamma_min = std::min(gamma_min, Eigen::SelfAdjointEigenSolver<Matrix>(se.gamma).eigenvalues().minCoeff());
    }
  }
  v.require(ratio_min >= kRatioLow && ratio_max <= kRatioHigh,
            "dt-halving ratios in [" + fmt("%.3f", ratio_min) + ", " + fmt("%.3f", ratio_max) + "]");
  v.require(gamma_min >= -kGammaPsdTol, "min eigenvalue of Gamma " + sci(gamma_min));

  double scalar = 0.0;
  for (int k = 0; k < 10; ++k) {
    const double a = e_dist(rng), g = e_dist(rng), w = e_dist(rng), energy = e_dist(rng), eta = std::pow(10.0, log_eta(rng));
    Matrix h(2, 2);
    h << a, g, g, w;
    const SelfEnergy se = self_energy(partition({h, 1}), energy, eta);
    const double x = energy - w, den = x * x + eta * eta;
    scalar = std::max({scalar, std::abs(se.delta(0, 0) - g * g * x / den), std::abs(se.gamma(0, 0) - 2 * g * g * eta / den)});
  }
  v.require(scalar <= kScalarSelfEnergyTol, "scalar self-energy error " + sci(scalar));
  return v;
}

struct Criterion {
  const char* id;
  const char* title;
  double budget_s;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"baseline_exactness", "Baseline exactness", kBudgetBaseline, baseline_exactness},
      {"zeno_limit", "Zeno limit", kBudgetZenoLimit, zeno_limit},
      {"case_ii", "Lossless allowed axis (xi=100, eps=1, 1+2i)", kBudgetCaseII, case_ii_closeness},
      {"case_iii", "Weakly absorbing axes (eps=1.1+0.001i, 1.1+0.05i)", kBudgetCaseIII, case_iii_shape},
      {"dynamic_range", "Dynamic-range integrity", 0, dynamic_range},
      {"precision_convergence", "Precision convergence", 0, precision_convergence},
      {"oracle_equivalence", "Oracle equivalence", 0, oracle_equivalence},
      {"photon_wave", "Photon wave suite", kBudgetPhoton, photon_wave},
      {"subspace_dynamics", "Subspace dynamics suite", kBudgetSubspace, subspace_dynamics},
  };
  std::vector<std::string> selected(argv + 1, argv + argc);
  int failures = 0, ran = 0;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Verdict verdict;
    try {
      verdict = c.run();
    } catch (const std::exception& e) {
      verdict.pass = false;
      verdict.detail = std::string("threw: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0) verdict.require(elapsed < c.budget_s, "runtime " + fmt("%.2f", elapsed) + " s < " + fmt("%.0f", c.budget_s) + " s");
    std::printf("%s %s [%s]: %s (%.2f s)\n", verdict.pass ? "PASS" : "FAIL", c.id, c.title, verdict.detail.c_str(), elapsed);
    if (!verdict.pass) ++failures;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion matched\n");
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
