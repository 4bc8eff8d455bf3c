#include <CLI11.hpp>
#include <Eigen/Eigenvalues>

#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "zeno/app/config.hpp"
#include "zeno/app/experiment.hpp"
#include "zeno/app/output.hpp"
#include "zeno/app/selftest.hpp"
#include "zeno/error.hpp"
#include "zeno/optics/baseline.hpp"
#include "zeno/photon/photon_wave.hpp"
#include "zeno/subspace/subspace_dynamics.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;

struct RunOptions {
  std::string config_path;
  std::vector<std::pair<std::string, std::string>> overrides;
};

int run_command(const RunOptions& opts) {
  zeno::app::ExperimentConfig config =
      opts.config_path.empty() ? zeno::app::ExperimentConfig{} : zeno::app::load_config(opts.config_path);
  for (const auto& [key, value] : opts.overrides) zeno::app::apply_setting(config, key, value);
  config.validate();
  const zeno::app::ExperimentResult result = zeno::app::run_experiment(config);
  zeno::app::write_output(result, config);
  if (result.failure) {
    std::cerr << "error: N=" << result.failure->n << ": " << result.failure->message << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

int baseline_command(int n_max, int digits) {
  if (n_max < 1) throw zeno::ValidationError("--n-max must be >= 1");
  const zeno::hp::PrecisionContext ctx(digits);
  std::cout << "N,P_projection\n";
  for (int n = 1; n <= n_max; ++n) {
    std::cout << n << ',' << zeno::app::format_value(zeno::optics::projection_probability(n, ctx)) << '\n';
  }
  return kExitOk;
}

int wave_check_command() {
  using namespace zeno::photon;
  const std::vector<SpaceTime> samples = {{Vec3(0.0, 0.0, 0.0), 0.0},
                                          {Vec3(0.3, -1.2, 2.5), 0.7},
                                          {Vec3(-4.0, 2.0, 1.0), -3.1},
                                          {Vec3(10.0, 0.5, -7.5), 12.0}};
  const auto spin = spin1_matrices();
  double spin_defect = (spin[0] * spin[0] + spin[1] * spin[1] + spin[2] * spin[2] - 2.0 * CMat3::Identity()).cwiseAbs().maxCoeff();
  for (std::size_t a = 0; a < 3; ++a) {
    const std::size_t b = (a + 1) % 3, c = (a + 2) % 3;
    spin_defect = std::max(spin_defect, (spin[a] * spin[b] - spin[b] * spin[a] - Complex(0, 1) * spin[c]).cwiseAbs().maxCoeff());
  }
  const auto circular = PlaneWaveField::circular(1.7);
  const double curl = schroedinger_curl_residual(circular, samples);
  const double matrix = schroedinger_matrix_residual(circular, samples);
  const double split = maxwell_split_check(circular, samples);
  const double linear = schroedinger_curl_residual(PlaneWaveField::linear(1.7), samples);
  const bool tcp = compose({DiscreteSymmetry::T, DiscreteSymmetry::C, DiscreteSymmetry::P}).is_identity();

  std::printf("spin algebra defect        %.3e\n", spin_defect);
  std::printf("circular curl residual     %.3e\n", curl);
  std::printf("circular matrix residual   %.3e\n", matrix);
  std::printf("circular Maxwell residual  %.3e\n", split);
  std::printf("linear curl residual       %.6f (expected %.6f)\n", linear, 1.7 * std::numbers::sqrt2);
  std::printf("T C P identity             %s\n", tcp ? "yes" : "no");
  const bool ok = spin_defect == 0.0 && std::max({curl, matrix, split}) <= 1e-12 && tcp;
  return ok ? kExitOk : kExitNumerical;
}

int subspace_demo_command(int n, int m, std::uint64_t seed, double dt, double t_end) {
  using namespace zeno::subspace;
  const MonsterSystem sys = random_system(n, m, seed);
  const SubspaceBlocks blocks = partition(sys);
  Vector psi0 = Vector::Zero(m);
  psi0(0) = 1.0;

  std::printf("n=%d m=%d seed=%llu t_end=%g\n", n, m, static_cast<unsigned long long>(seed), t_end);
  std::printf("%-12s %-14s %s\n", "dt", "max_deviation", "ratio");
  double previous = 0.0;
  for (int level = 0; level < 3; ++level) {
    const double step = dt / static_cast<double>(1 << level);
    const double dev = max_deviation(sys, psi0, t_end, step);
    if (level == 0) {
      std::printf("%-12.6g %-14.6e -\n", step, dev);
    } else {
      std::printf("%-12.6g %-14.6e %.4f\n", step, dev, previous / dev);
    }
    previous = dev;
  }

  std::printf("\n%-8s %-8s %-14s %-14s %s\n", "E", "eta", "min eig Gamma", "Lorentzian err", "fixed-energy residual");
  for (double energy : {-0.5, 0.0, 0.5}) {
    for (double eta : {1e-1, 1e-2}) {
      const SelfEnergy se = self_energy(blocks, energy, eta);
      const double min_eig = Eigen::SelfAdjointEigenSolver<Matrix>(se.gamma).eigenvalues().minCoeff();
      const double lorentz = (se.gamma - lorentzian_rate(blocks, energy, eta)).cwiseAbs().maxCoeff();
      const FixedEnergyCheck fixed = fixed_energy_check(blocks, energy, eta);
      std::printf("%-8g %-8g %-14.6e %-14.6e %.6e\n", energy, eta, min_eig, lorentz, fixed.residual);
    }
  }
  return kExitOk;
}

int selftest_command() {
  bool all = true;
  for (const auto& check : zeno::app::run_selftest()) {
    std::cout << (check.passed ? "PASS " : "FAIL ") << check.name << " (" << check.detail << ")\n";
    all = all && check.passed;
  }
  return all ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polarizer-stack Zeno experiments in arbitrary precision", "zeno"};
  app.require_subcommand(1);

  RunOptions run_opts;
  auto* run = app.add_subcommand("run", "Evaluate P_N over a range of N and write CSV or JSON");
  run->add_option("--config", run_opts.config_path, "key = value configuration file")->check(CLI::ExistingFile);
  auto add_override = [&](const std::string& flag, const std::string& key, const std::string& help) {
    run->add_option_function<std::string>(
        flag, [&run_opts, key](const std::string& value) { run_opts.overrides.emplace_back(key, value); }, help);
  };
  add_override("--n-min", "n_min", "Smallest N (default 1)");
  add_override("--n-max", "n_max", "Largest N (default 20)");
  add_override("--xi", "xi", "Slab thickness omega a / c (default 100)");
  add_override("--eps1", "eps1", "Allowed-axis permittivity, a+bi (default 1)");
  add_override("--eps2", "eps2", "Blocked-axis permittivity, a+bi (default 1+2i)");
  add_override("--digits", "digits", "Working digits or 'auto'");
  add_override("--schedule", "schedule", "'zeno' or comma-separated angles such as pi/4,pi/2");
  add_override("--spacer", "spacer", "Vacuum spacer thickness between polarizers, or 'none'");
  add_override("--out", "output", "Output path (default stdout)");
  add_override("--format", "format", "csv or json");
  add_override("--threads", "threads", "Worker threads, 0 for all cores");

  int baseline_n_max = 20;
  int baseline_digits = 50;
  auto* baseline = app.add_subcommand("baseline", "Projection-postulate probabilities only");
  baseline->add_option("--n-max", baseline_n_max, "Largest N")->capture_default_str();
  baseline->add_option("--digits", baseline_digits, "Working digits")->capture_default_str();

  auto* wave = app.add_subcommand("wave", "Photon wave-function checks");
  wave->require_subcommand(1);
  auto* wave_check = wave->add_subcommand("check", "Print the plane-wave residuals");

  int demo_n = 6, demo_m = 2;
  std::uint64_t demo_seed = 1;
  double demo_dt = 0.05, demo_t_end = 20.0;
  auto* sub = app.add_subcommand("subspace", "Projected subspace dynamics");
  sub->require_subcommand(1);
  auto* demo = sub->add_subcommand("demo", "Deviation table and self-energy spot checks");
  demo->add_option("--n", demo_n, "Full dimension")->capture_default_str();
  demo->add_option("--m", demo_m, "Subspace dimension")->capture_default_str();
  demo->add_option("--seed", demo_seed, "Random seed")->capture_default_str();
  demo->add_option("--dt", demo_dt, "Coarsest time step")->capture_default_str();
  demo->add_option("--t-end", demo_t_end, "Final time")->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "Run the built-in example checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitValidation;
  }

  try {
    if (run->parsed()) return run_command(run_opts);
    if (baseline->parsed()) return baseline_command(baseline_n_max, baseline_digits);
    if (wave_check->parsed()) return wave_check_command();
    if (demo->parsed()) return subspace_demo_command(demo_n, demo_m, demo_seed, demo_dt, demo_t_end);
    if (selftest->parsed()) return selftest_command();
  } catch (const zeno::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.category() == zeno::Error::Category::kNumerical ? kExitNumerical : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitValidation;
}
