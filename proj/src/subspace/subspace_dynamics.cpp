#include "zeno/subspace/subspace_dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "zeno/error.hpp"

namespace zeno::subspace {

namespace {
constexpr Complex kI(0.0, 1.0);

Matrix diag_sandwich(const Matrix& w, const Eigen::VectorXcd& d) { return w * d.asDiagonal() * w.adjoint(); }

/// H' = U diag(lambda) U^dagger.
Eigen::SelfAdjointEigenSolver<Matrix> diagonalize(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
  if (solver.info() != Eigen::Success) throw Error(Error::Category::kNumerical, "eigendecomposition failed");
  return solver;
}
}  // namespace

void MonsterSystem::validate() const {
  if (h_tot.rows() != h_tot.cols()) throw ValidationError("h_tot must be square");
  if (m < 1 || m >= n()) {
    throw ValidationError("subspace dimension m=" + std::to_string(m) + " must satisfy 1 <= m < n=" + std::to_string(n()));
  }
}

double inf_norm(const Matrix& a) { return a.rows() == 0 ? 0.0 : a.cwiseAbs().rowwise().sum().maxCoeff(); }

Matrix SubspaceBlocks::reassemble() const {
  const Eigen::Index m = h.rows(), q = hp.rows();
  Matrix out(m + q, m + q);
  out.topLeftCorner(m, m) = h;
  out.topRightCorner(m, q) = v;
  out.bottomLeftCorner(q, m) = v.adjoint();
  out.bottomRightCorner(q, q) = hp;
  return out;
}

SubspaceBlocks partition(const MonsterSystem& sys) {
  sys.validate();
  const double defect = inf_norm(sys.h_tot - sys.h_tot.adjoint());
  if (defect > 1e-12) throw NotHermitian("h_tot is not Hermitian: ||h - h^dagger||_inf = " + std::to_string(defect));
  const Eigen::Index m = sys.m, q = sys.n() - sys.m;
  return {sys.h_tot.topLeftCorner(m, m), sys.h_tot.topRightCorner(m, q), sys.h_tot.bottomRightCorner(q, q)};
}

MemoryKernel::MemoryKernel(const SubspaceBlocks& blocks) {
  const auto solver = diagonalize(blocks.hp);
  coupling_ = blocks.v * solver.eigenvectors();
  lambda_ = solver.eigenvalues();
}

Matrix MemoryKernel::operator()(double s) const {
  const Eigen::VectorXcd phases = (-kI * s * lambda_.cast<Complex>()).array().exp();
  return -kI * diag_sandwich(coupling_, phases);
}

Matrix memory_kernel(const SubspaceBlocks& blocks, double s) {
  if (s < 0.0) throw ValidationError("memory kernel needs s >= 0");
  return MemoryKernel(blocks)(s);
}

Trajectory evolve_nonlocal(const SubspaceBlocks& blocks, const Vector& psi0, double t_end, double dt) {
  if (!(dt > 0.0)) throw ValidationError("dt must be positive");
  if (t_end < 0.0) throw ValidationError("t_end must be non-negative");
  if (psi0.size() != blocks.m()) throw ValidationError("psi0 has the wrong dimension");
  const double step_norm = dt * inf_norm(blocks.reassemble());
  if (step_norm > 0.1) {
    throw StepTooLarge("dt ||h_tot||_inf = " + std::to_string(step_norm) + " exceeds 0.1");
  }
  const long steps = std::lround(t_end / dt);
  if (std::abs(static_cast<double>(steps) * dt - t_end) > 1e-9 * std::max(1.0, t_end)) {
    throw ValidationError("t_end must be an integer multiple of dt");
  }

  const MemoryKernel kernel(blocks);
  std::vector<Matrix> sigma;
  sigma.reserve(static_cast<std::size_t>(steps) + 1);
  for (long j = 0; j <= steps; ++j) sigma.push_back(kernel(static_cast<double>(j) * dt));

  // History integral at t_n without its implicit end term dt/2 Sigma(0) psi_n:
  // dt [sum_{j=1}^{n-1} Sigma_j psi_{n-j} + 1/2 Sigma_n psi_0].
  Trajectory out;
  out.times.reserve(static_cast<std::size_t>(steps) + 1);
  out.states.reserve(static_cast<std::size_t>(steps) + 1);
  auto explicit_history = [&](long n) {
    Vector acc = Vector::Zero(psi0.size());
    if (n == 0) return acc;
    for (long j = 1; j < n; ++j) acc += sigma[static_cast<std::size_t>(j)] * out.states[static_cast<std::size_t>(n - j)];
    acc += 0.5 * sigma[static_cast<std::size_t>(n)] * psi0;
    return Vector(dt * acc);
  };

  const Matrix implicit_part = blocks.h + 0.5 * dt * sigma[0];
  const Eigen::Index m = blocks.m();
  const Eigen::PartialPivLU<Matrix> lhs(Matrix::Identity(m, m) + 0.5 * dt * kI * implicit_part);

  out.times.push_back(0.0);
  out.states.push_back(psi0);
  Vector rate = -kI * (implicit_part * psi0);  // dpsi/dt at t_0
  for (long n = 0; n < steps; ++n) {
    const Vector history = explicit_history(n + 1);
    const Vector rhs = out.states.back() + 0.5 * dt * rate - 0.5 * dt * kI * history;
    Vector next = lhs.solve(rhs);
    rate = -kI * (implicit_part * next + history);
    out.times.push_back(static_cast<double>(n + 1) * dt);
    out.states.push_back(std::move(next));
  }
  return out;
}

Vector evolve_full(const MonsterSystem& sys, const Vector& psi0_full, double t) {
  sys.validate();
  if (psi0_full.size() != sys.n()) throw ValidationError("Psi0 has the wrong dimension");
  const auto solver = diagonalize(sys.h_tot);
  const Eigen::VectorXcd phases = (-kI * t * solver.eigenvalues().cast<Complex>()).array().exp();
  const Vector evolved = solver.eigenvectors() * (phases.asDiagonal() * (solver.eigenvectors().adjoint() * psi0_full));
  return evolved.head(sys.m);
}

SelfEnergy self_energy(const SubspaceBlocks& blocks, double energy, double eta) {
  if (!(eta > 0.0)) throw ValidationError("eta must be positive");
  const Eigen::Index q = blocks.hp.rows();
  const Matrix resolvent_arg = Complex(energy, eta) * Matrix::Identity(q, q) - blocks.hp;
  const Matrix g = blocks.v * resolvent_arg.partialPivLu().solve(Matrix(blocks.v.adjoint()));
  SelfEnergy out;
  out.delta = 0.5 * (g + g.adjoint());
  out.gamma = kI * (g - g.adjoint());
  out.eta = eta;
  return out;
}

Matrix lorentzian_rate(const SubspaceBlocks& blocks, double energy, double eta) {
  if (!(eta > 0.0)) throw ValidationError("eta must be positive");
  const auto solver = diagonalize(blocks.hp);
  const Eigen::VectorXd x = energy - solver.eigenvalues().array();
  const Eigen::VectorXd delta_eta = (eta / std::numbers::pi) / (x.array().square() + eta * eta);
  return 2.0 * std::numbers::pi * diag_sandwich(blocks.v * solver.eigenvectors(), delta_eta.cast<Complex>());
}

Matrix effective_hamiltonian(const SubspaceBlocks& blocks, double energy, double eta) {
  const SelfEnergy se = self_energy(blocks, energy, eta);
  return blocks.h + se.delta - 0.5 * kI * se.gamma;
}

FixedEnergyCheck fixed_energy_check(const SubspaceBlocks& blocks, double energy, double eta) {
  Eigen::ComplexEigenSolver<Matrix> solver(effective_hamiltonian(blocks, energy, eta));
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < solver.eigenvalues().size(); ++i) {
    if (std::abs(solver.eigenvalues()[i] - energy) < std::abs(solver.eigenvalues()[best] - energy)) best = i;
  }
  const Complex z = solver.eigenvalues()[best];
  const Vector psi = solver.eigenvectors().col(best);
  const Matrix at_own_energy = effective_hamiltonian(blocks, z.real(), eta);
  return {z, (at_own_energy * psi - z * psi).norm() / psi.norm()};
}

MonsterSystem random_system(int n, int m, std::uint64_t seed, double norm) {
  if (n < 2) throw ValidationError("random system needs n >= 2");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  Matrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Complex(gauss(rng), gauss(rng));
  }
  Matrix h = 0.5 * (a + a.adjoint());
  h *= norm / inf_norm(h);
  // Exact hermiticity after scaling.
  h = (0.5 * (h + h.adjoint())).eval();
  MonsterSystem sys{h, m};
  sys.validate();
  return sys;
}

double max_deviation(const MonsterSystem& sys, const Vector& psi0, double t_end, double dt) {
  const SubspaceBlocks blocks = partition(sys);
  const Trajectory traj = evolve_nonlocal(blocks, psi0, t_end, dt);
  Vector full = Vector::Zero(sys.n());
  full.head(sys.m) = psi0;
  const auto solver = diagonalize(sys.h_tot);
  const Matrix& u = solver.eigenvectors();
  const Vector coeffs = u.adjoint() * full;
  double worst = 0.0;
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const Eigen::VectorXcd phases = (-kI * traj.times[k] * solver.eigenvalues().cast<Complex>()).array().exp();
    const Vector exact = (u * (phases.asDiagonal() * coeffs)).head(sys.m);
    worst = std::max(worst, (traj.states[k] - exact).norm());
  }
  return worst;
}

}  // namespace zeno::subspace
