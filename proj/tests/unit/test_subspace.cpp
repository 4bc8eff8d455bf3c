#include <catch_amalgamated.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

#include "zeno/error.hpp"
#include "zeno/subspace/subspace_dynamics.hpp"

using namespace zeno::subspace;

namespace {

const Complex kI(0.0, 1.0);

double max_abs(const Matrix& a) { return a.cwiseAbs().maxCoeff(); }

Matrix scalar_pair(double a, Complex g, double b) {
  Matrix h(2, 2);
  h << a, g, std::conj(g), b;
  return h;
}

}  // namespace

TEST_CASE("partition extracts blocks and reassembles bitwise") {
  const Matrix h = scalar_pair(0.4, Complex(0.1, -0.3), -0.2);
  const SubspaceBlocks blocks = partition({h, 1});
  CHECK(blocks.h(0, 0) == h(0, 0));
  CHECK(blocks.v(0, 0) == h(0, 1));
  CHECK(blocks.hp(0, 0) == h(1, 1));
  const MonsterSystem big = random_system(9, 3, 4);
  CHECK(partition(big).reassemble() == big.h_tot);
}

TEST_CASE("block-diagonal Hamiltonians decouple") {
  Matrix h = Matrix::Zero(4, 4);
  h(0, 0) = 1.0;
  h(1, 1) = -0.5;
  h(2, 3) = Complex(0.2, 0.1);
  h(3, 2) = Complex(0.2, -0.1);
  const SubspaceBlocks blocks = partition({h, 2});
  CHECK(max_abs(blocks.v) == 0.0);
  CHECK(max_abs(memory_kernel(blocks, 1.3)) == 0.0);
  const SelfEnergy se = self_energy(blocks, 0.1, 0.01);
  CHECK(max_abs(se.delta) == 0.0);
  CHECK(max_abs(se.gamma) == 0.0);
}

TEST_CASE("partition validates shape and hermiticity") {
  Matrix h = Matrix::Identity(3, 3);
  CHECK_THROWS_AS(partition({h, 0}), zeno::ValidationError);
  CHECK_THROWS_AS(partition({h, 3}), zeno::ValidationError);
  h(0, 1) = 1e-9;
  CHECK_THROWS_AS(partition({h, 1}), zeno::NotHermitian);
}

TEST_CASE("memory kernel closed forms") {
  const double g = 0.3, w = 0.7;
  const SubspaceBlocks blocks = partition({scalar_pair(0.1, g, w), 1});
  for (double s : {0.0, 0.5, 3.0}) {
    CHECK(std::abs(memory_kernel(blocks, s)(0, 0) - (-kI * g * g * std::exp(-kI * w * s))) < 1e-15);
  }
  const SubspaceBlocks wide = partition(random_system(6, 2, 9));
  CHECK(max_abs(memory_kernel(wide, 0.0) - (-kI * wide.v * wide.v.adjoint())) < 1e-14);
  CHECK_THROWS_AS(memory_kernel(wide, -1.0), zeno::ValidationError);
}

TEST_CASE("without coupling the non-local equation is plain evolution") {
  Matrix h = Matrix::Zero(3, 3);
  h(0, 0) = 0.8;
  h(1, 1) = -0.3;
  h(2, 2) = 0.5;
  h(0, 1) = h(1, 0) = 0.1;
  const SubspaceBlocks blocks = partition({h, 2});
  Vector psi0(2);
  psi0 << 1.0, 0.0;
  const double dt = 0.05;
  const Trajectory traj = evolve_nonlocal(blocks, psi0, 5.0, dt);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(blocks.h);
  const Vector phases = (-kI * 5.0 * eig.eigenvalues().cast<Complex>()).array().exp();
  const Vector exact = eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint() * psi0;
  CHECK((traj.states.back() - exact).norm() < 5.0 * dt * dt);
}

TEST_CASE("non-local evolution converges at second order to the projected exact evolution") {
  const MonsterSystem sys = random_system(4, 2, 21);
  Vector psi0(2);
  psi0 << Complex(0.6, 0.0), Complex(0.0, 0.8);
  const double coarse = max_deviation(sys, psi0, 10.0, 0.04);
  const double fine = max_deviation(sys, psi0, 10.0, 0.02);
  CHECK(coarse / fine >= 3.5);
  CHECK(coarse / fine <= 4.5);
}

TEST_CASE("subspace norm never grows") {
  const MonsterSystem sys = random_system(8, 3, 5);
  Vector psi0 = Vector::Zero(3);
  psi0(1) = 1.0;
  const Trajectory traj = evolve_nonlocal(partition(sys), psi0, 20.0, 0.05);
  double worst = 0.0;
  for (const Vector& psi : traj.states) worst = std::max(worst, psi.norm());
  CHECK(worst <= 1.0 + 1e-6);
  CHECK(traj.states.back().norm() < 1.0);
}

TEST_CASE("step size and grid are validated") {
  const SubspaceBlocks blocks = partition(random_system(4, 2, 1));
  const Vector psi0 = Vector::Ones(2);
  CHECK_THROWS_AS(evolve_nonlocal(blocks, psi0, 1.0, 0.2), zeno::StepTooLarge);
  CHECK_THROWS_AS(evolve_nonlocal(blocks, psi0, 1.0, 0.03), zeno::ValidationError);
  CHECK_THROWS_AS(evolve_nonlocal(blocks, psi0, 1.0, 0.0), zeno::ValidationError);
}

TEST_CASE("full evolution is unitary and phases eigenvectors") {
  const MonsterSystem sys = random_system(7, 2, 13);
  Vector psi = Vector::Zero(7);
  psi(0) = 1.0;
  CHECK((evolve_full(sys, psi, 0.0) - psi.head(2)).norm() < 1e-15);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sys.h_tot);
  const Vector v = eig.eigenvectors().col(3);
  const Vector moved = evolve_full(sys, v, 2.5);
  CHECK((moved - std::exp(-kI * 2.5 * eig.eigenvalues()(3)) * v.head(2)).norm() < 1e-12);
  // Unitarity: evolve with m = n - 1 plus the last coordinate.
  MonsterSystem almost{sys.h_tot, 6};
  const Vector w = evolve_full(almost, v, 3.0);
  CHECK(std::abs(w.squaredNorm() + std::norm(v(6)) - 1.0) < 1e-12);
}

TEST_CASE("scalar self-energy matches the resolvent closed form") {
  const double g = 0.25, w = 0.3;
  const SubspaceBlocks blocks = partition({scalar_pair(-0.2, g, w), 1});
  for (double energy : {-1.0, 0.29, 2.0}) {
    for (double eta : {1e-3, 0.1}) {
      const SelfEnergy se = self_energy(blocks, energy, eta);
      const double x = energy - w, den = x * x + eta * eta;
      CHECK(std::abs(se.delta(0, 0) - g * g * x / den) < 1e-12 * std::max(1.0, g * g / eta));
      CHECK(std::abs(se.gamma(0, 0) - 2 * g * g * eta / den) < 1e-12 * std::max(1.0, g * g / eta));
      const Matrix heff = effective_hamiltonian(blocks, energy, eta);
      CHECK(heff(0, 0).imag() == Catch::Approx(-se.gamma(0, 0).real() / 2));
    }
  }
}

TEST_CASE("rates are positive, Hermitian, and equal the Lorentzian form") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> e_dist(-1.5, 1.5), log_eta(-3, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + trial % 10;
    const SubspaceBlocks blocks = partition(random_system(n, 1 + trial % 3, 500 + trial));
    const double energy = e_dist(rng), eta = std::pow(10.0, log_eta(rng));
    const SelfEnergy se = self_energy(blocks, energy, eta);
    CHECK(max_abs(se.delta - se.delta.adjoint()) < 1e-12);
    CHECK(max_abs(se.gamma - se.gamma.adjoint()) < 1e-12);
    const double scale = std::max(1.0, max_abs(se.gamma));
    CHECK(Eigen::SelfAdjointEigenSolver<Matrix>(se.gamma).eigenvalues().minCoeff() >= -1e-12 * scale);
    CHECK(max_abs(se.gamma - lorentzian_rate(blocks, energy, eta)) <= 1e-12 * scale);
    const Eigen::VectorXcd ev = Eigen::ComplexEigenSolver<Matrix>(effective_hamiltonian(blocks, energy, eta)).eigenvalues();
    CHECK(ev.imag().maxCoeff() <= 1e-12 * scale);
  }
}

TEST_CASE("small eta recovers the principal-value shift with vanishing rate") {
  Matrix h = Matrix::Zero(4, 4);
  h(0, 0) = 0.0;
  h(1, 1) = 2.5;
  h(2, 2) = -2.0;
  h(3, 3) = 3.0;
  h(0, 1) = h(1, 0) = 0.2;
  h(0, 2) = h(2, 0) = 0.3;
  h(0, 3) = h(3, 0) = 0.1;
  const SubspaceBlocks blocks = partition({h, 1});
  const double energy = 0.1;
  const Matrix pv = blocks.v * (energy * Matrix::Identity(3, 3) - blocks.hp).inverse() * blocks.v.adjoint();
  double previous_delta = 1.0, previous_gamma = 1.0;
  for (double eta : {1e-1, 1e-2, 1e-3}) {
    const SelfEnergy se = self_energy(blocks, energy, eta);
    const double d = max_abs(se.delta - pv), g = max_abs(se.gamma);
    CHECK(d < previous_delta);
    CHECK(g < previous_gamma);
    CHECK(g <= 1.0 * eta);
    previous_delta = d;
    previous_gamma = g;
  }
}

TEST_CASE("effective Hamiltonian is Hermitian without rates") {
  // E far outside spec(H') and tiny eta: Gamma ~ 0.
  const SubspaceBlocks blocks = partition({scalar_pair(0.0, 0.1, 5.0), 1});
  const Matrix heff = effective_hamiltonian(blocks, 0.0, 1e-12);
  CHECK(std::abs(heff(0, 0).imag()) < 1e-12);
}

TEST_CASE("fixed-energy eigenpairs are nearly self-consistent for weak coupling") {
  const SubspaceBlocks blocks = partition({scalar_pair(0.0, 0.05, 3.0), 1});
  const FixedEnergyCheck check = fixed_energy_check(blocks, 0.0, 1e-3);
  CHECK(check.residual < 1e-3);
  CHECK(check.eigenvalue.imag() <= 0.0);
}
