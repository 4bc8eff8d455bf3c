#pragma once

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <vector>

namespace zeno::subspace {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Hermitian Hamiltonian on C^n (hbar = 1). P projects onto the first m
/// coordinates, Q onto the remaining n - m.
struct MonsterSystem {
  Matrix h_tot;
  int m = 1;

  int n() const { return static_cast<int>(h_tot.rows()); }
  /// Shape checks only; hermiticity is checked by partition().
  void validate() const;
};

/// H = P h P, V = P h Q, H' = Q h Q.
struct SubspaceBlocks {
  Matrix h;
  Matrix v;
  Matrix hp;

  int m() const { return static_cast<int>(h.rows()); }
  int n() const { return static_cast<int>(h.rows() + hp.rows()); }
  Matrix reassemble() const;
};

/// Max absolute row sum.
double inf_norm(const Matrix& a);

/// Throws NotHermitian if ||h - h^dagger||_inf > 1e-12.
SubspaceBlocks partition(const MonsterSystem& sys);

/// Sigma(s) = -i V exp(-i H' s) V^dagger with H' diagonalized once.
class MemoryKernel {
 public:
  explicit MemoryKernel(const SubspaceBlocks& blocks);
  Matrix operator()(double s) const;

 private:
  Matrix coupling_;  // V U, with H' = U diag(lambda) U^dagger
  Eigen::VectorXd lambda_;
};

Matrix memory_kernel(const SubspaceBlocks& blocks, double s);

struct Trajectory {
  std::vector<double> times;
  std::vector<Vector> states;
};

/// i dpsi/dt = H psi + int_0^t Sigma(s) psi(t - s) ds, from psi(0) = psi0 with
/// no initial Q component. Trapezoidal history, trapezoidal (Crank-Nicolson)
/// time stepping on a uniform grid; t_end must be a multiple of dt.
/// Throws StepTooLarge if dt ||h_tot||_inf > 0.1.
Trajectory evolve_nonlocal(const SubspaceBlocks& blocks, const Vector& psi0, double t_end, double dt);

/// P exp(-i h_tot t) Psi0, via the Hermitian eigendecomposition.
Vector evolve_full(const MonsterSystem& sys, const Vector& psi0_full, double t);

/// Delta - (i/2) Gamma = V (E - H' + i eta)^{-1} V^dagger.
struct SelfEnergy {
  Matrix delta;
  Matrix gamma;
  double eta = 0.0;
};

SelfEnergy self_energy(const SubspaceBlocks& blocks, double energy, double eta);

/// 2 pi V delta_eta(E - H') V^dagger with the Lorentzian (eta/pi)/(x^2 + eta^2).
Matrix lorentzian_rate(const SubspaceBlocks& blocks, double energy, double eta);

/// H + Delta(E) - (i/2) Gamma(E).
Matrix effective_hamiltonian(const SubspaceBlocks& blocks, double energy, double eta);

struct FixedEnergyCheck {
  Complex eigenvalue;
  /// ||(H_eff(Re z) - z) psi|| / ||psi|| for the eigenpair (z, psi) of H_eff(E0) nearest E0.
  double residual = 0.0;
};

FixedEnergyCheck fixed_energy_check(const SubspaceBlocks& blocks, double energy, double eta);

/// Random Hermitian system with ||h_tot||_inf = norm.
MonsterSystem random_system(int n, int m, std::uint64_t seed, double norm = 1.0);

/// Max over the time grid of ||psi_nonlocal(t) - P psi_full(t)||.
double max_deviation(const MonsterSystem& sys, const Vector& psi0, double t_end, double dt);

}  // namespace zeno::subspace
