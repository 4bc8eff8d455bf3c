#pragma once

#include <complex>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

/// A homogeneous uniaxial layer in machine precision.
struct Layer {
  double theta = 0.0;  // allowed axis (cos theta, sin theta)
  double xi = 0.0;
  cd eps_allowed{1.0, 0.0};
  cd eps_blocked{1.0, 0.0};
};

struct Amplitudes {
  cd t1, t2, r1, r2;
  double flux() const { return std::norm(t1) + std::norm(t2) + std::norm(r1) + std::norm(r2); }
};

/// Scattering-matrix recursion (Redheffer star products of interface and
/// propagation blocks) for vacuum | layers... | vacuum, incident along axis 1.
/// Transmitted amplitudes refer to the exit face, reflected to the entry face.
Amplitudes scatter(const std::vector<Layer>& layers);

/// theta_k = k pi / 2N, k = 1..N.
std::vector<Layer> zeno_layers(int n, double xi, cd eps_allowed, cd eps_blocked);

}  // namespace oracle
