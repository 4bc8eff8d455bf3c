#include "zeno/photon/photon_wave.hpp"

#include <algorithm>
#include <cmath>

#include "zeno/error.hpp"

namespace zeno::photon {

namespace {
constexpr Complex kI(0.0, 1.0);

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((i == 0 && j == 1) || (i == 1 && j == 2) || (i == 2 && j == 0)) ? 1 : -1;
}

// Written out: Eigen's cross() conjugates complex operands.
CVec3 cross(const Vec3& a, const CVec3& b) {
  return {a.y() * b.z() - a.z() * b.y(), a.z() * b.x() - a.x() * b.z(), a.x() * b.y() - a.y() * b.x()};
}
}  // namespace

Spin1Matrices spin1_matrices() {
  Spin1Matrices m;
  for (int i = 0; i < 3; ++i) {
    m.s[static_cast<std::size_t>(i)].setZero();
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) m.s[static_cast<std::size_t>(i)](j, k) = -kI * static_cast<double>(levi_civita(i, j, k));
    }
  }
  return m;
}

PlaneWaveField::PlaneWaveField(Vec3 wavevector, CVec3 polarization)
    : k_(std::move(wavevector)), e_(std::move(polarization)) {
  const double scale = std::max(k_.norm() * e_.norm(), 1e-300);
  if (std::abs(k_.cast<Complex>().dot(e_)) > 1e-12 * scale) {
    throw InvalidPolarization("polarization is not transverse to the wavevector (div F != 0)");
  }
}

PlaneWaveField PlaneWaveField::circular(double omega) {
  return {Vec3(0.0, 0.0, omega), CVec3(Complex(1.0, 0.0), kI, 0.0) / std::sqrt(2.0)};
}

PlaneWaveField PlaneWaveField::linear(double omega) { return {Vec3(0.0, 0.0, omega), CVec3(1.0, 0.0, 0.0)}; }

Complex PlaneWaveField::phase(const SpaceTime& x) const { return std::exp(kI * (k_.dot(x.r) - omega() * x.t)); }

CVec3 PlaneWaveField::value(const SpaceTime& x) const { return e_ * phase(x); }

CVec3 PlaneWaveField::time_derivative(const SpaceTime& x) const { return -kI * omega() * value(x); }

CVec3 PlaneWaveField::curl(const SpaceTime& x) const { return kI * cross(k_, e_) * phase(x); }

Complex PlaneWaveField::divergence(const SpaceTime& x) const { return kI * k_.cast<Complex>().dot(e_) * phase(x); }

double schroedinger_curl_residual(const PlaneWaveField& w, std::span<const SpaceTime> samples) {
  double worst = 0.0;
  for (const SpaceTime& x : samples) {
    worst = std::max(worst, (kI * w.time_derivative(x) - w.curl(x)).norm());
  }
  return worst;
}

double schroedinger_matrix_residual(const PlaneWaveField& w, std::span<const SpaceTime> samples) {
  const Spin1Matrices spin = spin1_matrices();
  // p = -i grad acts on exp(i k·r) as multiplication by k.
  const CMat3 hamiltonian = spin.dot(w.wavevector());
  double worst = 0.0;
  for (const SpaceTime& x : samples) {
    worst = std::max(worst, (kI * w.time_derivative(x) - hamiltonian * w.value(x)).norm());
  }
  return worst;
}

double maxwell_split_check(const PlaneWaveField& w, std::span<const SpaceTime> samples) {
  double worst = 0.0;
  for (const SpaceTime& x : samples) {
    const CVec3 dF = w.time_derivative(x);
    const CVec3 curl_F = w.curl(x);
    const Complex div_F = w.divergence(x);
    // k is real, so Re/Im commute with the derivatives.
    const Vec3 dE = dF.real(), dB = dF.imag();
    const Vec3 curl_E = curl_F.real(), curl_B = curl_F.imag();
    const double ampere = (dE - curl_B).squaredNorm();
    const double faraday = (dB + curl_E).squaredNorm();
    worst = std::max({worst, std::sqrt(ampere + faraday), std::abs(div_F.real()), std::abs(div_F.imag())});
  }
  return worst;
}

double curl_residual_finite_difference(const FieldFunction& field, std::span<const SpaceTime> samples, double h) {
  double worst = 0.0;
  for (const SpaceTime& x : samples) {
    auto shifted = [&](int axis, double step) {
      SpaceTime y = x;
      if (axis < 3) {
        y.r[axis] += step;
      } else {
        y.t += step;
      }
      return field(y);
    };
    // partial[a] = dF/dx_a, a = 0..2, and partial[3] = dF/dt.
    std::array<CVec3, 4> partial;
    for (int a = 0; a < 4; ++a) partial[static_cast<std::size_t>(a)] = (shifted(a, h) - shifted(a, -h)) / (2.0 * h);
    CVec3 curl;
    curl << partial[1](2) - partial[2](1), partial[2](0) - partial[0](2), partial[0](1) - partial[1](0);
    worst = std::max(worst, (kI * partial[3] - curl).norm());
  }
  return worst;
}

FieldMap action(DiscreteSymmetry sym) {
  switch (sym) {
    case DiscreteSymmetry::C:
      return {-1, false};
    case DiscreteSymmetry::T:
      return {1, true};
    case DiscreteSymmetry::P:
      return {-1, true};
  }
  return {};
}

CVec3 apply_symmetry(DiscreteSymmetry sym, const CVec3& field) { return action(sym)(field); }

FieldMap compose(std::span<const DiscreteSymmetry> ops) {
  FieldMap total;
  for (DiscreteSymmetry op : ops) total = total.after(action(op));
  return total;
}

FieldMap compose(std::initializer_list<DiscreteSymmetry> ops) {
  return compose(std::span<const DiscreteSymmetry>(ops.begin(), ops.size()));
}

}  // namespace zeno::photon
