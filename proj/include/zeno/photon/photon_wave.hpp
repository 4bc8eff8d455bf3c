#pragma once

#include <Eigen/Core>

#include <array>
#include <complex>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace zeno::photon {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;
using CMat3 = Eigen::Matrix3cd;

/// Spin-1 matrices with (S_i)_jk = -i epsilon_ijk.
struct Spin1Matrices {
  std::array<CMat3, 3> s;

  const CMat3& operator[](std::size_t i) const { return s[i]; }
  /// S·v for a real 3-vector.
  CMat3 dot(const Vec3& v) const { return v.x() * s[0] + v.y() * s[1] + v.z() * s[2]; }
};

Spin1Matrices spin1_matrices();

/// A point (r, t) at which a field is sampled. Units with c = 1.
struct SpaceTime {
  Vec3 r = Vec3::Zero();
  double t = 0.0;
};

/// F(r, t) = e · exp(i(k·r - omega t)), omega = |k|; E = Re F, B = Im F.
class PlaneWaveField {
 public:
  /// Throws InvalidPolarization unless k·e = 0 (relative tolerance 1e-12).
  PlaneWaveField(Vec3 wavevector, CVec3 polarization);

  /// (e1 + i e2)/sqrt(2) travelling along e3 with angular frequency omega.
  static PlaneWaveField circular(double omega);
  static PlaneWaveField linear(double omega);

  const Vec3& wavevector() const noexcept { return k_; }
  const CVec3& polarization() const noexcept { return e_; }
  double omega() const noexcept { return k_.norm(); }

  CVec3 value(const SpaceTime& x) const;
  /// dF/dt, exact.
  CVec3 time_derivative(const SpaceTime& x) const;
  /// curl F, exact.
  CVec3 curl(const SpaceTime& x) const;
  /// div F, exact.
  Complex divergence(const SpaceTime& x) const;

 private:
  Complex phase(const SpaceTime& x) const;
  Vec3 k_;
  CVec3 e_;
};

/// max over samples of |i dF/dt - curl F| (vector form of the photon equation).
double schroedinger_curl_residual(const PlaneWaveField& w, std::span<const SpaceTime> samples);

/// Same equation in spin-matrix form: max |i dpsi/dt - (S·p) psi| with p = -i grad.
double schroedinger_matrix_residual(const PlaneWaveField& w, std::span<const SpaceTime> samples);

/// Splits F into E = Re F, B = Im F and returns the max over samples of
/// max(|(dE/dt - curl B, dB/dt + curl E)|, |div E|, |div B|).
double maxwell_split_check(const PlaneWaveField& w, std::span<const SpaceTime> samples);

/// Any field given pointwise; used with finite differences.
using FieldFunction = std::function<CVec3(const SpaceTime&)>;

/// Central-difference estimate (step h, error O(h^2)) of max |i dF/dt - curl F|.
double curl_residual_finite_difference(const FieldFunction& field, std::span<const SpaceTime> samples, double h);

enum class DiscreteSymmetry { C, P, T };

/// F -> sign · F or sign · F*. Closed under composition.
struct FieldMap {
  int sign = 1;
  bool conjugate = false;

  CVec3 operator()(const CVec3& f) const {
    const CVec3 g = conjugate ? CVec3(f.conjugate()) : f;
    return static_cast<double>(sign) * g;
  }
  bool is_identity() const { return sign == 1 && !conjugate; }
  /// (*this) ∘ inner: apply inner first.
  FieldMap after(const FieldMap& inner) const { return {sign * inner.sign, conjugate != inner.conjugate}; }
  friend bool operator==(const FieldMap&, const FieldMap&) = default;
};

/// C: F -> -F, T: F -> F*, P: F -> -F*.
FieldMap action(DiscreteSymmetry sym);
CVec3 apply_symmetry(DiscreteSymmetry sym, const CVec3& field);
/// Composition written left to right as operators: compose({T, C, P}) = T∘C∘P (P acts first).
FieldMap compose(std::initializer_list<DiscreteSymmetry> ops);
FieldMap compose(std::span<const DiscreteSymmetry> ops);

}  // namespace zeno::photon
