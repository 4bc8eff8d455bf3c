#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "zeno/error.hpp"
#include "zeno/photon/photon_wave.hpp"

using namespace zeno::photon;

namespace {

const Complex kI(0.0, 1.0);

std::vector<SpaceTime> random_samples(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<SpaceTime> out;
  for (int i = 0; i < count; ++i) out.push_back({Vec3(u(rng), u(rng), u(rng)), u(rng)});
  return out;
}

PlaneWaveField random_transverse_wave(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  const Vec3 k(g(rng), g(rng), g(rng));
  CVec3 e(Complex(g(rng), g(rng)), Complex(g(rng), g(rng)), Complex(g(rng), g(rng)));
  const CVec3 khat = k.normalized().cast<Complex>();
  e -= khat * khat.dot(e);  // dot() conjugates its left argument; khat is real
  return {k, e};
}

}  // namespace

TEST_CASE("spin matrices are -i epsilon_ijk") {
  const auto s = spin1_matrices();
  CHECK(s[2](0, 0) == Complex(0, 0));
  CHECK(s[2](0, 1) == -kI);
  CHECK(s[2](0, 2) == Complex(0, 0));
  CHECK(s[0](1, 2) == -kI);
  CHECK(s[0](2, 1) == kI);
  for (std::size_t i = 0; i < 3; ++i) CHECK(s[i] == s[i].adjoint());
}

TEST_CASE("spin-1 commutators and Casimir hold exactly") {
  const auto s = spin1_matrices();
  for (std::size_t a = 0; a < 3; ++a) {
    const std::size_t b = (a + 1) % 3, c = (a + 2) % 3;
    CHECK(s[a] * s[b] - s[b] * s[a] == kI * s[c]);
  }
  CHECK(s[0] * s[0] + s[1] * s[1] + s[2] * s[2] == 2.0 * CMat3::Identity());
}

TEST_CASE("circularly polarized plane waves solve the photon equation") {
  const auto samples = random_samples(1, 20);
  for (double omega : {0.5, 1.0, 7.0}) {
    const auto w = PlaneWaveField::circular(omega);
    CHECK(schroedinger_curl_residual(w, samples) < 1e-12);
    CHECK(schroedinger_matrix_residual(w, samples) < 1e-12);
    CHECK(maxwell_split_check(w, samples) < 1e-12);
  }
}

TEST_CASE("a static uniform field is a trivial solution") {
  const PlaneWaveField w(Vec3::Zero(), CVec3(1.0, 2.0, 0.0));
  const auto samples = random_samples(2, 5);
  CHECK(schroedinger_curl_residual(w, samples) == 0.0);
  CHECK(maxwell_split_check(w, samples) == 0.0);
}

TEST_CASE("linear polarization is not an eigenmode") {
  const double omega = 2.0;
  const auto samples = random_samples(3, 10);
  CHECK(schroedinger_curl_residual(PlaneWaveField::linear(omega), samples) == Catch::Approx(omega * std::sqrt(2.0)));
}

TEST_CASE("longitudinal polarization is rejected") {
  CHECK_THROWS_AS(PlaneWaveField(Vec3(0, 0, 1), CVec3(0, 0, 1)), zeno::InvalidPolarization);
  CHECK_THROWS_AS(PlaneWaveField(Vec3(1, 1, 0), CVec3(1, 0, 0)), zeno::InvalidPolarization);
}

TEST_CASE("matrix and vector forms agree on random transverse waves") {
  std::mt19937_64 rng(11);
  const auto samples = random_samples(4, 8);
  for (int i = 0; i < 50; ++i) {
    const PlaneWaveField w = random_transverse_wave(rng);
    const double vector_form = schroedinger_curl_residual(w, samples);
    const double matrix_form = schroedinger_matrix_residual(w, samples);
    CHECK(std::abs(vector_form - matrix_form) <= 1e-12 * std::max(1.0, vector_form));
    CHECK(std::abs(maxwell_split_check(w, samples) - vector_form) <= 1e-12 * std::max(1.0, vector_form));
  }
}

TEST_CASE("finite differences reproduce the analytic residual to O(h^2)") {
  const auto samples = random_samples(5, 4);
  const auto w = PlaneWaveField::circular(1.3);
  const FieldFunction f = [&](const SpaceTime& x) { return w.value(x); };
  CHECK(curl_residual_finite_difference(f, samples, 1e-3) < 1e-8);

  const auto lin = PlaneWaveField::linear(1.3);
  const FieldFunction g = [&](const SpaceTime& x) { return lin.value(x); };
  const double exact = 1.3 * std::sqrt(2.0);
  const double coarse = std::abs(curl_residual_finite_difference(g, samples, 2e-2) - exact);
  const double fine = std::abs(curl_residual_finite_difference(g, samples, 1e-2) - exact);
  CHECK(coarse < 1e-3);
  CHECK(coarse / fine == Catch::Approx(4.0).epsilon(0.05));
}

TEST_CASE("C, P, T act as tabulated") {
  const CVec3 f(Complex(1, 2), Complex(-3, 0.5), Complex(0, -1));
  CHECK(apply_symmetry(DiscreteSymmetry::C, f) == -f);
  CHECK(apply_symmetry(DiscreteSymmetry::T, f) == CVec3(f.conjugate()));
  const CVec3 p = apply_symmetry(DiscreteSymmetry::P, f);
  // Parity: E -> -E, B -> B.
  CHECK(p.real() == -f.real());
  CHECK(p.imag() == f.imag());
}

TEST_CASE("discrete symmetries: involutions, commuting, TCP = 1") {
  const std::array<DiscreteSymmetry, 3> all = {DiscreteSymmetry::C, DiscreteSymmetry::P, DiscreteSymmetry::T};
  for (auto a : all) {
    CHECK(compose({a, a}).is_identity());
    for (auto b : all) CHECK(compose({a, b}) == compose({b, a}));
  }
  CHECK(compose({DiscreteSymmetry::T, DiscreteSymmetry::C, DiscreteSymmetry::P}).is_identity());
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  const FieldMap tcp = compose({DiscreteSymmetry::T, DiscreteSymmetry::C, DiscreteSymmetry::P});
  for (int i = 0; i < 10; ++i) {
    const CVec3 f(Complex(g(rng), g(rng)), Complex(g(rng), g(rng)), Complex(g(rng), g(rng)));
    CHECK(tcp(f) == f);
  }
}
