#pragma once

#include <array>
#include <cstddef>
#include <utility>

#include "zeno/hp/angle.hpp"
#include "zeno/hp/complex.hpp"

namespace zeno::hp {

/// Dense N×N complex matrix with value semantics. Row-major.
template <std::size_t N>
class Matrix {
 public:
  static constexpr std::size_t kSize = N;

  Matrix() = default;
  explicit Matrix(const PrecisionContext& ctx) {
    for (auto& e : entries_) e = HComplex(ctx);
  }

  static Matrix identity(const PrecisionContext& ctx) {
    Matrix m(ctx);
    for (std::size_t i = 0; i < N; ++i) m(i, i) = HComplex(1, 0, ctx);
    return m;
  }

  static Matrix diagonal(const std::array<HComplex, N>& diag, const PrecisionContext& ctx) {
    Matrix m(ctx);
    for (std::size_t i = 0; i < N; ++i) m(i, i) = diag[i];
    return m;
  }

  HComplex& operator()(std::size_t row, std::size_t col) { return entries_[row * N + col]; }
  const HComplex& operator()(std::size_t row, std::size_t col) const { return entries_[row * N + col]; }

  Matrix rounded(const PrecisionContext& ctx) const {
    Matrix m;
    for (std::size_t k = 0; k < N * N; ++k) m.entries_[k] = entries_[k].rounded(ctx);
    return m;
  }

  /// Largest component modulus max(|re|, |im|) over all entries.
  HReal max_entry() const {
    HReal best = entries_[0].max_component();
    for (std::size_t k = 1; k < N * N; ++k) best = max(best, entries_[k].max_component());
    return best;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix m;
    for (std::size_t k = 0; k < N * N; ++k) m.entries_[k] = a.entries_[k] + b.entries_[k];
    return m;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix m;
    for (std::size_t k = 0; k < N * N; ++k) m.entries_[k] = a.entries_[k] - b.entries_[k];
    return m;
  }
  friend Matrix operator*(const HComplex& s, const Matrix& a) {
    Matrix m;
    for (std::size_t k = 0; k < N * N; ++k) m.entries_[k] = s * a.entries_[k];
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.entries_ == b.entries_; }

 private:
  std::array<HComplex, N * N> entries_;
};

template <std::size_t N>
using Vector = std::array<HComplex, N>;

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;
using Vec4 = Vector<4>;

/// A·B with each entry an exactly accumulated dot product rounded once.
template <std::size_t N>
Matrix<N> multiply(const Matrix<N>& a, const Matrix<N>& b, const PrecisionContext& ctx) {
  Matrix<N> out;
  std::array<const HComplex*, N> row{}, col{};
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t k = 0; k < N; ++k) row[k] = &a(i, k);
    for (std::size_t j = 0; j < N; ++j) {
      for (std::size_t k = 0; k < N; ++k) col[k] = &b(k, j);
      out(i, j) = exact_dot(row, col, ctx);
    }
  }
  return out;
}

template <std::size_t N>
Vector<N> apply(const Matrix<N>& a, const Vector<N>& x, const PrecisionContext& ctx) {
  Vector<N> out;
  std::array<const HComplex*, N> row{}, vec{};
  for (std::size_t k = 0; k < N; ++k) vec[k] = &x[k];
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t k = 0; k < N; ++k) row[k] = &a(i, k);
    out[i] = exact_dot(row, vec, ctx);
  }
  return out;
}

template <std::size_t N>
HReal max_entry(const Vector<N>& v) {
  HReal best = v[0].max_component();
  for (std::size_t k = 1; k < N; ++k) best = max(best, v[k].max_component());
  return best;
}

namespace detail {

/// In-place Gaussian elimination with partial pivoting on |a_ik|. Calls
/// on_swap(k, p) for each row interchange and on_eliminate(i, k, factor) for
/// each row update "row i -= factor * row k". Returns false at the first
/// exactly-zero pivot column.
template <std::size_t N, typename OnSwap, typename OnEliminate>
bool eliminate(Matrix<N>& a, OnSwap&& on_swap, OnEliminate&& on_eliminate) {
  for (std::size_t k = 0; k < N; ++k) {
    std::size_t pivot = k;
    HReal best = a(k, k).norm();
    for (std::size_t i = k + 1; i < N; ++i) {
      HReal candidate = a(i, k).norm();
      if (candidate > best) {
        best = std::move(candidate);
        pivot = i;
      }
    }
    if (best.is_zero()) return false;
    if (pivot != k) {
      for (std::size_t j = 0; j < N; ++j) std::swap(a(k, j), a(pivot, j));
      on_swap(k, pivot);
    }
    for (std::size_t i = k + 1; i < N; ++i) {
      if (a(i, k).is_zero()) continue;
      const HComplex factor = a(i, k) / a(k, k);
      for (std::size_t j = k + 1; j < N; ++j) a(i, j) -= factor * a(k, j);
      a(i, k) = a(i, k) - a(i, k);
      on_eliminate(i, k, factor);
    }
  }
  return true;
}

}  // namespace detail

/// Solves A·x = b by Gaussian elimination with partial pivoting.
/// Throws SingularMatrix when a pivot is exactly zero at working precision.
template <std::size_t N>
Vector<N> solve(const Matrix<N>& a_in, const Vector<N>& b_in, const PrecisionContext& ctx) {
  Matrix<N> a = a_in.rounded(ctx);
  Vector<N> b;
  for (std::size_t i = 0; i < N; ++i) b[i] = b_in[i].rounded(ctx);
  const bool ok = detail::eliminate(
      a, [&](std::size_t k, std::size_t p) { std::swap(b[k], b[p]); },
      [&](std::size_t i, std::size_t k, const HComplex& factor) { b[i] -= factor * b[k]; });
  if (!ok) throw SingularMatrix("linear system is singular at working precision");
  Vector<N> x;
  for (std::size_t ii = N; ii-- > 0;) {
    HComplex acc = b[ii];
    for (std::size_t j = ii + 1; j < N; ++j) acc -= a(ii, j) * x[j];
    x[ii] = acc / a(ii, ii);
  }
  return x;
}

/// Determinant from the same pivoted elimination; exact for triangular input.
template <std::size_t N>
HComplex determinant(const Matrix<N>& a_in, const PrecisionContext& ctx) {
  Matrix<N> a = a_in.rounded(ctx);
  int swaps = 0;
  const bool ok = detail::eliminate(
      a, [&](std::size_t, std::size_t) { ++swaps; }, [](std::size_t, std::size_t, const HComplex&) {});
  if (!ok) return HComplex(ctx);
  HComplex det = a(0, 0);
  for (std::size_t i = 1; i < N; ++i) det = det * a(i, i);
  return (swaps % 2 == 0 ? det : -det).rounded(ctx);
}

/// e^{-i tau_2 theta} = [[cos, -sin], [sin, cos]].
Mat2 rotation2(const Angle& theta, const PrecisionContext& ctx);

/// R(theta) diag(f1, f2) R(theta)^{-1} in closed form.
Mat2 spectral_combine(const Angle& theta, const HComplex& f1, const HComplex& f2, const PrecisionContext& ctx);

/// f applied to the 2×2 matrix with eigenvalues (lam1, lam2) along the axes
/// rotated by theta.
template <typename F>
Mat2 spectral_apply(const Angle& theta, const HComplex& lam1, const HComplex& lam2, F&& f,
                    const PrecisionContext& ctx) {
  return spectral_combine(theta, f(lam1), f(lam2), ctx);
}

/// Assembles [[a, b], [c, d]] from 2×2 blocks.
Mat4 block_matrix(const Mat2& a, const Mat2& b, const Mat2& c, const Mat2& d);

}  // namespace zeno::hp
