#include "entdyn/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace entdyn::linalg {

namespace {

template <std::size_t N>
double off_diagonal_norm(const RealMatrix<N>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) s += a[i][j] * a[i][j];
  return std::sqrt(s);
}

RealMatrix<8> embed(const Matrix4& h) {
  RealMatrix<8> m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      // Hermitian part only: (H + H^dagger) / 2
      const Complex hij = 0.5 * (h[i][j] + std::conj(h[j][i]));
      m[i][j] = hij.real();
      m[i + 4][j + 4] = hij.real();
      m[i][j + 4] = -hij.imag();
      m[i + 4][j] = hij.imag();
    }
  return m;
}

}  // namespace

template <std::size_t N>
SymmetricEigen<N> jacobi_eigen(RealMatrix<N> a) {
  SymmetricEigen<N> out;
  for (std::size_t i = 0; i < N; ++i) out.vectors[i][i] = 1.0;

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < kJacobiOffNormTol) break;
    out.sweeps = sweep + 1;
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double apq = a[p][q];
        if (apq == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;

        // A <- J^T A J with J the (p,q) rotation.
        for (std::size_t k = 0; k < N; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        a[p][q] = 0.0;
        a[q][p] = 0.0;

        for (std::size_t k = 0; k < N; ++k) {
          const double vkp = out.vectors[k][p];
          const double vkq = out.vectors[k][q];
          out.vectors[k][p] = c * vkp - s * vkq;
          out.vectors[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  for (std::size_t i = 0; i < N; ++i) out.values[i] = a[i][i];
  return out;
}

template SymmetricEigen<4> jacobi_eigen<4>(RealMatrix<4>);
template SymmetricEigen<8> jacobi_eigen<8>(RealMatrix<8>);
template SymmetricEigen<16> jacobi_eigen<16>(RealMatrix<16>);

std::array<double, 4> hermitian_eigenvalues(const Matrix4& h) {
  auto eig = jacobi_eigen<8>(embed(h));
  std::sort(eig.values.begin(), eig.values.end(), std::greater<>());
  // Each eigenvalue of H appears twice in the embedding.
  std::array<double, 4> values{};
  for (int i = 0; i < 4; ++i) values[i] = 0.5 * (eig.values[2 * i] + eig.values[2 * i + 1]);
  return values;
}

std::array<double, 4> singular_values(const Matrix4& b) {
  // Dilation [[0, B_R], [B_R^T, 0]] of the real 8x8 form B_R of B.
  RealMatrix<16> m{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const double re = b[i][j].real();
      const double im = b[i][j].imag();
      const int rows[4] = {i, i, i + 4, i + 4};
      const int cols[4] = {j, j + 4, j, j + 4};
      const double vals[4] = {re, -im, im, re};
      for (int k = 0; k < 4; ++k) {
        m[rows[k]][8 + cols[k]] = vals[k];
        m[8 + cols[k]][rows[k]] = vals[k];
      }
    }
  auto eig = jacobi_eigen<16>(m);
  std::sort(eig.values.begin(), eig.values.end(), std::greater<>());
  // The top eight eigenvalues are the singular values of B, each twice.
  std::array<double, 4> values{};
  for (int i = 0; i < 4; ++i)
    values[i] = std::max(0.0, 0.5 * (eig.values[2 * i] + eig.values[2 * i + 1]));
  return values;
}

Matrix4 hermitian_function(const Matrix4& h, const std::function<double(double)>& f) {
  const auto eig = jacobi_eigen<8>(embed(h));
  std::array<double, 8> fv{};
  for (int k = 0; k < 8; ++k) fv[k] = f(eig.values[k]);

  // f of the embedding is the embedding of f(H); read back the left column blocks.
  Matrix4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double re = 0.0;
      double im = 0.0;
      for (int k = 0; k < 8; ++k) {
        re += eig.vectors[i][k] * fv[k] * eig.vectors[j][k];
        im += eig.vectors[i + 4][k] * fv[k] * eig.vectors[j][k];
      }
      out[i][j] = Complex{re, im};
    }
  return out;
}

}  // namespace entdyn::linalg
