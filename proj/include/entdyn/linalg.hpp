#pragma once

// Small dense eigen-solvers used by the concurrence pipeline.
//
// Complex Hermitian 4x4 problems are solved through the real symmetric 8x8
// embedding [[Re H, -Im H], [Im H, Re H]], whose spectrum is that of H with
// every eigenvalue doubled. The embedding is diagonalized by cyclic Jacobi
// rotations.

#include <array>
#include <functional>

#include "entdyn/types.hpp"

namespace entdyn::linalg {

template <std::size_t N>
using RealMatrix = std::array<std::array<double, N>, N>;

template <std::size_t N>
struct SymmetricEigen {
  std::array<double, N> values{};
  RealMatrix<N> vectors{};  // column j is the eigenvector of values[j]
  int sweeps = 0;
};

inline constexpr double kJacobiOffNormTol = 1e-14;
inline constexpr int kJacobiMaxSweeps = 30;

/// Cyclic Jacobi diagonalization of a real symmetric matrix. Stops when the
/// off-diagonal Frobenius norm drops below kJacobiOffNormTol or after
/// kJacobiMaxSweeps sweeps.
template <std::size_t N>
SymmetricEigen<N> jacobi_eigen(RealMatrix<N> a);

/// Eigenvalues of a Hermitian 4x4 matrix, descending. The input is assumed
/// Hermitian; only its Hermitian part is used.
std::array<double, 4> hermitian_eigenvalues(const Matrix4& h);

/// Singular values of a complex 4x4 matrix, descending, from the eigenvalues
/// of its Hermitian dilation [[0, B], [B^dagger, 0]]. Accurate to roundoff in
/// absolute terms, including singular values near zero.
std::array<double, 4> singular_values(const Matrix4& b);

/// f(H) for Hermitian H, defined spectrally.
Matrix4 hermitian_function(const Matrix4& h, const std::function<double(double)>& f);

}  // namespace entdyn::linalg
