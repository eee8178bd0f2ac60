#pragma once

// Wootters concurrence of a two-qubit density matrix.

#include <array>

#include "entdyn/model.hpp"

namespace entdyn {

inline constexpr double kEigenClampTol = 1e-9;      // negative eigenvalues above -tol are roundoff
inline constexpr double kHermitianInputTol = 1e-8;  // asymmetry accepted on input
inline constexpr double kXStateTol = 1e-10;
// Eigenvalues below this fraction of the largest are treated as zero.
inline constexpr double kRankTruncationTol = 1e-14;

/// (sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y).
Matrix4 spin_flip(const Matrix4& rho);

/// Square roots of the eigenvalues of rho * spin_flip(rho), descending. These
/// are the singular values of B = sqrt(rho) Y conj(sqrt(rho)), since
/// B B^dagger = sqrt(rho) rho~ sqrt(rho) shares the spectrum of rho rho~.
std::array<double, 4> wootters_values(const Matrix4& rho);

/// Eigenvalues of rho * spin_flip(rho), descending (squares of the above).
std::array<double, 4> eigenvalues_rho_rhotilde(const Matrix4& rho);

/// max{0, v1 - v2 - v3 - v4} over wootters_values, clamped to [0, 1].
double concurrence(const Matrix4& rho);
inline double concurrence(const DensityMatrix4& rho) { return concurrence(rho.matrix()); }

/// 2 max{0, |rho_23| - sqrt(rho_11 rho_44), |rho_14| - sqrt(rho_22 rho_33)}
/// for X-shaped matrices. Throws ShapeError otherwise.
double concurrence_x_state(const Matrix4& rho);
inline double concurrence_x_state(const DensityMatrix4& rho) {
  return concurrence_x_state(rho.matrix());
}

bool is_x_shaped(const Matrix4& rho, double tol = kXStateTol);

}  // namespace entdyn
