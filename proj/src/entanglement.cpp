#include "entdyn/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entdyn/linalg.hpp"

namespace entdyn {

namespace {

// Diagonal of sigma_y x sigma_y up to the anti-diagonal permutation.
constexpr std::array<int, 4> kFlipSign = {1, -1, -1, 1};

// Row signs of sigma_y x sigma_y, whose entries sit on the anti-diagonal.
constexpr std::array<int, 4> kYSign = {-1, 1, 1, -1};

double clamp_eigenvalue(double v, const char* what) {
  if (v < -kEigenClampTol)
    throw InvariantError(std::string(what) + " has eigenvalue " + std::to_string(v) +
                         " below -" + std::to_string(kEigenClampTol));
  return std::max(v, 0.0);
}

Matrix4 hermitian_part(const Matrix4& a) {
  Matrix4 h{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) h[i][j] = 0.5 * (a[i][j] + std::conj(a[j][i]));
  return h;
}

}  // namespace

Matrix4 spin_flip(const Matrix4& rho) {
  Matrix4 out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      out[i][j] = static_cast<double>(kFlipSign[i] * kFlipSign[j]) * std::conj(rho[3 - i][3 - j]);
  return out;
}

std::array<double, 4> wootters_values(const Matrix4& rho) {
  const double defect = hermiticity_defect(rho);
  if (!(defect <= kHermitianInputTol))
    throw ValidationError("density matrix is not Hermitian (defect " + std::to_string(defect) + ")");

  const Matrix4 h_rho = hermitian_part(rho);
  const auto rho_values = linalg::hermitian_eigenvalues(h_rho);
  for (double v : rho_values) clamp_eigenvalue(v, "rho");

  // Roundoff-level eigenvalues are exact zeros; their square roots (~1e-8)
  // would otherwise dominate the error of rank-deficient states.
  const double rho_floor = kRankTruncationTol * std::max(rho_values[0], 0.0);
  const Matrix4 sqrt_rho = linalg::hermitian_function(
      h_rho, [rho_floor](double v) { return v <= rho_floor ? 0.0 : std::sqrt(v); });

  // sqrt(rho) rho~ sqrt(rho) = B B^dagger with B = sqrt(rho) Y conj(sqrt(rho)),
  // Y = sigma_y x sigma_y. Taking singular values of B avoids squaring.
  Matrix4 y_conj{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      y_conj[i][j] = static_cast<double>(kYSign[i]) * std::conj(sqrt_rho[3 - i][j]);
  return linalg::singular_values(multiply(sqrt_rho, y_conj));
}

std::array<double, 4> eigenvalues_rho_rhotilde(const Matrix4& rho) {
  auto values = wootters_values(rho);
  for (auto& v : values) v *= v;
  return values;
}

double concurrence(const Matrix4& rho) {
  const auto v = wootters_values(rho);
  return std::clamp(v[0] - v[1] - v[2] - v[3], 0.0, 1.0);
}

bool is_x_shaped(const Matrix4& rho, double tol) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const bool on_x = (i == j) || (i + j == 3);
      if (!on_x && std::abs(rho[i][j]) > tol) return false;
    }
  return true;
}

double concurrence_x_state(const Matrix4& rho) {
  if (!is_x_shaped(rho)) throw ShapeError("matrix is not X-shaped");
  const double d1 = std::max(rho[0][0].real(), 0.0);
  const double d2 = std::max(rho[1][1].real(), 0.0);
  const double d3 = std::max(rho[2][2].real(), 0.0);
  const double d4 = std::max(rho[3][3].real(), 0.0);
  const double c = 2.0 * std::max({0.0, std::abs(rho[1][2]) - std::sqrt(d1 * d4),
                                   std::abs(rho[0][3]) - std::sqrt(d2 * d3)});
  return std::clamp(c, 0.0, 1.0);
}

}  // namespace entdyn
