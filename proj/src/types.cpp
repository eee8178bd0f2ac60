#include "entdyn/types.hpp"

#include <algorithm>

namespace entdyn {

Matrix4 zero_matrix4() {
  Matrix4 m{};
  for (auto& row : m) row.fill(Complex{0.0, 0.0});
  return m;
}

Matrix4 multiply(const Matrix4& a, const Matrix4& b) {
  Matrix4 c = zero_matrix4();
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const Complex aik = a[i][k];
      for (int j = 0; j < 4; ++j) c[i][j] += aik * b[k][j];
    }
  return c;
}

Matrix4 adjoint(const Matrix4& a) {
  Matrix4 c{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c[i][j] = std::conj(a[j][i]);
  return c;
}

Complex trace(const Matrix4& a) { return a[0][0] + a[1][1] + a[2][2] + a[3][3]; }

double max_abs_diff(const Matrix4& a, const Matrix4& b) {
  double d = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

double hermiticity_defect(const Matrix4& a) { return max_abs_diff(a, adjoint(a)); }

}  // namespace entdyn
