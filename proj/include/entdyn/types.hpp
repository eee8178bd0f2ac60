#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace entdyn {

using Complex = std::complex<double>;

/// Dense 4x4 complex matrix over the two-qubit basis ordered 00, 01, 10, 11.
using Matrix4 = std::array<std::array<Complex, 4>, 4>;

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

/// Rejected input: a value outside its documented domain.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computed quantity violated an invariant beyond roundoff tolerance.
class InvariantError : public std::runtime_error {
 public:
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

/// Input does not have the structure an operation requires (e.g. not X-shaped).
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

/// Problem size exceeds what an operation is willing to allocate.
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

Matrix4 zero_matrix4();
Matrix4 multiply(const Matrix4& a, const Matrix4& b);
Matrix4 adjoint(const Matrix4& a);
Complex trace(const Matrix4& a);

/// Largest entrywise |a - b|.
double max_abs_diff(const Matrix4& a, const Matrix4& b);

/// Largest entrywise |a - a^dagger|.
double hermiticity_defect(const Matrix4& a);

}  // namespace entdyn
