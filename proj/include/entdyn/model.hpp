#pragma once

// Domain types for a two-qubit system of interest (S1, S2) coupled through
// sigma_z sigma_z terms to a bath of environment qubits. hbar = 1; every
// frequency and coupling is expressed in units of a caller-chosen reference.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "entdyn/types.hpp"

namespace entdyn {

inline constexpr double kNormalizationTol = 1e-12;

struct SystemParams {
  double omega_s1 = 0.0;
  double omega_s2 = 0.0;
  double omega_s1s2 = 0.0;  // S1-S2 coupling

  void validate() const;
};

/// One bath qubit. A mutual-bath qubit couples to both system qubits, a
/// distinct-bath qubit has exactly one nonzero coupling.
struct EnvQubit {
  double omega_e = 0.0;  // self-frequency; commutes with everything, never enters the dynamics
  double gamma_s1 = 0.0;
  double gamma_s2 = 0.0;
  Complex alpha{kInvSqrt2, 0.0};
  Complex beta{kInvSqrt2, 0.0};

  void validate() const;
};

struct EnvironmentSpec {
  std::vector<EnvQubit> qubits;

  std::size_t size() const { return qubits.size(); }
  void validate() const;
};

/// Product of two single-qubit pure states (a0_1|0> + a1_1|1>) (x) (a0_2|0> + a1_2|1>).
struct ProductState {
  Complex a0_1{kInvSqrt2, 0.0};
  Complex a1_1{kInvSqrt2, 0.0};
  Complex a0_2{kInvSqrt2, 0.0};
  Complex a1_2{kInvSqrt2, 0.0};
};

enum class WernerVariant { w0011, w0110 };

/// Extended Werner-like state  purity * |Bell><Bell| + (1 - purity)/4 * I.
/// The Bell-state sign does not affect the matrix and is not represented.
struct WernerState {
  WernerVariant variant = WernerVariant::w0011;
  double purity = 1.0;
};

using InitialState = std::variant<ProductState, WernerState>;

void validate(const InitialState& state);

/// Two-qubit reduced density matrix. Construct through checked() to enforce
/// Hermiticity, unit trace and positivity; the unchecked constructor is for
/// values produced by the library's own evolution.
class DensityMatrix4 {
 public:
  static constexpr double kHermitianTol = 1e-10;
  static constexpr double kTraceTol = 1e-10;
  static constexpr double kPsdTol = 1e-9;

  DensityMatrix4() : m_(zero_matrix4()) {}
  explicit DensityMatrix4(const Matrix4& m) : m_(m) {}

  static DensityMatrix4 checked(const Matrix4& m);

  const Matrix4& matrix() const { return m_; }
  Complex operator()(int row, int col) const { return m_[row][col]; }

  /// Throws InvariantError describing the first violated invariant.
  void check() const;

 private:
  Matrix4 m_;
};

InitialState make_unbiased_ps();

/// a_lm = a_l^(1) a_m^(2), indexed 00, 01, 10, 11.
std::array<Complex, 4> product_amplitudes(const ProductState& ps);

/// Initial coefficient matrix a_{lm,no}: a_lm conj(a_no) for product states,
/// the Werner-like matrix itself for EWL states.
Matrix4 initial_coefficients(const InitialState& state);

// Environment recipes. Counts are signed so that negative input can be
// reported rather than wrapped.

struct HomogeneousMutual {
  int n = 0;
  double gamma = 0.0;
};

/// Couplings to S1 and S2 are drawn independently per qubit from
/// [|mu - f|, mu + f].
struct WhiteNoiseMutual {
  int n = 0;
  double mu = 0.0;
  double f = 0.0;
  std::uint64_t seed = 0;
};

struct DistinctHomogeneous {
  int n1 = 0;
  double gamma_s1 = 0.0;
  int n2 = 0;
  double gamma_s2 = 0.0;
};

/// Distinct baths with gamma_s1 = m * gamma_s2.
struct DistinctCase1 {
  int n1 = 0;
  int n2 = 0;
  double gamma_s2 = 0.0;
  double m = 1.0;
};

/// Homogeneous bath of n1 qubits on S1, white-noise bath of n2 qubits on S2.
struct Mixed {
  int n1 = 0;
  double gamma_s1 = 0.0;
  int n2 = 0;
  double mu = 0.0;
  double f = 0.0;
  std::uint64_t seed = 0;
};

using EnvironmentRecipe =
    std::variant<HomogeneousMutual, WhiteNoiseMutual, DistinctHomogeneous, DistinctCase1, Mixed>;

std::string recipe_kind(const EnvironmentRecipe& recipe);

/// Deterministic in its argument, seed included. Every produced qubit has
/// unbiased amplitudes and omega_e = 0.
EnvironmentSpec make_environment(const EnvironmentRecipe& recipe);

}  // namespace entdyn
