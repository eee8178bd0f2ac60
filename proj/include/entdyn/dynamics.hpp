#pragma once

// Closed-form evolution of the two-qubit reduced density matrix.
//
// Every Hamiltonian term is diagonal in the computational basis, so each
// element of the reduced state only picks up a scalar factor:
//
//   rho(t)[lm][no] = a_{lm,no} * r_{lmno}(t)
//   r_{lmno}(t)    = s_lm(t) conj(s_no(t)) * prod_k <psi_k,no(t)|psi_k,lm(t)>
//
// Basis index i encodes (l, m) as i = 2*l + m.

#include <array>

#include "entdyn/model.hpp"

namespace entdyn {

/// Decoherence factors r_{lmno}(t) at one instant, r[2l+m][2n+o].
struct DecoherenceFactors {
  Matrix4 r;
};

/// +1 for |0>, -1 for |1>.
constexpr int basis_sign(int bit) { return bit == 0 ? 1 : -1; }

/// Kahan's FMA-compensated complex product.
Complex mul_compensated(Complex a, Complex b);

/// exp(-i t/2 (e_l w1 + e_m w2 + e_l e_m w12)).
Complex s_factor(const SystemParams& p, int l, int m, double t);

/// <psi_k,no(t)|psi_k,lm(t)> = |alpha|^2 e^{-i t D/2} + |beta|^2 e^{+i t D/2},
/// D = (e_l - e_n) gamma_s1 + (e_m - e_o) gamma_s2. omega_e cancels.
Complex env_overlap_factor(const EnvQubit& q, int l, int m, int n, int o, double t);

Complex decoherence_factor(const SystemParams& p, const EnvironmentSpec& env, int l, int m, int n,
                           int o, double t);

/// Binomial-sum form for a homogeneous mutual bath of n qubits with common
/// coupling gamma and populations (p_alpha, p_beta).
Complex decoherence_factor_binomial(const SystemParams& p, int n, double gamma, double p_alpha,
                                    double p_beta, int l, int m, int nn, int o, double t);

DecoherenceFactors decoherence_factors(const SystemParams& p, const EnvironmentSpec& env, double t);

/// rho_S(t). Inputs are validated on every call.
DensityMatrix4 reduced_density(const SystemParams& p, const EnvironmentSpec& env,
                               const InitialState& state, double t);

/// Same as reduced_density with a precomputed coefficient matrix and no input
/// validation; for sweep loops that have already validated.
DensityMatrix4 reduced_density_unchecked(const SystemParams& p, const EnvironmentSpec& env,
                                         const Matrix4& coefficients, double t);

}  // namespace entdyn
