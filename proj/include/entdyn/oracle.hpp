#pragma once

// Brute-force reference evolution on the full 2^(N+2)-dimensional space.
//
// Basis index layout: bit (N+1) is S1, bit N is S2, bits N-1 .. 0 are E1 .. EN
// (E1 most significant among the bath bits). The Hamiltonian is diagonal in
// this basis, so U(t) = diag(exp(-i E t)) exactly.

#include <vector>

#include "entdyn/model.hpp"

namespace entdyn::oracle {

inline constexpr std::size_t kMaxBathQubits = 24;

struct CompositeState {
  std::size_t bath_qubits = 0;
  std::vector<Complex> amplitudes;  // size 2^(bath_qubits + 2)

  double norm() const;
};

/// Energies of every composite basis state:
/// E = 1/2 [e1 w1 + e2 w2 + e1 e2 w12 + sum_k eE_k (omega_e_k + gamma_s1_k e1 + gamma_s2_k e2)].
std::vector<double> diagonal_energies(const SystemParams& p, const EnvironmentSpec& env);

/// |system> (x) |psi_E1> (x) ... (x) |psi_EN>.
CompositeState product_with_environment(const std::array<Complex, 4>& system,
                                        const EnvironmentSpec& env);

/// Applies exp(-i E t) basis-wise.
void evolve(CompositeState& state, const std::vector<double>& energies, double t);

/// Tr_E |Phi><Phi|, accumulated with the given weight into `out`.
void accumulate_partial_trace(const CompositeState& state, double weight, Matrix4& out);

/// Pure-state decomposition of an initial system state: (weight, vector) pairs.
/// EWL states decompose over the four Bell vectors.
std::vector<std::pair<double, std::array<Complex, 4>>> pure_decomposition(const InitialState& state);

DensityMatrix4 brute_force_reduced_density(const SystemParams& p, const EnvironmentSpec& env,
                                           const InitialState& state, double t);

}  // namespace entdyn::oracle
