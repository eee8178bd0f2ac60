#include "entdyn/oracle.hpp"

#include <cmath>

namespace entdyn::oracle {

namespace {

void check_capacity(const EnvironmentSpec& env) {
  if (env.size() > kMaxBathQubits)
    throw CapacityError("oracle supports at most " + std::to_string(kMaxBathQubits) +
                        " bath qubits, got " + std::to_string(env.size()));
}

// sigma_z eigenvalue: +1 on |0>, -1 on |1>.
int sign_of(std::size_t bit) { return bit == 0 ? 1 : -1; }

}  // namespace

double CompositeState::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

std::vector<double> diagonal_energies(const SystemParams& p, const EnvironmentSpec& env) {
  check_capacity(env);
  const std::size_t n = env.size();
  const std::size_t dim = std::size_t{1} << (n + 2);
  std::vector<double> energies(dim);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    const int e1 = sign_of((idx >> (n + 1)) & 1);
    const int e2 = sign_of((idx >> n) & 1);
    double e = e1 * p.omega_s1 + e2 * p.omega_s2 + e1 * e2 * p.omega_s1s2;
    for (std::size_t k = 0; k < n; ++k) {
      const auto& q = env.qubits[k];
      const int ek = sign_of((idx >> (n - 1 - k)) & 1);
      e += ek * (q.omega_e + q.gamma_s1 * e1 + q.gamma_s2 * e2);
    }
    energies[idx] = 0.5 * e;
  }
  return energies;
}

CompositeState product_with_environment(const std::array<Complex, 4>& system,
                                        const EnvironmentSpec& env) {
  check_capacity(env);
  CompositeState state;
  state.bath_qubits = env.size();
  std::vector<Complex> amps(system.begin(), system.end());
  // Appending each bath qubit as the new least significant bit keeps E1 most significant.
  for (const auto& q : env.qubits) {
    std::vector<Complex> next(amps.size() * 2);
    for (std::size_t i = 0; i < amps.size(); ++i) {
      next[2 * i] = amps[i] * q.alpha;
      next[2 * i + 1] = amps[i] * q.beta;
    }
    amps = std::move(next);
  }
  state.amplitudes = std::move(amps);
  return state;
}

void evolve(CompositeState& state, const std::vector<double>& energies, double t) {
  for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
    const double phase = energies[i] * t;
    state.amplitudes[i] *= Complex{std::cos(phase), -std::sin(phase)};
  }
}

void accumulate_partial_trace(const CompositeState& state, double weight, Matrix4& out) {
  const std::size_t env_dim = std::size_t{1} << state.bath_qubits;
  for (int s = 0; s < 4; ++s)
    for (int sp = 0; sp < 4; ++sp) {
      Complex acc{0.0, 0.0};
      for (std::size_t e = 0; e < env_dim; ++e)
        acc += state.amplitudes[s * env_dim + e] * std::conj(state.amplitudes[sp * env_dim + e]);
      out[s][sp] += weight * acc;
    }
}

std::vector<std::pair<double, std::array<Complex, 4>>> pure_decomposition(const InitialState& state) {
  validate(state);
  if (const auto* ps = std::get_if<ProductState>(&state)) return {{1.0, product_amplitudes(*ps)}};

  const auto& w = std::get<WernerState>(state);
  const double h = kInvSqrt2;
  const std::array<Complex, 4> phi_plus{h, 0.0, 0.0, h};
  const std::array<Complex, 4> phi_minus{h, 0.0, 0.0, -h};
  const std::array<Complex, 4> psi_plus{0.0, h, h, 0.0};
  const std::array<Complex, 4> psi_minus{0.0, h, -h, 0.0};
  const double rest = (1.0 - w.purity) / 4.0;
  const double top = w.purity + rest;
  if (w.variant == WernerVariant::w0011)
    return {{top, phi_plus}, {rest, phi_minus}, {rest, psi_plus}, {rest, psi_minus}};
  return {{top, psi_plus}, {rest, psi_minus}, {rest, phi_plus}, {rest, phi_minus}};
}

DensityMatrix4 brute_force_reduced_density(const SystemParams& p, const EnvironmentSpec& env,
                                           const InitialState& state, double t) {
  if (!std::isfinite(t)) throw ValidationError("time must be finite");
  p.validate();
  env.validate();
  const auto energies = diagonal_energies(p, env);
  Matrix4 rho = zero_matrix4();
  for (const auto& [weight, vec] : pure_decomposition(state)) {
    if (weight == 0.0) continue;
    auto composite = product_with_environment(vec, env);
    evolve(composite, energies, t);
    accumulate_partial_trace(composite, weight, rho);
  }
  return DensityMatrix4(rho);
}

}  // namespace entdyn::oracle
