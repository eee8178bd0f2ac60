#include "entdyn/model.hpp"

#include <cmath>

#include "entdyn/linalg.hpp"
#include "entdyn/random.hpp"

namespace entdyn {

namespace {

void require_nonnegative(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0)
    throw ValidationError(std::string(name) + " must be finite and >= 0, got " + std::to_string(v));
}

void require_count(int n, const char* name) {
  if (n < 0) throw ValidationError(std::string(name) + " must be >= 0, got " + std::to_string(n));
}

void require_normalized(Complex a, Complex b, const char* what) {
  if (!is_finite(a) || !is_finite(b))
    throw ValidationError(std::string(what) + " amplitudes must be finite");
  const double norm = std::norm(a) + std::norm(b);
  if (std::abs(norm - 1.0) > kNormalizationTol)
    throw ValidationError(std::string(what) + " amplitudes are not normalized (|a|^2+|b|^2 = " +
                          std::to_string(norm) + ")");
}

EnvQubit unbiased_qubit(double gamma_s1, double gamma_s2) {
  EnvQubit q;
  q.gamma_s1 = gamma_s1;
  q.gamma_s2 = gamma_s2;
  return q;
}

}  // namespace

void SystemParams::validate() const {
  require_nonnegative(omega_s1, "omega_s1");
  require_nonnegative(omega_s2, "omega_s2");
  require_nonnegative(omega_s1s2, "omega_s1s2");
}

void EnvQubit::validate() const {
  if (!std::isfinite(omega_e)) throw ValidationError("omega_e must be finite");
  require_nonnegative(gamma_s1, "gamma_s1");
  require_nonnegative(gamma_s2, "gamma_s2");
  require_normalized(alpha, beta, "environment qubit");
}

void EnvironmentSpec::validate() const {
  for (const auto& q : qubits) q.validate();
}

void validate(const InitialState& state) {
  if (const auto* ps = std::get_if<ProductState>(&state)) {
    require_normalized(ps->a0_1, ps->a1_1, "S1");
    require_normalized(ps->a0_2, ps->a1_2, "S2");
  } else {
    const auto& w = std::get<WernerState>(state);
    if (!std::isfinite(w.purity) || w.purity < 0.0 || w.purity > 1.0)
      throw ValidationError("purity must lie in [0, 1], got " + std::to_string(w.purity));
  }
}

DensityMatrix4 DensityMatrix4::checked(const Matrix4& m) {
  DensityMatrix4 rho(m);
  rho.check();
  return rho;
}

void DensityMatrix4::check() const {
  for (const auto& row : m_)
    for (const auto& z : row)
      if (!is_finite(z)) throw InvariantError("density matrix has non-finite entries");
  const double herm = hermiticity_defect(m_);
  if (herm > kHermitianTol)
    throw InvariantError("density matrix is not Hermitian (defect " + std::to_string(herm) + ")");
  const double tr = trace(m_).real();
  if (std::abs(tr - 1.0) > kTraceTol)
    throw InvariantError("density matrix trace is " + std::to_string(tr));
  const auto ev = linalg::hermitian_eigenvalues(m_);
  if (ev[3] < -kPsdTol)
    throw InvariantError("density matrix has negative eigenvalue " + std::to_string(ev[3]));
}

InitialState make_unbiased_ps() { return ProductState{}; }

std::array<Complex, 4> product_amplitudes(const ProductState& ps) {
  return {ps.a0_1 * ps.a0_2, ps.a0_1 * ps.a1_2, ps.a1_1 * ps.a0_2, ps.a1_1 * ps.a1_2};
}

Matrix4 initial_coefficients(const InitialState& state) {
  validate(state);
  Matrix4 a = zero_matrix4();
  if (const auto* ps = std::get_if<ProductState>(&state)) {
    const auto amp = product_amplitudes(*ps);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a[i][j] = amp[i] * std::conj(amp[j]);
    return a;
  }

  const auto& w = std::get<WernerState>(state);
  const double mixed = (1.0 - w.purity) / 4.0;
  const double half = w.purity / 2.0;
  for (int i = 0; i < 4; ++i) a[i][i] = mixed;
  if (w.variant == WernerVariant::w0011) {
    a[0][0] += half;
    a[3][3] += half;
    a[0][3] = a[3][0] = half;
  } else {
    a[1][1] += half;
    a[2][2] += half;
    a[1][2] = a[2][1] = half;
  }
  return a;
}

std::string recipe_kind(const EnvironmentRecipe& recipe) {
  struct Visitor {
    std::string operator()(const HomogeneousMutual&) const { return "homogeneous_mutual"; }
    std::string operator()(const WhiteNoiseMutual&) const { return "white_noise_mutual"; }
    std::string operator()(const DistinctHomogeneous&) const { return "distinct_homogeneous"; }
    std::string operator()(const DistinctCase1&) const { return "distinct_case1"; }
    std::string operator()(const Mixed&) const { return "mixed"; }
  };
  return std::visit(Visitor{}, recipe);
}

EnvironmentSpec make_environment(const EnvironmentRecipe& recipe) {
  EnvironmentSpec env;
  auto& qs = env.qubits;

  if (const auto* r = std::get_if<HomogeneousMutual>(&recipe)) {
    require_count(r->n, "N");
    require_nonnegative(r->gamma, "gamma");
    qs.assign(static_cast<std::size_t>(r->n), unbiased_qubit(r->gamma, r->gamma));
  } else if (const auto* r = std::get_if<WhiteNoiseMutual>(&recipe)) {
    require_count(r->n, "N");
    require_nonnegative(r->mu, "mu");
    require_nonnegative(r->f, "f");
    // Interleaved draws: (gamma_s1, gamma_s2) for qubit 0, then qubit 1, ...
    const auto draws = sample_white_noise(r->mu, r->f, r->seed, 2 * static_cast<std::size_t>(r->n));
    qs.reserve(static_cast<std::size_t>(r->n));
    for (int k = 0; k < r->n; ++k) qs.push_back(unbiased_qubit(draws[2 * k], draws[2 * k + 1]));
  } else if (const auto* r = std::get_if<DistinctHomogeneous>(&recipe)) {
    require_count(r->n1, "N1");
    require_count(r->n2, "N2");
    require_nonnegative(r->gamma_s1, "gamma_s1");
    require_nonnegative(r->gamma_s2, "gamma_s2");
    qs.assign(static_cast<std::size_t>(r->n1), unbiased_qubit(r->gamma_s1, 0.0));
    qs.insert(qs.end(), static_cast<std::size_t>(r->n2), unbiased_qubit(0.0, r->gamma_s2));
  } else if (const auto* r = std::get_if<DistinctCase1>(&recipe)) {
    require_count(r->n1, "N1");
    require_count(r->n2, "N2");
    require_nonnegative(r->gamma_s2, "gamma_s2");
    require_nonnegative(r->m, "M");
    qs.assign(static_cast<std::size_t>(r->n1), unbiased_qubit(r->m * r->gamma_s2, 0.0));
    qs.insert(qs.end(), static_cast<std::size_t>(r->n2), unbiased_qubit(0.0, r->gamma_s2));
  } else {
    const auto& m = std::get<Mixed>(recipe);
    require_count(m.n1, "N1");
    require_count(m.n2, "N2");
    require_nonnegative(m.gamma_s1, "gamma_s1");
    require_nonnegative(m.mu, "mu");
    require_nonnegative(m.f, "f");
    qs.assign(static_cast<std::size_t>(m.n1), unbiased_qubit(m.gamma_s1, 0.0));
    for (double g : sample_white_noise(m.mu, m.f, m.seed, static_cast<std::size_t>(m.n2)))
      qs.push_back(unbiased_qubit(0.0, g));
  }
  return env;
}

}  // namespace entdyn
