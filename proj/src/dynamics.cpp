#include "entdyn/dynamics.hpp"

#include <cmath>

namespace entdyn {

namespace {

// e^{-i phase}
Complex expm_i(double phase) { return {std::cos(phase), -std::sin(phase)}; }

// Exponent of s_lm without the -i t/2 prefactor.
double s_exponent(const SystemParams& p, int l, int m) {
  const int el = basis_sign(l);
  const int em = basis_sign(m);
  return el * p.omega_s1 + em * p.omega_s2 + el * em * p.omega_s1s2;
}

void check_bits(int l, int m, int n, int o) {
  for (int b : {l, m, n, o})
    if (b != 0 && b != 1) throw ValidationError("basis index must be 0 or 1");
}

constexpr int kExactBinomialMax = 50;

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

Complex mul_compensated(Complex a, Complex b) {
  const double ar = a.real(), ai = a.imag(), br = b.real(), bi = b.imag();
  auto diff_of_products = [](double x, double y, double u, double v) {
    // x*y - u*v with one rounding error instead of two.
    const double w = u * v;
    const double e = std::fma(-u, v, w);
    const double f = std::fma(x, y, -w);
    return f + e;
  };
  return {diff_of_products(ar, br, ai, bi), diff_of_products(ar, bi, -ai, br)};
}

Complex s_factor(const SystemParams& p, int l, int m, double t) {
  return expm_i(0.5 * t * s_exponent(p, l, m));
}

Complex env_overlap_factor(const EnvQubit& q, int l, int m, int n, int o, double t) {
  const double delta = (basis_sign(l) - basis_sign(n)) * q.gamma_s1 +
                       (basis_sign(m) - basis_sign(o)) * q.gamma_s2;
  if (delta == 0.0 || t == 0.0) return {1.0, 0.0};
  const double half = 0.5 * t * delta;
  const double pa = std::norm(q.alpha);
  const double pb = std::norm(q.beta);
  return {(pa + pb) * std::cos(half), (pb - pa) * std::sin(half)};
}

Complex decoherence_factor(const SystemParams& p, const EnvironmentSpec& env, int l, int m, int n,
                           int o, double t) {
  check_bits(l, m, n, o);
  if ((l == n && m == o) || t == 0.0) return {1.0, 0.0};
  // s_lm conj(s_no) as a single exponential.
  Complex r = expm_i(0.5 * t * (s_exponent(p, l, m) - s_exponent(p, n, o)));
  for (const auto& q : env.qubits) r = mul_compensated(r, env_overlap_factor(q, l, m, n, o, t));
  return r;
}

Complex decoherence_factor_binomial(const SystemParams& p, int n, double gamma, double p_alpha,
                                    double p_beta, int l, int m, int nn, int o, double t) {
  check_bits(l, m, nn, o);
  if (n < 0) throw ValidationError("N must be >= 0");
  if ((l == nn && m == o) || t == 0.0) return {1.0, 0.0};

  const Complex phase = expm_i(0.5 * t * (s_exponent(p, l, m) - s_exponent(p, nn, o)));
  // Per-qubit overlap is p_alpha e^{-i c gamma t} + p_beta e^{+i c gamma t}.
  const int c = ((basis_sign(l) - basis_sign(nn)) + (basis_sign(m) - basis_sign(o))) / 2;
  if (c == 0) return phase;

  Complex sum{0.0, 0.0};
  double binom = 1.0;  // C(n, k), exact in double for n <= 50
  for (int k = 0; k <= n; ++k) {
    double weight = 0.0;
    if (n > kExactBinomialMax) {
      if ((k > 0 && p_alpha == 0.0) || (k < n && p_beta == 0.0)) continue;
      double lw = log_binomial(n, k);
      if (k > 0) lw += k * std::log(p_alpha);
      if (k < n) lw += (n - k) * std::log(p_beta);
      weight = std::exp(lw);
    } else {
      weight = binom * std::pow(p_alpha, k) * std::pow(p_beta, n - k);
      binom = binom * (n - k) / (k + 1);
    }
    const double angle = c * gamma * (n - 2 * k) * t;
    sum += weight * Complex{std::cos(angle), std::sin(angle)};
  }
  return phase * sum;
}

DecoherenceFactors decoherence_factors(const SystemParams& p, const EnvironmentSpec& env, double t) {
  DecoherenceFactors out{};
  for (int i = 0; i < 4; ++i) {
    out.r[i][i] = {1.0, 0.0};
    for (int j = i + 1; j < 4; ++j) {
      const Complex r = decoherence_factor(p, env, i >> 1, i & 1, j >> 1, j & 1, t);
      out.r[i][j] = r;
      out.r[j][i] = std::conj(r);
    }
  }
  return out;
}

DensityMatrix4 reduced_density_unchecked(const SystemParams& p, const EnvironmentSpec& env,
                                         const Matrix4& coefficients, double t) {
  const auto f = decoherence_factors(p, env, t);
  Matrix4 rho{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rho[i][j] = coefficients[i][j] * f.r[i][j];
  return DensityMatrix4(rho);
}

DensityMatrix4 reduced_density(const SystemParams& p, const EnvironmentSpec& env,
                               const InitialState& state, double t) {
  if (!std::isfinite(t)) throw ValidationError("time must be finite");
  p.validate();
  env.validate();
  return reduced_density_unchecked(p, env, initial_coefficients(state), t);
}

}  // namespace entdyn
