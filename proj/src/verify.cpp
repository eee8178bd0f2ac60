#include "entdyn/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <tuple>

#include "entdyn/dynamics.hpp"
#include "entdyn/entanglement.hpp"
#include "entdyn/oracle.hpp"
#include "entdyn/random.hpp"

namespace entdyn {

namespace {

constexpr double kOracleTol = 1e-10;

double uniform(std::mt19937_64& g, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(g() >> 11) * 0x1.0p-53);
}

std::pair<Complex, Complex> random_qubit(std::mt19937_64& g) {
  const double theta = uniform(g, 0.0, std::numbers::pi);
  const double phi = uniform(g, 0.0, 2.0 * std::numbers::pi);
  return {Complex{std::cos(theta / 2), 0.0}, std::polar(std::sin(theta / 2), phi)};
}

}  // namespace

void VerifyReport::record(bool ok, const std::string& what) {
  if (ok) {
    ++passed;
  } else {
    ++failed;
    failures.push_back(what);
  }
}

RandomCase random_case(std::uint64_t seed, int max_bath) {
  std::mt19937_64 g(mix64(seed));
  RandomCase c;
  c.system = {uniform(g, 0, 5), uniform(g, 0, 5), uniform(g, 0, 5)};
  const int n = static_cast<int>(g() % static_cast<std::uint64_t>(max_bath + 1));
  const bool distinct = (g() & 1) != 0;
  for (int k = 0; k < n; ++k) {
    EnvQubit q;
    q.omega_e = uniform(g, 0, 5);
    if (distinct) {
      ((g() & 1) ? q.gamma_s1 : q.gamma_s2) = uniform(g, 0, 5);
    } else {
      q.gamma_s1 = uniform(g, 0, 5);
      q.gamma_s2 = uniform(g, 0, 5);
    }
    std::tie(q.alpha, q.beta) = random_qubit(g);
    c.environment.qubits.push_back(q);
  }
  if (g() & 1) {
    ProductState ps;
    std::tie(ps.a0_1, ps.a1_1) = random_qubit(g);
    std::tie(ps.a0_2, ps.a1_2) = random_qubit(g);
    c.state = ps;
  } else {
    const auto variant = (g() & 1) ? WernerVariant::w0011 : WernerVariant::w0110;
    c.state = WernerState{variant, uniform(g, 0, 1)};
  }
  c.t = uniform(g, 0, 20);
  c.description = "N=" + std::to_string(n) + (distinct ? " distinct " : " mutual ") +
                  (std::holds_alternative<ProductState>(c.state) ? "PS" : "EWL") +
                  " t=" + std::to_string(c.t);
  return c;
}

VerifyReport run_verification(std::uint64_t seed, int oracle_cases) {
  VerifyReport report;

  for (int i = 0; i < oracle_cases; ++i) {
    const auto c = random_case(seed + static_cast<std::uint64_t>(i));
    const auto fast = reduced_density(c.system, c.environment, c.state, c.t);
    const auto slow = oracle::brute_force_reduced_density(c.system, c.environment, c.state, c.t);
    const double diff = max_abs_diff(fast.matrix(), slow.matrix());
    report.record(diff <= kOracleTol, "oracle mismatch " + std::to_string(diff) + " for " + c.description);

    bool valid = true;
    try {
      fast.check();
    } catch (const InvariantError&) {
      valid = false;
    }
    report.record(valid, "invalid density matrix for " + c.description);

    const double conc = concurrence(fast);
    report.record(conc >= 0.0 && conc <= 1.0, "concurrence out of range for " + c.description);

    auto shifted = c.environment;
    for (auto& q : shifted.qubits) q.omega_e += 1.2345;
    const auto moved = reduced_density(c.system, shifted, c.state, c.t);
    report.record(max_abs_diff(moved.matrix(), fast.matrix()) == 0.0,
                  "omega_e changed the reduced state for " + c.description);
  }

  // Closed system, unbiased PS: C(t) = |sin(omega_s1s2 t)|.
  const SystemParams closed{0.3, 1.7, 1.0};
  for (int i = 0; i < 50; ++i) {
    const double t = 0.2 * i;
    const double c = concurrence(reduced_density(closed, {}, make_unbiased_ps(), t));
    report.record(std::abs(c - std::abs(std::sin(t))) <= 1e-10,
                  "closed-system law at t=" + std::to_string(t));
  }

  // Bell W0011 in a homogeneous mutual bath: C(t) = |cos(2 Gamma t)|^N.
  for (int n : {1, 2, 5, 10}) {
    const auto env = make_environment(HomogeneousMutual{n, 0.8});
    for (int i = 0; i < 20; ++i) {
      const double t = 0.37 * i;
      const double c = concurrence(reduced_density({0.5, 0.2, 1.0}, env,
                                                   WernerState{WernerVariant::w0011, 1.0}, t));
      report.record(std::abs(c - std::pow(std::abs(std::cos(1.6 * t)), n)) <= 1e-9,
                    "W0011 homogeneous law N=" + std::to_string(n));
    }
  }

  // W0110 in a homogeneous mutual bath keeps C = max{0, (3 lambda - 1)/2}.
  for (double lambda : {0.0, 0.2, 0.5, 2.0 / 3.0, 1.0}) {
    const auto env = make_environment(HomogeneousMutual{4, 1.3});
    for (int i = 0; i < 20; ++i) {
      const double c = concurrence(
          reduced_density({1.0, 2.0, 0.7}, env, WernerState{WernerVariant::w0110, lambda}, 0.5 * i));
      report.record(std::abs(c - std::max(0.0, (3 * lambda - 1) / 2)) <= 1e-10,
                    "W0110 constant concurrence at lambda=" + std::to_string(lambda));
    }
  }
  return report;
}

}  // namespace entdyn
