#pragma once

// Self-check run by `entdyn verify`: closed form against the brute-force
// oracle on random configurations, plus invariant checks on the same outputs.

#include <cstdint>
#include <string>
#include <vector>

#include "entdyn/model.hpp"

namespace entdyn {

struct RandomCase {
  SystemParams system;
  EnvironmentSpec environment;
  InitialState state;
  double t = 0.0;
  std::string description;
};

/// Random configuration: up to max_bath qubits, mutual or distinct couplings,
/// PS (random amplitudes) or EWL states, parameters in [0, 5], t in [0, 20].
RandomCase random_case(std::uint64_t seed, int max_bath = 6);

struct VerifyReport {
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;

  void record(bool ok, const std::string& what);
};

VerifyReport run_verification(std::uint64_t seed, int oracle_cases = 200);

}  // namespace entdyn
