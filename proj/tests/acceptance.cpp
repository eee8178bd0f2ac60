// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "entdyn/dynamics.hpp"
#include "entdyn/entanglement.hpp"
#include "entdyn/io.hpp"
#include "entdyn/oracle.hpp"
#include "entdyn/sweep.hpp"
#include "entdyn/verify.hpp"

using namespace entdyn;
using std::numbers::pi;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(bool ok, const std::string& name, const std::string& detail) {
  std::printf("%s  %-28s %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

const InitialState kPs = make_unbiased_ps();
InitialState ewl(WernerVariant v, double purity) { return WernerState{v, purity}; }

// Concurrence along a uniform time grid.
std::vector<double> row(const SystemParams& p, const EnvironmentSpec& env, const InitialState& s,
                        double t0, double t1, int samples) {
  std::vector<double> out;
  for (double t : linspace(t0, t1, samples)) out.push_back(concurrence(reduced_density(p, env, s, t)));
  return out;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double werner_concurrence(double l) { return std::max(0.0, (3 * l - 1) / 2); }

void oracle_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0;
  int mutual = 0, distinct = 0, ps = 0, ewl_count = 0;
  for (int i = 0; i < 200; ++i) {
    const auto c = random_case(kDefaultMasterSeed + static_cast<std::uint64_t>(i), 6);
    const auto fast = reduced_density(c.system, c.environment, c.state, c.t);
    const auto slow = oracle::brute_force_reduced_density(c.system, c.environment, c.state, c.t);
    worst = std::max(worst, max_abs_diff(fast.matrix(), slow.matrix()));
    (c.description.find("distinct") != std::string::npos ? distinct : mutual)++;
    (std::holds_alternative<ProductState>(c.state) ? ps : ewl_count)++;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool covered = mutual > 0 && distinct > 0 && ps > 0 && ewl_count > 0;
  std::ostringstream d;
  d << "200 cases (mutual " << mutual << ", distinct " << distinct << ", PS " << ps << ", EWL "
    << ewl_count << ") max_err=" << fmt("%.2e", worst) << " tol=1e-10 runtime=" << fmt("%.2f", secs)
    << "s limit=60s";
  report(worst <= 1e-10 && secs < 60.0 && covered, "oracle_equivalence", d.str());
}

void concurrence_correctness() {
  double worst = 0;
  for (auto v : {WernerVariant::w0011, WernerVariant::w0110})
    worst = std::max(worst, std::abs(concurrence(initial_coefficients(ewl(v, 1.0))) - 1.0));
  Matrix4 ground = zero_matrix4();
  ground[0][0] = 1.0;
  worst = std::max(worst, concurrence(ground));
  for (auto v : {WernerVariant::w0011, WernerVariant::w0110})
    for (double l : {0.0, 0.2, 1.0 / 3.0, 0.5, 2.0 / 3.0, 1.0})
      worst = std::max(worst, std::abs(concurrence(initial_coefficients(ewl(v, l))) - werner_concurrence(l)));

  // Random X states: populations plus coherences inside their positivity bounds.
  std::mt19937_64 g(12345);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double x_worst = 0;
  for (int i = 0; i < 10000; ++i) {
    std::array<double, 4> d{};
    double s = 0;
    for (auto& x : d) s += (x = u(g));
    Matrix4 rho = zero_matrix4();
    for (int k = 0; k < 4; ++k) rho[k][k] = d[k] / s;
    const Complex c14 = std::polar(u(g) * std::sqrt(rho[0][0].real() * rho[3][3].real()), 2 * pi * u(g));
    const Complex c23 = std::polar(u(g) * std::sqrt(rho[1][1].real() * rho[2][2].real()), 2 * pi * u(g));
    rho[0][3] = c14;
    rho[3][0] = std::conj(c14);
    rho[1][2] = c23;
    rho[2][1] = std::conj(c23);
    x_worst = std::max(x_worst, std::abs(concurrence(rho) - concurrence_x_state(rho)));
  }
  report(worst <= 1e-10 && x_worst <= 1e-9, "concurrence_correctness",
         "reference states max_err=" + fmt("%.2e", worst) + " tol=1e-10; 10000 X states max_err=" +
             fmt("%.2e", x_worst) + " tol=1e-9");
}

void closed_system_law() {
  double worst = 0;
  for (double w12 : {0.5, 1.0, 2.3}) {
    const SystemParams p{0.4, 1.7, w12};
    const auto times = linspace(0.0, 4 * pi, 400);
    for (double t : times)
      worst = std::max(worst, std::abs(concurrence(reduced_density(p, {}, kPs, t)) - std::abs(std::sin(w12 * t))));
  }
  report(worst <= 1e-10, "closed_system_law",
         "N=0, 3 couplings x 400 points max_err=" + fmt("%.2e", worst) + " tol=1e-10");
}

void ewl_homogeneous_law() {
  double w0011 = 0, w0110 = 0;
  const SystemParams p{0.3, 1.1, 1.0};
  for (double gamma : {0.5, 1.0}) {
    const auto times = linspace(0.0, 4 * pi / gamma, 400);
    for (int n : {1, 2, 5, 10}) {
      const auto env = make_environment(HomogeneousMutual{n, gamma});
      for (double t : times) {
        const double c = concurrence(reduced_density(p, env, ewl(WernerVariant::w0011, 1.0), t));
        w0011 = std::max(w0011, std::abs(c - std::pow(std::abs(std::cos(2 * gamma * t)), n)));
      }
      for (double l : {0.5, 1.0})
        for (double t : times) {
          const double c = concurrence(reduced_density(p, env, ewl(WernerVariant::w0110, l), t));
          w0110 = std::max(w0110, std::abs(c - werner_concurrence(l)));
        }
    }
  }
  report(w0011 <= 1e-9 && w0110 <= 1e-10, "ewl_homogeneous_law",
         "W0011 |cos 2Gt|^N max_err=" + fmt("%.2e", w0011) + " tol=1e-9; W0110 constant max_err=" +
             fmt("%.2e", w0110) + " tol=1e-10");
}

void frequency_invariances() {
  const std::vector<EnvironmentSpec> envs = {
      make_environment(HomogeneousMutual{3, 0.8}),
      make_environment(WhiteNoiseMutual{5, 0.7, 0.3, 99}),
      make_environment(DistinctCase1{2, 3, 0.6, 1.5}),
  };
  const std::vector<InitialState> states = {kPs, ewl(WernerVariant::w0011, 1.0), ewl(WernerVariant::w0011, 0.6),
                                            ewl(WernerVariant::w0110, 0.8)};
  double local = 0, coupling = 0;
  for (const auto& env : envs)
    for (const auto& s : states) {
      const bool is_ewl = std::holds_alternative<WernerState>(s);
      const auto base = row({0.0, 0.0, 1.0}, env, s, 0.0, 20.0, 400);
      for (double w : {0.7, 3.1}) {
        local = std::max(local, max_diff(base, row({w, 0.0, 1.0}, env, s, 0.0, 20.0, 400)));
        local = std::max(local, max_diff(base, row({0.0, w, 1.0}, env, s, 0.0, 20.0, 400)));
      }
      if (is_ewl)
        for (double w : {0.0, 2.5})
          coupling = std::max(coupling, max_diff(base, row({0.0, 0.0, w}, env, s, 0.0, 20.0, 400)));
    }
  report(local <= 1e-10 && coupling <= 1e-10, "frequency_invariances",
         "omega_s1/omega_s2 row diff=" + fmt("%.2e", local) + "; omega_s1s2 (EWL) row diff=" +
             fmt("%.2e", coupling) + " tol=1e-10");
}

void periodicity() {
  double worst = 0;
  std::string periods;
  for (double gamma : {0.5, 1.0, 2.0})
    for (int n : {1, 3, 8})
      for (const auto& s : {kPs, ewl(WernerVariant::w0011, 0.7)}) {
        const SystemParams p{0.37, 2.1, gamma};
        const auto env = make_environment(HomogeneousMutual{n, gamma});
        const double theta = 2 * pi / gamma;
        for (double t : linspace(0.0, theta, 400)) {
          const double a = concurrence(reduced_density(p, env, s, t));
          const double b = concurrence(reduced_density(p, env, s, t + theta));
          worst = std::max(worst, std::abs(a - b));
        }
      }
  // Smallest grid period of the PS row at Gamma = 1, N = 1, for reference.
  const auto env = make_environment(HomogeneousMutual{1, 1.0});
  const auto times = linspace(0.0, 4 * pi, 801);
  std::vector<double> r;
  for (double t : times) r.push_back(concurrence(reduced_density({0.0, 0.0, 1.0}, env, kPs, t)));
  const auto measured = revival_period(times, r, 1e-9);
  report(worst <= 1e-9, "periodicity",
         "C(t+2pi/G)-C(t) max=" + fmt("%.2e", worst) + " tol=1e-9; measured minimal period (G=1, N=1, PS) = " +
             (measured ? fmt("%.6f", *measured) : std::string("none")) + " (2pi/G = " + fmt("%.6f", 2 * pi) + ")");
}

void qualitative_claims() {
  std::ostringstream d;
  bool ok = true;

  // PS attenuation with N at Gamma = omega_s1s2.
  const double gamma = 1.0;
  const SystemParams p{0.0, 0.0, gamma};
  std::vector<double> maxima;
  for (int n : {1, 2, 4, 8}) {
    const auto env = make_environment(HomogeneousMutual{n, gamma});
    maxima.push_back(max_concurrence(row(p, env, kPs, 0.0, 4 * pi / gamma, 400)));
  }
  const bool below = *std::max_element(maxima.begin(), maxima.end()) < 0.99;
  const bool non_increasing = std::is_sorted(maxima.rbegin(), maxima.rend());
  ok = ok && below && non_increasing;
  d << "maxC(N=1,2,4,8)=" << fmt("%.4f", maxima[0]) << "," << fmt("%.4f", maxima[1]) << ","
    << fmt("%.4f", maxima[2]) << "," << fmt("%.4f", maxima[3]) << (below ? " <0.99" : " NOT<0.99")
    << (non_increasing ? " non-increasing" : " INCREASING");

  // Gap at integer coupling ratio.
  const auto env1 = make_environment(HomogeneousMutual{1, gamma});
  const double at_one = max_concurrence(row({0.0, 0.0, 1.0 * gamma}, env1, kPs, 0.0, 8 * pi / gamma, 800));
  const double at_half = max_concurrence(row({0.0, 0.0, 0.5 * gamma}, env1, kPs, 0.0, 8 * pi / gamma, 800));
  ok = ok && at_one < at_half;
  d << "; gap maxC(1.0)=" << fmt("%.4f", at_one) << " < maxC(0.5)=" << fmt("%.4f", at_half);

  // White-noise dissipation time against f, for PS and W0011.
  for (const auto& [name, state] : {std::pair{"PS", kPs}, std::pair{"W0011", ewl(WernerVariant::w0011, 1.0)}}) {
    SweepSpec spec;
    spec.system = {0.0, 0.0, 1.0};
    spec.environment = WhiteNoiseMutual{100, 0.5, 0.0, 0};
    spec.state = state;
    spec.axis = SweepParameter::f;
    spec.axis_values = {0.05, 0.1, 0.2};
    spec.time_grid = TimeGrid{0.0, 100.0, 2000};
    const auto grid = run_sweep(spec);
    std::vector<double> td;
    for (std::size_t r = 0; r < grid.rows(); ++r)
      td.push_back(dissipation_time(grid.times, grid.row(r), 0.05).value_or(INFINITY));
    const bool dec = std::is_sorted(td.rbegin(), td.rend());
    ok = ok && dec;
    d << "; " << name << " t_diss(f=0.05,0.1,0.2)=" << fmt("%.3f", td[0]) << "," << fmt("%.3f", td[1]) << ","
      << fmt("%.3f", td[2]) << (dec ? " non-increasing" : " INCREASING");
  }

  // Distribution over distinct baths, N1 + N2 = 8, M = 1.
  auto distinct_diff = [](const InitialState& s) {
    const SystemParams p{0.0, 0.0, 1.0};
    const auto a = row(p, make_environment(DistinctCase1{6, 2, 1.0, 1.0}), s, 0.0, 4 * pi, 400);
    const auto b = row(p, make_environment(DistinctCase1{4, 4, 1.0, 1.0}), s, 0.0, 4 * pi, 400);
    return max_diff(a, b);
  };
  const double ps_diff = distinct_diff(kPs);
  const double bell_diff = distinct_diff(ewl(WernerVariant::w0011, 1.0));
  ok = ok && ps_diff > 1e-3 && bell_diff <= 1e-10;
  d << "; distinct (6,2) vs (4,4) PS diff=" << fmt("%.3e", ps_diff) << " >1e-3, W0011 diff="
    << fmt("%.2e", bell_diff) << " <=1e-10";

  report(ok, "qualitative_claims", d.str());
}

void determinism() {
  const fs::path base = fs::temp_directory_path() / ("entdyn_acceptance_" + std::to_string(std::random_device{}()));
  const fs::path a = base / "a", b = base / "b";
  fs::create_directories(a);
  fs::create_directories(b);
  auto run = [](const fs::path& dir) {
    const std::string cmd = std::string("\"") + ENTDYN_CLI_PATH + "\" -o \"" + (dir / "fig6").string() +
                            "\" preset fig6 --seed 42 > /dev/null";
    return std::system(cmd.c_str());
  };
  bool ok = run(a) == 0 && run(b) == 0;
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    ++files;
    const auto other = b / entry.path().filename();
    ok = ok && fs::exists(other) && io::read_file(entry.path().string()) == io::read_file(other.string());
  }
  ok = ok && files > 0 && files == static_cast<std::size_t>(std::distance(fs::directory_iterator(b), {}));
  fs::remove_all(base);
  report(ok, "determinism", "preset fig6 --seed 42 twice: " + std::to_string(files) +
                                " files " + (ok ? "byte-identical" : "DIFFER or missing"));
}

}  // namespace

int main() {
  oracle_equivalence();
  concurrence_correctness();
  closed_system_law();
  ewl_homogeneous_law();
  frequency_invariances();
  periodicity();
  qualitative_claims();
  determinism();
  std::printf("acceptance: %d failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
