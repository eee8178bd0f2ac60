#include "entdyn/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "entdyn/dynamics.hpp"
#include "entdyn/entanglement.hpp"
#include "entdyn/random.hpp"

namespace entdyn {

namespace {

constexpr struct {
  SweepParameter param;
  std::string_view name;
} kParameterNames[] = {
    {SweepParameter::omega_s1, "omega_s1"}, {SweepParameter::omega_s2, "omega_s2"},
    {SweepParameter::omega_s1s2, "omega_s1s2"}, {SweepParameter::gamma, "gamma"},
    {SweepParameter::lambda, "lambda"},       {SweepParameter::n, "N"},
    {SweepParameter::mu, "mu"},               {SweepParameter::f, "f"},
    {SweepParameter::m, "M"},                 {SweepParameter::n1_share, "N1_share"},
};

int as_count(double v, std::string_view name) {
  if (!std::isfinite(v) || v != std::floor(v) || v < 0.0 || v > 1e6)
    throw ValidationError(std::string(name) + " must be a non-negative integer, got " +
                          std::to_string(v));
  return static_cast<int>(v);
}

[[noreturn]] void not_applicable(SweepParameter p, const EnvironmentRecipe& env) {
  throw ValidationError("swept parameter '" + std::string(to_string(p)) +
                        "' does not apply to environment '" + recipe_kind(env) + "'");
}

void apply_axis(RowModel& model, SweepParameter p, double v) {
  auto& env = model.environment;
  switch (p) {
    case SweepParameter::omega_s1: model.system.omega_s1 = v; return;
    case SweepParameter::omega_s2: model.system.omega_s2 = v; return;
    case SweepParameter::omega_s1s2: model.system.omega_s1s2 = v; return;
    case SweepParameter::lambda:
      if (auto* w = std::get_if<WernerState>(&model.state)) {
        w->purity = v;
        return;
      }
      throw ValidationError("swept parameter 'lambda' requires an EWL initial state");
    case SweepParameter::gamma:
      if (auto* r = std::get_if<HomogeneousMutual>(&env)) r->gamma = v;
      else if (auto* r = std::get_if<DistinctHomogeneous>(&env)) r->gamma_s1 = r->gamma_s2 = v;
      else if (auto* r = std::get_if<DistinctCase1>(&env)) r->gamma_s2 = v;
      else if (auto* r = std::get_if<Mixed>(&env)) r->gamma_s1 = v;
      else not_applicable(p, env);
      return;
    case SweepParameter::n: {
      const int n = as_count(v, "N");
      if (auto* r = std::get_if<HomogeneousMutual>(&env)) r->n = n;
      else if (auto* r = std::get_if<WhiteNoiseMutual>(&env)) r->n = n;
      else if (auto* r = std::get_if<DistinctHomogeneous>(&env)) r->n1 = r->n2 = n;
      else if (auto* r = std::get_if<DistinctCase1>(&env)) r->n1 = r->n2 = n;
      else not_applicable(p, env);
      return;
    }
    case SweepParameter::mu:
      if (auto* r = std::get_if<WhiteNoiseMutual>(&env)) r->mu = v;
      else if (auto* r = std::get_if<Mixed>(&env)) r->mu = v;
      else not_applicable(p, env);
      return;
    case SweepParameter::f:
      if (auto* r = std::get_if<WhiteNoiseMutual>(&env)) r->f = v;
      else if (auto* r = std::get_if<Mixed>(&env)) r->f = v;
      else not_applicable(p, env);
      return;
    case SweepParameter::m:
      if (auto* r = std::get_if<DistinctCase1>(&env)) r->m = v;
      else not_applicable(p, env);
      return;
    case SweepParameter::n1_share: {
      const int n1 = as_count(v, "N1_share");
      auto split = [&](int& a, int& b) {
        const int total = a + b;
        if (n1 > total)
          throw ValidationError("N1_share " + std::to_string(n1) + " exceeds N1 + N2 = " +
                                std::to_string(total));
        a = n1;
        b = total - n1;
      };
      if (auto* r = std::get_if<DistinctHomogeneous>(&env)) split(r->n1, r->n2);
      else if (auto* r = std::get_if<DistinctCase1>(&env)) split(r->n1, r->n2);
      else if (auto* r = std::get_if<Mixed>(&env)) split(r->n1, r->n2);
      else not_applicable(p, env);
      return;
    }
  }
}

void set_seed(EnvironmentRecipe& env, std::uint64_t seed) {
  if (auto* r = std::get_if<WhiteNoiseMutual>(&env)) r->seed = seed;
  else if (auto* r = std::get_if<Mixed>(&env)) r->seed = seed;
}

bool is_stochastic(const EnvironmentRecipe& env) {
  return std::holds_alternative<WhiteNoiseMutual>(env) || std::holds_alternative<Mixed>(env);
}

}  // namespace

void TimeGrid::validate() const {
  if (!std::isfinite(t_min) || !std::isfinite(t_max) || t_min < 0.0)
    throw ValidationError("time grid requires finite t_min >= 0");
  if (!(t_max > t_min)) throw ValidationError("time grid requires t_max > t_min");
  if (samples < 2) throw ValidationError("time grid requires at least 2 samples");
  if (transform == AxisTransform::reciprocal && !(t_min > 0.0))
    throw ValidationError("reciprocal time axis requires t_min > 0");
}

std::vector<double> TimeGrid::times() const {
  validate();
  return linspace(t_min, t_max, samples);
}

std::string_view to_string(SweepParameter p) {
  for (const auto& e : kParameterNames)
    if (e.param == p) return e.name;
  return "?";
}

SweepParameter parse_sweep_parameter(std::string_view name) {
  for (const auto& e : kParameterNames)
    if (e.name == name) return e.param;
  throw ValidationError("unknown swept parameter '" + std::string(name) + "'");
}

void SweepSpec::validate() const {
  system.validate();
  entdyn::validate(state);
  time_grid.validate();
  if (axis_values.empty()) throw ValidationError("sweep needs at least one axis value");
  for (double v : axis_values)
    if (!std::isfinite(v)) throw ValidationError("axis values must be finite");
  if (repeats < 1) throw ValidationError("repeats must be >= 1");
}

RowModel instantiate_row(const SweepSpec& spec, std::size_t row, std::uint64_t seed) {
  RowModel model{spec.system, spec.environment, spec.state};
  apply_axis(model, spec.axis, spec.axis_values.at(row));
  set_seed(model.environment, seed);
  model.system.validate();
  validate(model.state);
  return model;
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out(static_cast<std::size_t>(std::max(count, 0)));
  if (count == 1) out[0] = lo;
  for (int i = 0; i < count && count > 1; ++i)
    out[i] = (i == count - 1) ? hi : lo + (hi - lo) * i / (count - 1);
  return out;
}

std::vector<double> evaluate_row(const SweepSpec& spec, std::size_t row, std::uint64_t row_seed) {
  const auto times = spec.time_grid.times();
  std::vector<double> acc(times.size(), 0.0);
  const int draws = is_stochastic(spec.environment) ? spec.repeats : 1;
  for (int rep = 0; rep < draws; ++rep) {
    const auto model = instantiate_row(spec, row, derive_repeat_seed(row_seed, rep));
    const auto env = make_environment(model.environment);
    const auto coeffs = initial_coefficients(model.state);
    for (std::size_t j = 0; j < times.size(); ++j)
      acc[j] += concurrence(reduced_density_unchecked(model.system, env, coeffs, times[j]));
  }
  if (draws > 1)
    for (auto& v : acc) v /= draws;
  return acc;
}

ConcurrenceGrid run_sweep(const SweepSpec& spec, unsigned threads) {
  spec.validate();
  ConcurrenceGrid grid;
  grid.spec = spec;
  grid.axis_values = spec.axis_values;
  grid.times = spec.time_grid.times();
  const std::size_t rows = grid.axis_values.size();
  const std::size_t cols = grid.times.size();
  grid.values.assign(rows * cols, 0.0);
  grid.row_seeds.resize(rows);
  for (std::size_t r = 0; r < rows; ++r) grid.row_seeds[r] = derive_row_seed(spec.master_seed, r);

  std::vector<std::exception_ptr> errors(rows);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next++; r < rows; r = next++) {
      try {
        const auto values = evaluate_row(spec, r, grid.row_seeds[r]);
        std::copy(values.begin(), values.end(), grid.values.begin() + r * cols);
      } catch (...) {
        errors[r] = std::current_exception();
      }
    }
  };

  unsigned n_threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, rows));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  }

  // Report the lowest failing row so the diagnostic is independent of scheduling.
  for (std::size_t r = 0; r < rows; ++r) {
    if (!errors[r]) continue;
    const std::string where = "row " + std::to_string(r) + " (" +
                              std::string(to_string(spec.axis)) + " = " +
                              std::to_string(spec.axis_values[r]) + "): ";
    try {
      std::rethrow_exception(errors[r]);
    } catch (const ValidationError& e) {
      throw ValidationError(where + e.what());
    } catch (const InvariantError& e) {
      throw InvariantError(where + e.what());
    }
  }
  return grid;
}

double max_concurrence(std::span<const double> row) {
  if (row.empty()) throw ValidationError("empty row");
  return *std::max_element(row.begin(), row.end());
}

std::optional<double> dissipation_time(std::span<const double> times, std::span<const double> row,
                                       double threshold) {
  if (row.empty() || times.size() != row.size())
    throw ValidationError("times and row must be nonempty and of equal length");
  std::size_t i = row.size();
  while (i > 0 && row[i - 1] < threshold) --i;
  if (i == row.size()) return std::nullopt;
  return times[i];
}

std::optional<double> revival_period(std::span<const double> times, std::span<const double> row,
                                     double tol) {
  if (row.empty() || times.size() != row.size())
    throw ValidationError("times and row must be nonempty and of equal length");
  const std::size_t n = row.size();
  for (std::size_t s = 1; 2 * s <= n; ++s) {
    bool match = true;
    for (std::size_t i = 0; i + s < n && match; ++i) match = std::abs(row[i + s] - row[i]) <= tol;
    if (match) return times[s] - times[0];
  }
  return std::nullopt;
}

}  // namespace entdyn
