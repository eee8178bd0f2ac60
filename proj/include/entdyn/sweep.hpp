#pragma once

// Parameter-grid evaluation of concurrence over (swept parameter x time).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entdyn/model.hpp"

namespace entdyn {

inline constexpr std::uint64_t kDefaultMasterSeed = 20240917;
inline constexpr int kDefaultTimeSamples = 400;
inline constexpr int kDefaultAxisSamples = 100;

enum class AxisTransform { linear, reciprocal };

/// Uniform time grid. The reciprocal transform only changes how the axis is
/// reported (as 1/t); evaluation always happens at the linear times.
struct TimeGrid {
  double t_min = 0.0;
  double t_max = 1.0;
  int samples = kDefaultTimeSamples;
  AxisTransform transform = AxisTransform::linear;

  void validate() const;
  std::vector<double> times() const;
};

enum class SweepParameter { omega_s1, omega_s2, omega_s1s2, gamma, lambda, n, mu, f, m, n1_share };

std::string_view to_string(SweepParameter p);
SweepParameter parse_sweep_parameter(std::string_view name);

struct SweepSpec {
  std::string label;
  SystemParams system;
  EnvironmentRecipe environment = HomogeneousMutual{};
  InitialState state = ProductState{};
  SweepParameter axis = SweepParameter::omega_s1s2;
  std::vector<double> axis_values;
  TimeGrid time_grid;
  std::uint64_t master_seed = kDefaultMasterSeed;
  int repeats = 1;                   // white-noise draws averaged per row
  std::vector<std::string> assumed;  // settings chosen here rather than taken from a source

  void validate() const;
};

/// The concrete model of one grid row.
struct RowModel {
  SystemParams system;
  EnvironmentRecipe environment;
  InitialState state;
};

/// Applies axis_values[row] to the base configuration and sets every
/// white-noise seed to `seed`. Throws ValidationError if the parameter does
/// not apply to the configuration or the value is out of its domain.
RowModel instantiate_row(const SweepSpec& spec, std::size_t row, std::uint64_t seed);

struct ConcurrenceGrid {
  SweepSpec spec;
  std::vector<double> axis_values;
  std::vector<double> times;
  std::vector<double> values;  // row-major, rows() x cols()
  std::vector<std::uint64_t> row_seeds;

  std::size_t rows() const { return axis_values.size(); }
  std::size_t cols() const { return times.size(); }
  double at(std::size_t r, std::size_t c) const { return values[r * cols() + c]; }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(values).subspan(r * cols(), cols());
  }
};

/// Concurrence along the time grid for one row, seeded with `row_seed`.
std::vector<double> evaluate_row(const SweepSpec& spec, std::size_t row, std::uint64_t row_seed);

/// Evaluates every row, in parallel when threads != 1 (0 = hardware
/// concurrency). The result does not depend on the thread count.
ConcurrenceGrid run_sweep(const SweepSpec& spec, unsigned threads = 0);

std::vector<double> linspace(double lo, double hi, int count);

double max_concurrence(std::span<const double> row);

/// First grid time from which the row stays below `threshold` until the end
/// of the grid; nullopt if the last sample is at or above the threshold.
std::optional<double> dissipation_time(std::span<const double> times, std::span<const double> row,
                                       double threshold);

/// Smallest grid shift s >= 1 with |row[i+s] - row[i]| <= tol for every
/// overlapping i, reported as a time. Shifts are searched up to half the grid
/// so at least half of the row takes part in the comparison.
std::optional<double> revival_period(std::span<const double> times, std::span<const double> row,
                                     double tol);

}  // namespace entdyn
