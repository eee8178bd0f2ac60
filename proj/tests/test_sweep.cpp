#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "entdyn/dynamics.hpp"
#include "entdyn/entanglement.hpp"
#include "entdyn/random.hpp"
#include "entdyn/sweep.hpp"

using namespace entdyn;
using std::numbers::pi;

namespace {

SweepSpec small_spec() {
  SweepSpec s;
  s.label = "test";
  s.system = SystemParams{0.0, 1.0, 1.0};
  s.environment = HomogeneousMutual{1, 1.0};
  s.state = make_unbiased_ps();
  s.axis = SweepParameter::omega_s1;
  s.axis_values = {0.0, 1.0, 2.5};
  s.time_grid = TimeGrid{0.0, 4 * pi, 50};
  return s;
}

}  // namespace

TEST_CASE("white-noise sampling") {
  SUBCASE("zero width returns mu exactly") {
    for (double v : sample_white_noise(0.37, 0.0, 5, 100)) CHECK(v == 0.37);
  }
  SUBCASE("range") {
    const auto v = sample_white_noise(0.5, 0.1, 123, 10000);
    double lo = 1, hi = 0, mean = 0;
    for (double x : v) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
      mean += x / v.size();
    }
    CHECK(lo >= 0.4);
    CHECK(hi <= 0.6);
    CHECK(lo < 0.41);
    CHECK(hi > 0.59);
    CHECK(std::abs(mean - 0.5) < 0.005);
  }
  SUBCASE("lower bound folds at |mu - f|") {
    for (double x : sample_white_noise(0.1, 0.3, 7, 1000)) {
      CHECK(x >= 0.2);
      CHECK(x <= 0.4);
    }
  }
  SUBCASE("determinism") {
    CHECK(sample_white_noise(1.0, 0.5, 42, 64) == sample_white_noise(1.0, 0.5, 42, 64));
    CHECK(sample_white_noise(1.0, 0.5, 42, 64) != sample_white_noise(1.0, 0.5, 43, 64));
    // Prefix stability: fewer draws give a prefix of more draws.
    const auto a = sample_white_noise(1.0, 0.5, 42, 10);
    const auto b = sample_white_noise(1.0, 0.5, 42, 20);
    CHECK(std::equal(a.begin(), a.end(), b.begin()));
  }
  SUBCASE("invalid") {
    CHECK_THROWS_AS(sample_white_noise(-1.0, 0.1, 0, 1), ValidationError);
    CHECK_THROWS_AS(sample_white_noise(1.0, -0.1, 0, 1), ValidationError);
  }
}

TEST_CASE("seed derivation") {
  // First output of a SplitMix64 generator seeded with 0.
  CHECK(mix64(0) == 0xE220A8397B1DCDAFull);
  CHECK(derive_row_seed(7, 0) == mix64(7));
  CHECK(derive_repeat_seed(99, 0) == 99);
  std::set<std::uint64_t> seen;
  for (std::size_t r = 0; r < 1000; ++r) seen.insert(derive_row_seed(kDefaultMasterSeed, r));
  CHECK(seen.size() == 1000);
  CHECK(derive_repeat_seed(99, 1) != derive_repeat_seed(99, 2));
}

TEST_CASE("time grid and linspace") {
  const auto t = TimeGrid{0.0, 2.0, 5}.times();
  REQUIRE(t.size() == 5);
  CHECK(t.front() == 0.0);
  CHECK(t.back() == 2.0);
  CHECK(t[2] == doctest::Approx(1.0));
  CHECK(linspace(1.0, 1.0, 1) == std::vector<double>{1.0});
  CHECK(linspace(0.0, 1.0, 0).empty());

  CHECK_THROWS_AS((TimeGrid{1.0, 1.0, 5}.validate()), ValidationError);
  CHECK_THROWS_AS((TimeGrid{0.0, 1.0, 1}.validate()), ValidationError);
  CHECK_THROWS_AS((TimeGrid{-1.0, 1.0, 5}.validate()), ValidationError);
  CHECK_THROWS_AS((TimeGrid{0.0, 1.0, 5, AxisTransform::reciprocal}.validate()), ValidationError);
  CHECK_NOTHROW((TimeGrid{0.1, 1.0, 5, AxisTransform::reciprocal}.validate()));
}

TEST_CASE("parameter names round trip") {
  for (auto p : {SweepParameter::omega_s1, SweepParameter::omega_s2, SweepParameter::omega_s1s2,
                 SweepParameter::gamma, SweepParameter::lambda, SweepParameter::n, SweepParameter::mu,
                 SweepParameter::f, SweepParameter::m, SweepParameter::n1_share})
    CHECK(parse_sweep_parameter(to_string(p)) == p);
  CHECK_THROWS_AS(parse_sweep_parameter("bogus"), ValidationError);
}

TEST_CASE("grid values match direct evaluation") {
  const auto spec = small_spec();
  const auto grid = run_sweep(spec, 1);
  REQUIRE(grid.rows() == 3);
  REQUIRE(grid.cols() == 50);
  const auto env = make_environment(HomogeneousMutual{1, 1.0});
  for (std::size_t r = 0; r < grid.rows(); ++r)
    for (std::size_t c = 0; c < grid.cols(); ++c) {
      const SystemParams p{spec.axis_values[r], 1.0, 1.0};
      CHECK(grid.at(r, c) == concurrence(reduced_density(p, env, spec.state, grid.times[c])));
    }
}

TEST_CASE("closed-system sweep over omega_s1s2") {
  auto spec = small_spec();
  spec.environment = HomogeneousMutual{0, 0.0};
  spec.axis = SweepParameter::omega_s1s2;
  spec.axis_values = {0.5, 1.0, 2.0};
  const auto grid = run_sweep(spec);
  for (std::size_t r = 0; r < grid.rows(); ++r)
    for (std::size_t c = 0; c < grid.cols(); ++c)
      CHECK(std::abs(grid.at(r, c) - std::abs(std::sin(spec.axis_values[r] * grid.times[c]))) < 1e-10);
}

TEST_CASE("omega_s1 sweeps give identical rows") {
  for (const InitialState& state : {make_unbiased_ps(), InitialState{WernerState{WernerVariant::w0011, 0.8}},
                                    InitialState{WernerState{WernerVariant::w0110, 1.0}}}) {
    SweepSpec spec = small_spec();
    spec.environment = HomogeneousMutual{3, 0.7};
    spec.state = state;
    spec.axis_values = linspace(0.0, 5.0, 6);
    const auto grid = run_sweep(spec);
    for (std::size_t r = 1; r < grid.rows(); ++r)
      for (std::size_t c = 0; c < grid.cols(); ++c) CHECK(std::abs(grid.at(r, c) - grid.at(0, c)) < 1e-10);
  }
}

TEST_CASE("W0110 lambda sweep is constant in time") {
  SweepSpec spec = small_spec();
  spec.environment = HomogeneousMutual{4, 0.9};
  spec.state = WernerState{WernerVariant::w0110, 1.0};
  spec.axis = SweepParameter::lambda;
  spec.axis_values = linspace(0.0, 1.0, 11);
  const auto grid = run_sweep(spec);
  for (std::size_t r = 0; r < grid.rows(); ++r) {
    const double expected = std::max(0.0, (3 * spec.axis_values[r] - 1) / 2);
    for (double v : grid.row(r)) CHECK(std::abs(v - expected) < 1e-10);
  }
}

TEST_CASE("thread count does not change results") {
  SweepSpec spec = small_spec();
  spec.environment = WhiteNoiseMutual{6, 0.5, 0.2, 0};
  spec.axis = SweepParameter::f;
  spec.axis_values = linspace(0.0, 0.4, 9);
  spec.repeats = 3;
  const auto a = run_sweep(spec, 1);
  for (unsigned threads : {2u, 4u, 0u}) {
    const auto b = run_sweep(spec, threads);
    CHECK(a.values == b.values);
    CHECK(a.row_seeds == b.row_seeds);
  }
}

TEST_CASE("rows are independent of their neighbours") {
  SweepSpec spec = small_spec();
  spec.environment = WhiteNoiseMutual{6, 0.5, 0.2, 0};
  spec.axis = SweepParameter::mu;
  spec.axis_values = {0.3, 0.6, 0.9};
  const auto full = run_sweep(spec, 1);
  for (std::size_t r = 0; r < 3; ++r) {
    const auto single = evaluate_row(spec, r, derive_row_seed(spec.master_seed, r));
    CHECK(std::equal(single.begin(), single.end(), full.row(r).begin()));
  }
}

TEST_CASE("repeats average independent draws") {
  SweepSpec spec = small_spec();
  spec.environment = WhiteNoiseMutual{4, 0.5, 0.3, 0};
  spec.axis = SweepParameter::mu;
  spec.axis_values = {0.5};
  spec.repeats = 4;
  const std::uint64_t seed = derive_row_seed(spec.master_seed, 0);
  const auto averaged = evaluate_row(spec, 0, seed);
  std::vector<double> manual(averaged.size(), 0.0);
  for (int rep = 0; rep < 4; ++rep) {
    const auto env = make_environment(WhiteNoiseMutual{4, 0.5, 0.3, derive_repeat_seed(seed, rep)});
    const auto times = spec.time_grid.times();
    for (std::size_t j = 0; j < times.size(); ++j)
      manual[j] += concurrence(reduced_density(spec.system, env, spec.state, times[j])) / 4;
  }
  for (std::size_t j = 0; j < manual.size(); ++j) CHECK(std::abs(averaged[j] - manual[j]) < 1e-15);

  // Deterministic recipes ignore repeats.
  SweepSpec det = small_spec();
  const auto one = run_sweep(det, 1);
  det.repeats = 5;
  CHECK(run_sweep(det, 1).values == one.values);
}

TEST_CASE("axis semantics") {
  SweepSpec spec = small_spec();
  SUBCASE("N on distinct baths sets both sizes") {
    spec.environment = DistinctCase1{1, 1, 1.0, 2.0};
    spec.axis = SweepParameter::n;
    spec.axis_values = {3};
    const auto model = instantiate_row(spec, 0, 0);
    const auto& r = std::get<DistinctCase1>(model.environment);
    CHECK(r.n1 == 3);
    CHECK(r.n2 == 3);
  }
  SUBCASE("N1_share keeps the total") {
    spec.environment = DistinctCase1{4, 4, 1.0, 1.0};
    spec.axis = SweepParameter::n1_share;
    spec.axis_values = {6};
    const auto& r = std::get<DistinctCase1>(instantiate_row(spec, 0, 0).environment);
    CHECK(r.n1 == 6);
    CHECK(r.n2 == 2);
  }
  SUBCASE("seed reaches the recipe") {
    spec.environment = WhiteNoiseMutual{2, 0.5, 0.1, 0};
    spec.axis = SweepParameter::mu;
    spec.axis_values = {0.5};
    CHECK(std::get<WhiteNoiseMutual>(instantiate_row(spec, 0, 1234).environment).seed == 1234);
  }
  SUBCASE("inapplicable parameter") {
    spec.axis = SweepParameter::mu;
    spec.axis_values = {0.5};
    CHECK_THROWS_AS(instantiate_row(spec, 0, 0), ValidationError);
    spec.axis = SweepParameter::lambda;
    CHECK_THROWS_AS(instantiate_row(spec, 0, 0), ValidationError);
  }
  SUBCASE("non-integer count") {
    spec.axis = SweepParameter::n;
    spec.axis_values = {2.5};
    CHECK_THROWS_AS(instantiate_row(spec, 0, 0), ValidationError);
  }
}

TEST_CASE("errors identify the failing row") {
  SweepSpec spec = small_spec();
  spec.axis = SweepParameter::omega_s1;
  spec.axis_values = {0.5, 1.0, -2.0, -3.0};
  try {
    run_sweep(spec, 4);
    FAIL("expected an error");
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("row 2") == 0);
    CHECK(msg.find("omega_s1") != std::string::npos);
  }
  spec.axis_values.clear();
  CHECK_THROWS_AS(run_sweep(spec), ValidationError);
}

TEST_CASE("row analyses") {
  const std::vector<double> t{0, 1, 2, 3, 4, 5};
  SUBCASE("max") {
    CHECK(max_concurrence(std::vector<double>{0.1, 0.7, 0.3}) == 0.7);
    CHECK_THROWS_AS(max_concurrence(std::vector<double>{}), ValidationError);
  }
  SUBCASE("dissipation time") {
    CHECK(dissipation_time(t, std::vector<double>{1, 0.5, 0.2, 0.01, 0.02, 0.0}, 0.05) == 3.0);
    CHECK(dissipation_time(t, std::vector<double>{0, 0, 0, 0, 0, 0}, 0.05) == 0.0);
    CHECK_FALSE(dissipation_time(t, std::vector<double>{0, 0, 0, 0, 0, 0.1}, 0.05).has_value());
    // A revival above threshold resets the run.
    CHECK(dissipation_time(t, std::vector<double>{1, 0.0, 0.0, 0.5, 0.0, 0.0}, 0.05) == 4.0);
    CHECK_THROWS_AS(dissipation_time(t, std::vector<double>{1, 2}, 0.05), ValidationError);
  }
  SUBCASE("constant row") {
    const std::vector<double> c(6, 0.4);
    CHECK(max_concurrence(c) == 0.4);
    CHECK_FALSE(dissipation_time(t, c, 0.05).has_value());
    CHECK(revival_period(t, c, 1e-9) == 1.0);
  }
  SUBCASE("EWL row |cos 2t|^N has period pi/2") {
    const auto env = make_environment(HomogeneousMutual{3, 1.0});
    const auto times = linspace(0.0, 4 * pi, 400);
    std::vector<double> row;
    for (double tt : times)
      row.push_back(concurrence(reduced_density(SystemParams{0.2, 0.9, 1.0}, env, WernerState{WernerVariant::w0011, 1.0}, tt)));
    // The grid does not contain pi/2 exactly; allow the error of one step.
    const double step = times[1] - times[0];
    const auto p = revival_period(times, row, 0.05);
    REQUIRE(p.has_value());
    CHECK(std::abs(*p - pi / 2) <= step);
  }
  SUBCASE("white-noise row dissipates") {
    for (const InitialState& state : {make_unbiased_ps(), InitialState{WernerState{WernerVariant::w0011, 1.0}}}) {
      SweepSpec spec = small_spec();
      spec.environment = WhiteNoiseMutual{100, 0.5, 0.1, 0};
      spec.state = state;
      spec.axis = SweepParameter::mu;
      spec.axis_values = {0.5};
      spec.time_grid = TimeGrid{0.0, 100.0, 1000};
      const auto grid = run_sweep(spec);
      const auto td = dissipation_time(grid.times, grid.row(0), 0.01);
      REQUIRE(td.has_value());
      CHECK(*td <= 100.0);
    }
  }
  SUBCASE("revival period") {
    std::vector<double> times, row;
    for (int i = 0; i < 200; ++i) {
      times.push_back(i * 0.1);
      row.push_back(std::abs(std::sin(pi * i / 25.0)));  // period 25 samples
    }
    const auto p = revival_period(times, row, 1e-9);
    REQUIRE(p.has_value());
    CHECK(*p == doctest::Approx(2.5));
    CHECK_FALSE(revival_period(t, std::vector<double>{0, 1, 2, 3, 4, 5}, 1e-9).has_value());
  }
}
