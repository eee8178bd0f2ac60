#include "entdyn/presets.hpp"

#include <numbers>

namespace entdyn {

namespace {

constexpr double kTwoRevivals = 4.0 * std::numbers::pi;  // two periods of 2 pi / Gamma at Gamma = 1
constexpr double kNoiseWindow = 50.0;

const WernerState kBell0011{WernerVariant::w0011, 1.0};
const WernerState kBell0110{WernerVariant::w0110, 1.0};

std::vector<double> integers(int lo, int hi) {
  std::vector<double> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

SweepSpec base(std::string label, InitialState state, EnvironmentRecipe env, SweepParameter axis,
               std::vector<double> values, double t_max) {
  SweepSpec s;
  s.label = std::move(label);
  s.system.omega_s1s2 = 1.0;
  s.state = state;
  s.environment = env;
  s.axis = axis;
  s.axis_values = std::move(values);
  s.time_grid.t_max = t_max;
  return s;
}

std::string state_tag(const InitialState& state) {
  if (std::holds_alternative<ProductState>(state)) return "ps";
  return std::get<WernerState>(state).variant == WernerVariant::w0011 ? "w0011" : "w0110";
}

// Gamma swept at omega_s1s2 = 1 and omega_s1s2 swept at Gamma = 1, for several N.
std::vector<PresetPanel> gamma_and_omega_columns(const std::string& fig, InitialState state,
                                                 bool gamma_column, bool omega_column) {
  std::vector<PresetPanel> panels;
  for (int n : {1, 5, 10}) {
    const std::string suffix = "_n" + std::to_string(n);
    if (gamma_column) {
      auto s = base(fig + "/gamma" + suffix, state, HomogeneousMutual{n, 1.0},
                    SweepParameter::gamma, linspace(0.0, 5.0, kDefaultAxisSamples), kTwoRevivals);
      s.assumed = {"environment.n", "axis.values", "time_grid"};
      panels.push_back({"gamma" + suffix, s});
    }
    if (omega_column) {
      auto s = base(fig + "/omega" + suffix, state, HomogeneousMutual{n, 1.0},
                    SweepParameter::omega_s1s2, linspace(0.0, 5.0, kDefaultAxisSamples),
                    kTwoRevivals);
      s.assumed = {"environment.n", "axis.values", "time_grid"};
      panels.push_back({"omega" + suffix, s});
    }
  }
  return panels;
}

std::vector<PresetPanel> fig2a() {
  auto s = base("fig2a/ps", make_unbiased_ps(), HomogeneousMutual{1, 1.0}, SweepParameter::omega_s1,
                linspace(0.0, 5.0, kDefaultAxisSamples), kTwoRevivals);
  s.system.omega_s2 = 1.0;
  s.assumed = {"system.omega_s2", "environment.n", "axis.values", "time_grid"};
  return {{"ps", s}};
}

std::vector<PresetPanel> fig3() {
  std::vector<PresetPanel> panels;
  for (const auto& w : {kBell0011, kBell0110}) {
    const auto tag = state_tag(w);
    auto s = base("fig3/" + tag, w, HomogeneousMutual{1, 0.5}, SweepParameter::lambda,
                  linspace(0.0, 1.0, kDefaultAxisSamples), kTwoRevivals);
    s.assumed = {"environment.n", "time_grid"};
    panels.push_back({tag, s});
  }
  return panels;
}

std::vector<PresetPanel> fig5() {
  std::vector<PresetPanel> panels;
  const InitialState ps = make_unbiased_ps();
  auto add = [&](const std::string& name, const InitialState& state, SweepParameter axis) {
    auto s = base("fig5/" + name, state, HomogeneousMutual{1, 1.0}, axis,
                  linspace(0.05, 5.0, kDefaultAxisSamples), 20.0);
    s.time_grid.t_min = 0.1;
    s.time_grid.transform = AxisTransform::reciprocal;
    s.assumed = {"axis.values", "time_grid"};
    panels.push_back({name, s});
  };
  add("ps_gamma", ps, SweepParameter::gamma);
  add("ps_omega", ps, SweepParameter::omega_s1s2);
  add("w0011_gamma", kBell0011, SweepParameter::gamma);
  return panels;
}

std::vector<PresetPanel> white_noise_panels(const std::string& fig, SweepParameter axis,
                                            std::vector<double> values, int n,
                                            std::vector<std::string> assumed) {
  std::vector<PresetPanel> panels;
  for (const InitialState& state : {make_unbiased_ps(), InitialState{kBell0011},
                                    InitialState{kBell0110}}) {
    const auto tag = state_tag(state);
    auto s = base(fig + "/" + tag, state, WhiteNoiseMutual{n, 0.5, 0.1, 0}, axis, values,
                  kNoiseWindow);
    s.assumed = assumed;
    panels.push_back({tag, s});
  }
  return panels;
}

std::vector<PresetPanel> fig8() {
  std::vector<PresetPanel> panels;
  for (const InitialState& state : {make_unbiased_ps(), InitialState{kBell0011}}) {
    const auto tag = state_tag(state);
    auto s = base("fig8/" + tag, state, DistinctCase1{1, 1, 1.0, 1.0}, SweepParameter::m,
                  linspace(0.0, 4.0, kDefaultAxisSamples), kTwoRevivals);
    s.assumed = {"environment.n1", "environment.n2", "axis.values", "time_grid"};
    panels.push_back({tag, s});
  }
  return panels;
}

std::vector<PresetPanel> fig9(const InitialState& state) {
  const auto tag = state_tag(state);
  auto s = base("fig9/" + tag, state, DistinctCase1{4, 4, 1.0, 1.0}, SweepParameter::n1_share,
                integers(0, 8), kTwoRevivals);
  s.assumed = {"environment.n1 + environment.n2", "environment.gamma_s2", "time_grid"};
  return {{tag, s}};
}

std::vector<PresetPanel> fig10() {
  constexpr double mu = 0.5;
  constexpr double m = 1.0;
  std::vector<PresetPanel> panels;
  for (const InitialState& state : {make_unbiased_ps(), InitialState{kBell0011}}) {
    const auto tag = state_tag(state);
    // f = 0.1 mu taken literally; homogeneous coupling M mu.
    auto s = base("fig10/" + tag, state, Mixed{10, m * mu, 10, mu, 0.1 * mu, 0},
                  SweepParameter::n1_share, integers(0, 20), kNoiseWindow);
    s.assumed = {"environment.mu", "environment.n1 + environment.n2", "time_grid"};
    panels.push_back({tag, s});
  }
  return panels;
}

}  // namespace

const std::vector<std::string>& preset_ids() {
  static const std::vector<std::string> ids = {"fig2a", "fig2b_gamma", "fig2b_omega", "fig3",
                                               "fig4",  "fig5",        "fig6",        "fig7",
                                               "fig8",  "fig9a",       "fig9b",       "fig10"};
  return ids;
}

std::vector<PresetPanel> make_preset(std::string_view id) {
  if (id == "fig2a") return fig2a();
  if (id == "fig2b_gamma") return gamma_and_omega_columns("fig2b_gamma", make_unbiased_ps(), true, false);
  if (id == "fig2b_omega") return gamma_and_omega_columns("fig2b_omega", make_unbiased_ps(), false, true);
  if (id == "fig3") return fig3();
  if (id == "fig4") return gamma_and_omega_columns("fig4", kBell0011, true, true);
  if (id == "fig5") return fig5();
  if (id == "fig6")
    return white_noise_panels("fig6", SweepParameter::mu, linspace(0.1, 2.0, kDefaultAxisSamples),
                              10, {"environment.n", "axis.values", "time_grid"});
  if (id == "fig7")
    return white_noise_panels("fig7", SweepParameter::n, integers(1, 100), 1,
                              {"axis.values", "time_grid"});
  if (id == "fig8") return fig8();
  if (id == "fig9a") return fig9(make_unbiased_ps());
  if (id == "fig9b") return fig9(kBell0011);
  if (id == "fig10") return fig10();
  throw ValidationError("unknown preset '" + std::string(id) + "'");
}

}  // namespace entdyn
