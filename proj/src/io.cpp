#include "entdyn/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace entdyn::io {

using nlohmann::json;

namespace {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw ValidationError("complex value must be [re, im]");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json recipe_to_json(const EnvironmentRecipe& recipe) {
  json j;
  j["kind"] = recipe_kind(recipe);
  if (const auto* r = std::get_if<HomogeneousMutual>(&recipe)) {
    j["n"] = r->n;
    j["gamma"] = r->gamma;
  } else if (const auto* r = std::get_if<WhiteNoiseMutual>(&recipe)) {
    j["n"] = r->n;
    j["mu"] = r->mu;
    j["f"] = r->f;
  } else if (const auto* r = std::get_if<DistinctHomogeneous>(&recipe)) {
    j["n1"] = r->n1;
    j["gamma_s1"] = r->gamma_s1;
    j["n2"] = r->n2;
    j["gamma_s2"] = r->gamma_s2;
  } else if (const auto* r = std::get_if<DistinctCase1>(&recipe)) {
    j["n1"] = r->n1;
    j["n2"] = r->n2;
    j["gamma_s2"] = r->gamma_s2;
    j["M"] = r->m;
  } else {
    const auto& m = std::get<Mixed>(recipe);
    j["n1"] = m.n1;
    j["gamma_s1"] = m.gamma_s1;
    j["n2"] = m.n2;
    j["mu"] = m.mu;
    j["f"] = m.f;
  }
  return j;
}

EnvironmentRecipe recipe_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "homogeneous_mutual")
    return HomogeneousMutual{j.at("n").get<int>(), j.at("gamma").get<double>()};
  if (kind == "white_noise_mutual")
    return WhiteNoiseMutual{j.at("n").get<int>(), j.at("mu").get<double>(), j.at("f").get<double>(), 0};
  if (kind == "distinct_homogeneous")
    return DistinctHomogeneous{j.at("n1").get<int>(), j.at("gamma_s1").get<double>(),
                               j.at("n2").get<int>(), j.at("gamma_s2").get<double>()};
  if (kind == "distinct_case1")
    return DistinctCase1{j.at("n1").get<int>(), j.at("n2").get<int>(),
                         j.at("gamma_s2").get<double>(), j.at("M").get<double>()};
  if (kind == "mixed")
    return Mixed{j.at("n1").get<int>(), j.at("gamma_s1").get<double>(), j.at("n2").get<int>(),
                 j.at("mu").get<double>(), j.at("f").get<double>(), 0};
  throw ValidationError("unknown environment kind '" + kind + "'");
}

json state_to_json(const InitialState& state) {
  if (const auto* ps = std::get_if<ProductState>(&state)) {
    return json{{"kind", "ps"},
                {"a0_1", complex_to_json(ps->a0_1)},
                {"a1_1", complex_to_json(ps->a1_1)},
                {"a0_2", complex_to_json(ps->a0_2)},
                {"a1_2", complex_to_json(ps->a1_2)}};
  }
  const auto& w = std::get<WernerState>(state);
  return json{{"kind", "ewl"},
              {"variant", w.variant == WernerVariant::w0011 ? "W0011" : "W0110"},
              {"purity", w.purity}};
}

InitialState state_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "ps") {
    ProductState ps;
    if (j.contains("a0_1")) ps.a0_1 = complex_from_json(j["a0_1"]);
    if (j.contains("a1_1")) ps.a1_1 = complex_from_json(j["a1_1"]);
    if (j.contains("a0_2")) ps.a0_2 = complex_from_json(j["a0_2"]);
    if (j.contains("a1_2")) ps.a1_2 = complex_from_json(j["a1_2"]);
    return ps;
  }
  if (kind == "ewl") {
    const auto variant = j.at("variant").get<std::string>();
    WernerState w;
    if (variant == "W0011") w.variant = WernerVariant::w0011;
    else if (variant == "W0110") w.variant = WernerVariant::w0110;
    else throw ValidationError("unknown EWL variant '" + variant + "'");
    w.purity = j.value("purity", 1.0);
    return w;
  }
  throw ValidationError("unknown initial state kind '" + kind + "'");
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

json to_json(const SweepSpec& spec) {
  json j;
  j["label"] = spec.label;
  j["system"] = {{"omega_s1", spec.system.omega_s1},
                 {"omega_s2", spec.system.omega_s2},
                 {"omega_s1s2", spec.system.omega_s1s2}};
  j["environment"] = recipe_to_json(spec.environment);
  j["initial_state"] = state_to_json(spec.state);
  j["axis"] = {{"parameter", std::string(to_string(spec.axis))}, {"values", spec.axis_values}};
  j["time_grid"] = {
      {"t_min", spec.time_grid.t_min},
      {"t_max", spec.time_grid.t_max},
      {"samples", spec.time_grid.samples},
      {"axis_transform",
       spec.time_grid.transform == AxisTransform::reciprocal ? "reciprocal" : "linear"}};
  j["master_seed"] = spec.master_seed;
  j["repeats"] = spec.repeats;
  j["assumed"] = spec.assumed;
  return j;
}

SweepSpec spec_from_json(const json& j) {
  try {
    SweepSpec spec;
    spec.label = j.value("label", std::string{});
    if (j.contains("system")) {
      const auto& s = j["system"];
      spec.system.omega_s1 = s.value("omega_s1", 0.0);
      spec.system.omega_s2 = s.value("omega_s2", 0.0);
      spec.system.omega_s1s2 = s.value("omega_s1s2", 0.0);
    }
    spec.environment = recipe_from_json(j.at("environment"));
    spec.state = state_from_json(j.at("initial_state"));
    spec.axis = parse_sweep_parameter(j.at("axis").at("parameter").get<std::string>());
    spec.axis_values = j.at("axis").at("values").get<std::vector<double>>();
    const auto& g = j.at("time_grid");
    spec.time_grid.t_min = g.value("t_min", 0.0);
    spec.time_grid.t_max = g.at("t_max").get<double>();
    spec.time_grid.samples = g.value("samples", kDefaultTimeSamples);
    const auto transform = g.value("axis_transform", std::string{"linear"});
    if (transform == "linear") spec.time_grid.transform = AxisTransform::linear;
    else if (transform == "reciprocal") spec.time_grid.transform = AxisTransform::reciprocal;
    else throw ValidationError("unknown axis_transform '" + transform + "'");
    spec.master_seed = j.value("master_seed", kDefaultMasterSeed);
    spec.repeats = j.value("repeats", 1);
    spec.assumed = j.value("assumed", std::vector<std::string>{});
    return spec;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed sweep spec: ") + e.what());
  }
}

json manifest(const ConcurrenceGrid& grid) {
  return json{{"tool", kToolName},
              {"version", kToolVersion},
              {"spec", to_json(grid.spec)},
              {"row_seeds", grid.row_seeds}};
}

SweepSpec spec_from_document(const json& doc) {
  if (doc.contains("manifest")) return spec_from_json(doc.at("manifest").at("spec"));
  if (doc.contains("spec")) return spec_from_json(doc.at("spec"));
  return spec_from_json(doc);
}

std::string to_csv(const ConcurrenceGrid& grid) {
  const bool reciprocal = grid.spec.time_grid.transform == AxisTransform::reciprocal;
  std::string out = reciprocal ? "axis,inv_t,concurrence\n" : "axis,t,concurrence\n";
  for (std::size_t r = 0; r < grid.rows(); ++r) {
    const std::string axis = format_number(grid.axis_values[r]);
    for (std::size_t c = 0; c < grid.cols(); ++c) {
      const double t = reciprocal ? 1.0 / grid.times[c] : grid.times[c];
      out += axis;
      out += ',';
      out += format_number(t);
      out += ',';
      out += format_number(grid.at(r, c));
      out += '\n';
    }
  }
  return out;
}

std::string to_json_text(const ConcurrenceGrid& grid) {
  json values = json::array();
  for (std::size_t r = 0; r < grid.rows(); ++r) {
    const auto row = grid.row(r);
    values.push_back(std::vector<double>(row.begin(), row.end()));
  }
  // Times stay linear here; the manifest's axis_transform says how to display them.
  json doc{{"manifest", manifest(grid)},
           {"axis", grid.axis_values},
           {"times", grid.times},
           {"values", values}};
  return doc.dump(1) + "\n";
}

std::string manifest_text(const ConcurrenceGrid& grid) {
  return json{{"manifest", manifest(grid)}}.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace entdyn::io
