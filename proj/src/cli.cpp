#include "entdyn/cli.hpp"

#include <ostream>

#include "entdyn/io.hpp"
#include "entdyn/presets.hpp"
#include "entdyn/verify.hpp"

namespace entdyn::cli {

namespace {

const char* extension(Format f) { return f == Format::csv ? ".csv" : ".json"; }

void apply_overrides(SweepSpec& spec, const RunConfig& config) {
  if (config.seed) spec.master_seed = *config.seed;
  if (config.samples) spec.time_grid.samples = *config.samples;
  if (config.t_max) spec.time_grid.t_max = *config.t_max;
}

void emit(const SweepSpec& spec, const std::string& data_path, const RunConfig& config,
          std::ostream& out) {
  const auto grid = run_sweep(spec, config.threads);
  if (config.format == Format::csv) {
    io::write_file(data_path, io::to_csv(grid));
    io::write_file(data_path + ".manifest.json", io::manifest_text(grid));
  } else {
    io::write_file(data_path, io::to_json_text(grid));
  }
  for (const auto& p : output_paths(data_path, config.format)) out << p << '\n';
}

}  // namespace

std::vector<std::string> output_paths(const std::string& data_path, Format format) {
  if (format == Format::csv) return {data_path, data_path + ".manifest.json"};
  return {data_path};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::sweep: {
        auto spec = io::spec_from_document(nlohmann::json::parse(io::read_file(config.spec_path)));
        apply_overrides(spec, config);
        const auto path = config.output.empty() ? std::string("sweep") + extension(config.format)
                                                : config.output;
        emit(spec, path, config, out);
        return 0;
      }
      case Command::preset: {
        auto panels = make_preset(config.preset_id);
        const auto stem = config.output.empty() ? config.preset_id : config.output;
        for (auto& panel : panels) {
          apply_overrides(panel.spec, config);
          emit(panel.spec, stem + "_" + panel.name + extension(config.format), config, out);
        }
        return 0;
      }
      case Command::verify: {
        const auto report = run_verification(config.seed.value_or(kDefaultMasterSeed));
        for (const auto& f : report.failures) out << "FAIL " << f << '\n';
        out << "verify: " << report.passed << " passed, " << report.failed << " failed\n";
        return report.failed == 0 ? 0 : 1;
      }
    }
  } catch (const nlohmann::json::exception& e) {
    err << "error: invalid JSON: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return 1;
}

}  // namespace entdyn::cli
