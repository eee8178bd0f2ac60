#include <iostream>

#include <CLI11.hpp>

#include "entdyn/cli.hpp"
#include "entdyn/presets.hpp"

int main(int argc, char** argv) {
  using entdyn::cli::Command;
  using entdyn::cli::Format;

  CLI::App app{"Two-qubit entanglement dynamics in finite qubit baths"};
  app.require_subcommand(1);
  app.fallthrough();

  entdyn::cli::RunConfig config;
  std::string format = "csv";
  std::uint64_t seed = 0;
  int samples = 0;
  double t_max = 0.0;

  app.add_option("-o,--output", config.output,
                 "Output file (sweep) or file stem (preset)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  auto* seed_opt = app.add_option("--seed", seed, "Master seed");
  app.add_option("--threads", config.threads, "Worker threads (0 = all cores)");
  auto* samples_opt = app.add_option("--samples", samples, "Time samples")->check(CLI::PositiveNumber);
  auto* tmax_opt = app.add_option("--t-max", t_max, "End of the time grid");

  auto* sweep = app.add_subcommand("sweep", "Run a sweep from a spec or manifest file");
  sweep->add_option("spec-file", config.spec_path)->required()->check(CLI::ExistingFile);

  auto* preset = app.add_subcommand("preset", "Run a figure preset");
  preset->add_option("id", config.preset_id)
      ->required()
      ->check(CLI::IsMember(entdyn::preset_ids()));

  app.add_subcommand("verify", "Check the closed form against the brute-force oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  if (sweep->parsed()) config.command = Command::sweep;
  else if (preset->parsed()) config.command = Command::preset;
  else config.command = Command::verify;
  config.format = format == "json" ? Format::json : Format::csv;
  if (*seed_opt) config.seed = seed;
  if (*samples_opt) config.samples = samples;
  if (*tmax_opt) config.t_max = t_max;

  return entdyn::cli::run(config, std::cout, std::cerr);
}
