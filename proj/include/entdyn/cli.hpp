#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace entdyn::cli {

enum class Command { sweep, preset, verify };
enum class Format { csv, json };

struct RunConfig {
  Command command = Command::verify;
  std::string preset_id;  // preset
  std::string spec_path;  // sweep
  std::string output;     // file for sweep, file stem for preset; empty = default
  Format format = Format::csv;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  std::optional<int> samples;
  std::optional<double> t_max;
};

/// Executes one command. Returns 0 on success, 1 on any error or verification
/// failure; errors are reported as a single line on `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Paths written by a sweep or preset run, data file first then its manifest.
std::vector<std::string> output_paths(const std::string& data_path, Format format);

}  // namespace entdyn::cli
