#pragma once

// File formats.
//
// CSV: header `axis,t,concurrence` (`axis,inv_t,concurrence` for a reciprocal
// time axis), one record per grid cell in row-major order, every number
// printed with 17 significant digits.
//
// JSON: {"manifest": {...}, "axis": [...], "times": [...], "values": [[...], ...]}.
// The manifest holds the tool name and version, the fully resolved spec and
// the per-row seeds. A spec file is the same document without the results;
// a bare spec object is also accepted.

#include <string>

#include <json.hpp>

#include "entdyn/sweep.hpp"

namespace entdyn::io {

inline constexpr const char* kToolName = "entdyn";
inline constexpr const char* kToolVersion = "1.0.0";

nlohmann::json to_json(const SweepSpec& spec);
SweepSpec spec_from_json(const nlohmann::json& j);

nlohmann::json manifest(const ConcurrenceGrid& grid);

/// Accepts a data file, a manifest document or a bare spec.
SweepSpec spec_from_document(const nlohmann::json& doc);

std::string to_csv(const ConcurrenceGrid& grid);
std::string to_json_text(const ConcurrenceGrid& grid);
std::string manifest_text(const ConcurrenceGrid& grid);

/// Throws std::runtime_error if the file cannot be written.
void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace entdyn::io
