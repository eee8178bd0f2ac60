#pragma once

// Figure presets. Each preset is a list of panels; every panel is a complete
// sweep. Settings chosen here rather than given by the figure are listed in
// the panel's `assumed` field and echoed in the manifest.

#include <string>
#include <string_view>
#include <vector>

#include "entdyn/sweep.hpp"

namespace entdyn {

struct PresetPanel {
  std::string name;
  SweepSpec spec;
};

const std::vector<std::string>& preset_ids();

/// Throws ValidationError for an unknown id.
std::vector<PresetPanel> make_preset(std::string_view id);

}  // namespace entdyn
