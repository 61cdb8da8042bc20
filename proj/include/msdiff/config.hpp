#pragma once

#include <string>
#include <string_view>

#include "msdiff/simulation.hpp"

namespace msdiff {

/// Built-in setups. Only "duncan-toor" exists.
SimConfig preset_config(std::string_view name);

/// Parses a JSON configuration document. A "preset" field seeds every
/// value, and the remaining fields override it one by one. Errors carry the field path.
SimConfig parse_config(std::string_view text);

SimConfig load_config(const std::string& path);

}  // namespace msdiff
