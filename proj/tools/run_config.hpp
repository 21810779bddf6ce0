#pragma once

#include <map>
#include <optional>
#include <string>

#include "vsaogm/memory.hpp"

namespace vsaogm::cli {

// Flat `key = value` configuration. Recognized keys: dim, length_scale,
// quadrants, r_occ, r_emp, resolution, bounds (x_min x_max y_min y_max),
// seed, split. `#` starts a comment.
struct RunConfig {
    MapperConfig mapper;
    bool has_bounds = false;
    double split = 0.9;
    std::string dataset;  // CSV path, or "circle" for the generated ablation set
    std::string output_dir;
};

std::map<std::string, std::string> read_key_values(const std::string& path);

/// Applies key/value pairs on top of `cfg`; unknown keys are a ConfigError.
void apply_key_values(RunConfig& cfg, const std::map<std::string, std::string>& kv);

RunConfig load_run_config(const std::string& path);

Bounds parse_bounds(const std::string& text);

}  // namespace vsaogm::cli
