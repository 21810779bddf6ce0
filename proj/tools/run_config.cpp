#include "run_config.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "vsaogm/errors.hpp"

namespace vsaogm::cli {
namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <typename T>
T parse_value(const std::string& key, const std::string& text) {
    std::istringstream is(text);
    T v{};
    is >> v;
    if (is.fail() || !(is >> std::ws).eof()) throw ConfigError("config: bad value for '" + key + "': '" + text + "'");
    return v;
}

}  // namespace

std::map<std::string, std::string> read_key_values(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: " + path + ":" + std::to_string(line_no) + ": expected key = value");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

Bounds parse_bounds(const std::string& text) {
    std::string s = text;
    for (char& c : s)
        if (c == ',') c = ' ';
    std::istringstream is(s);
    std::vector<double> v;
    for (double x; is >> x;) v.push_back(x);
    if (!is.eof() || v.size() != 4) throw ConfigError("config: bounds needs four numbers x_min x_max y_min y_max");
    Bounds b{v[0], v[1], v[2], v[3]};
    if (!b.valid()) throw ConfigError("config: bounds are degenerate");
    return b;
}

void apply_key_values(RunConfig& cfg, const std::map<std::string, std::string>& kv) {
    for (const auto& [key, value] : kv) {
        auto& m = cfg.mapper;
        if (key == "dim") m.dim = parse_value<std::size_t>(key, value);
        else if (key == "length_scale") m.length_scale = parse_value<double>(key, value);
        else if (key == "quadrants") m.quadrants_per_dim = parse_value<std::size_t>(key, value);
        else if (key == "r_occ") m.r_occupied = parse_value<int>(key, value);
        else if (key == "r_emp") m.r_empty = parse_value<int>(key, value);
        else if (key == "resolution") m.resolution = parse_value<double>(key, value);
        else if (key == "seed") m.seed = parse_value<std::uint64_t>(key, value);
        else if (key == "split") cfg.split = parse_value<double>(key, value);
        else if (key == "bounds") {
            m.bounds = parse_bounds(value);
            cfg.has_bounds = true;
        } else if (key == "dataset") cfg.dataset = value;
        else if (key == "output_dir") cfg.output_dir = value;
        else throw ConfigError("config: unknown key '" + key + "'");
    }
}

RunConfig load_run_config(const std::string& path) {
    RunConfig cfg;
    apply_key_values(cfg, read_key_values(path));
    return cfg;
}

}  // namespace vsaogm::cli
