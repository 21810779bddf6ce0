#include "vsaogm/grid_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "vsaogm/errors.hpp"

namespace vsaogm {
namespace {

std::ofstream open_out(const std::string& path, bool binary = false) {
    std::ofstream out(path, binary ? std::ios::binary | std::ios::trunc : std::ios::trunc);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    return out;
}

void write_pgm(const std::string& path, std::size_t rows, std::size_t cols,
               const std::vector<unsigned char>& pixels_top_down) {
    auto out = open_out(path, true);
    out << "P5\n" << cols << ' ' << rows << "\n255\n";
    out.write(reinterpret_cast<const char*>(pixels_top_down.data()),
              static_cast<std::streamsize>(pixels_top_down.size()));
}

}  // namespace

void save_grid_csv(const std::string& stem, const ScalarGrid& grid, const std::string& kind) {
    {
        auto out = open_out(stem + ".csv");
        char buf[32];
        for (std::size_t r = 0; r < grid.rows; ++r) {
            for (std::size_t c = 0; c < grid.cols; ++c) {
                std::snprintf(buf, sizeof buf, "%.17g", grid.at(r, c));
                out << (c ? "," : "") << buf;
            }
            out << '\n';
        }
    }
    nlohmann::json meta = {
        {"bounds", {grid.bounds.x_min, grid.bounds.x_max, grid.bounds.y_min, grid.bounds.y_max}},
        {"resolution", grid.resolution},
        {"rows", grid.rows},
        {"cols", grid.cols},
        {"kind", kind},
    };
    auto out = open_out(stem + ".json");
    out << meta.dump(2) << '\n';
}

ScalarGrid load_grid_csv(const std::string& stem) {
    std::ifstream meta_in(stem + ".json");
    if (!meta_in) throw DataError("grid: cannot open '" + stem + ".json'");
    nlohmann::json meta;
    try {
        meta_in >> meta;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("grid sidecar: ") + e.what());
    }
    const auto b = meta.at("bounds");
    ScalarGrid grid(Bounds{b.at(0).get<double>(), b.at(1).get<double>(), b.at(2).get<double>(), b.at(3).get<double>()},
                    meta.at("resolution").get<double>(), meta.at("rows").get<std::size_t>(),
                    meta.at("cols").get<std::size_t>());

    std::ifstream in(stem + ".csv");
    if (!in) throw DataError("grid: cannot open '" + stem + ".csv'");
    std::string line;
    std::size_t r = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (r >= grid.rows) throw ParseError(stem + ".csv", r + 1, "more rows than the sidecar declares");
        std::istringstream ls(line);
        std::string cell;
        std::size_t c = 0;
        while (std::getline(ls, cell, ',')) {
            if (c >= grid.cols) throw ParseError(stem + ".csv", r + 1, "too many columns");
            grid.at(r, c++) = std::stod(cell);
        }
        if (c != grid.cols) throw ParseError(stem + ".csv", r + 1, "too few columns");
        ++r;
    }
    if (r != grid.rows) throw ParseError(stem + ".csv", r, "fewer rows than the sidecar declares");
    return grid;
}

void save_grid_pgm(const std::string& path, const ScalarGrid& grid) {
    double lo = 0.0, hi = 0.0;
    if (!grid.values.empty()) {
        const auto [mn, mx] = std::minmax_element(grid.values.begin(), grid.values.end());
        lo = *mn;
        hi = *mx;
    }
    const double span = hi - lo;
    std::vector<unsigned char> pixels(grid.size());
    for (std::size_t r = 0; r < grid.rows; ++r) {
        const std::size_t src_row = grid.rows - 1 - r;
        for (std::size_t c = 0; c < grid.cols; ++c) {
            const double v = grid.at(src_row, c);
            const double t = span > 0.0 ? (v - lo) / span : 0.0;
            pixels[r * grid.cols + c] = static_cast<unsigned char>(std::lround(std::clamp(t, 0.0, 1.0) * 255.0));
        }
    }
    write_pgm(path, grid.rows, grid.cols, pixels);
}

void save_occupancy(const std::string& stem, const OccupancyMap& map) {
    {
        auto out = open_out(stem + ".csv");
        for (std::size_t r = 0; r < map.rows; ++r) {
            for (std::size_t c = 0; c < map.cols; ++c)
                out << (c ? "," : "") << static_cast<int>(map.labels[r * map.cols + c]);
            out << '\n';
        }
    }
    std::vector<unsigned char> pixels(map.labels.size());
    for (std::size_t r = 0; r < map.rows; ++r)
        for (std::size_t c = 0; c < map.cols; ++c)
            pixels[r * map.cols + c] =
                map.labels[(map.rows - 1 - r) * map.cols + c] == CellClass::Occupied ? 255 : 0;
    write_pgm(stem + ".pgm", map.rows, map.cols, pixels);
}

}  // namespace vsaogm
