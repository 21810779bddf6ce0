#pragma once

#include <string>

#include "vsaogm/decoder.hpp"

namespace vsaogm {

// <stem>.csv holds the values row-major, one raster row per line, and
// <stem>.json the sidecar {bounds, resolution, rows, cols, kind}.
void save_grid_csv(const std::string& stem, const ScalarGrid& grid, const std::string& kind);
ScalarGrid load_grid_csv(const std::string& stem);

/// 8-bit binary PGM (P5). Values map affinely from [min, max] to [0, 255];
/// a constant grid maps to 0. Row 0 of the file is the top (max y) row.
void save_grid_pgm(const std::string& path, const ScalarGrid& grid);

/// Occupancy labels as CSV (1 occupied, 0 empty) plus PGM (255 occupied).
void save_occupancy(const std::string& stem, const OccupancyMap& map);

}  // namespace vsaogm
