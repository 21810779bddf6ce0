#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vsaogm/encoder.hpp"
#include "vsaogm/geometry.hpp"
#include "vsaogm/memory.hpp"

namespace vsaogm {

/// Row-major raster of reals; row index runs along +y.
struct ScalarGrid {
    Bounds bounds;
    double resolution = 0.0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;

    ScalarGrid() = default;
    ScalarGrid(const Bounds& b, double res, std::size_t r, std::size_t c, double fill = 0.0)
        : bounds(b), resolution(res), rows(r), cols(c), values(r * c, fill) {}

    std::size_t size() const { return values.size(); }
    double& at(std::size_t row, std::size_t col) { return values[row * cols + col]; }
    double at(std::size_t row, std::size_t col) const { return values[row * cols + col]; }
    bool same_shape(const ScalarGrid& o) const { return rows == o.rows && cols == o.cols; }

    /// Value of the voxel nearest to p (clamped at the border).
    double sample(const Point2& p) const;

    friend bool operator==(const ScalarGrid&, const ScalarGrid&) = default;
};

enum class CellClass : std::uint8_t { Empty = 0, Occupied = 1 };

struct OccupancyMap {
    Bounds bounds;
    double resolution = 0.0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<CellClass> labels;
};

/// Born-squared similarity of each voxel's location vector with the
/// normalized class memory of the voxel's quadrant.
ScalarGrid query_probability(const QuadrantMemoryBank& bank, std::uint8_t label, const QueryGrid& grid);

/// Integer offsets (du, dv) with du^2 + dv^2 <= r^2.
std::vector<std::pair<int, int>> disk_offsets(int r);

/// Binary Shannon entropy in bits, 0 at p = 0 and p = 1.
double binary_entropy(double p);

/// Disk mean of binary entropy. The disk is clipped at the raster border and
/// the mean is taken over the voxels that remain.
ScalarGrid local_entropy(const ScalarGrid& prob, int r);

/// S(occupied) - S(empty), element-wise.
ScalarGrid global_entropy(const ScalarGrid& s_occupied, const ScalarGrid& s_empty);

/// Occupied where value >= rho.
OccupancyMap classify(const ScalarGrid& s, double rho);

/// Cut-point maximizing TPR - FPR for the rule score >= rho. Candidate
/// thresholds are the distinct scores; ties go to the lower threshold.
double select_threshold(std::span<const double> scores, std::span<const std::uint8_t> labels);

struct DecodedMaps {
    ScalarGrid prob_empty;
    ScalarGrid prob_occupied;
    ScalarGrid entropy_empty;
    ScalarGrid entropy_occupied;
    ScalarGrid global;
};

/// Both class probabilities, their local entropies (r_empty and r_occupied from
/// the bank config) and the global entropy map.
DecodedMaps decode_pipeline(const QuadrantMemoryBank& bank, const QueryGrid& grid);

/// The query grid matching a bank's own bounds and resolution.
QueryGrid query_grid_for(const QuadrantMemoryBank& bank);

// Tolerance used when accepting probabilities that overshoot [0, 1] by
// rounding in the last bits.
inline constexpr double kProbabilitySlack = 1e-12;

}  // namespace vsaogm
