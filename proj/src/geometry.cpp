#include "vsaogm/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "vsaogm/errors.hpp"

namespace vsaogm {
namespace {

std::size_t cells_along(double span, double resolution) {
    const double n = span / resolution;
    const double rounded = std::round(n);
    if (std::abs(n - rounded) <= 1e-9 * std::max(1.0, rounded)) return static_cast<std::size_t>(rounded);
    return static_cast<std::size_t>(std::ceil(n));
}

std::size_t clamped_cell(double offset, double resolution, std::size_t count) {
    const double c = std::floor(offset / resolution);
    if (!(c > 0.0)) return 0;
    return std::min(static_cast<std::size_t>(c), count - 1);
}

}  // namespace

bool Bounds::valid() const {
    return std::isfinite(x_min) && std::isfinite(x_max) && std::isfinite(y_min) &&
           std::isfinite(y_max) && x_max > x_min && y_max > y_min;
}

GridShape grid_shape(const Bounds& bounds, double resolution) {
    if (!bounds.valid()) throw InvalidArgument("grid: degenerate bounds");
    if (!(resolution > 0.0) || !std::isfinite(resolution))
        throw InvalidArgument("grid: resolution must be positive");
    return {cells_along(bounds.height(), resolution), cells_along(bounds.width(), resolution)};
}

Point2 voxel_center(const Bounds& bounds, double resolution, std::size_t row, std::size_t col) {
    return {bounds.x_min + (static_cast<double>(col) + 0.5) * resolution,
            bounds.y_min + (static_cast<double>(row) + 0.5) * resolution};
}

std::size_t nearest_voxel(const Bounds& bounds, double resolution, const GridShape& shape,
                          const Point2& p) {
    const std::size_t col = clamped_cell(p.x - bounds.x_min, resolution, shape.cols);
    const std::size_t row = clamped_cell(p.y - bounds.y_min, resolution, shape.rows);
    return row * shape.cols + col;
}

}  // namespace vsaogm
