#pragma once

#include <cstddef>

namespace vsaogm {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

/// Axis-aligned world rectangle in meters.
struct Bounds {
    double x_min = 0.0;
    double x_max = 0.0;
    double y_min = 0.0;
    double y_max = 0.0;

    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }
    bool valid() const;
    bool contains(const Point2& p) const {
        return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
    }

    friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Rows and columns of a raster covering `bounds` at `resolution`.
/// Spans that are an integer multiple of the resolution up to 1e-9 relative
/// are not rounded up.
struct GridShape {
    std::size_t rows = 0;
    std::size_t cols = 0;

    std::size_t size() const { return rows * cols; }
    friend bool operator==(const GridShape&, const GridShape&) = default;
};

GridShape grid_shape(const Bounds& bounds, double resolution);

/// Center of voxel (row, col); rows run along +y, columns along +x.
Point2 voxel_center(const Bounds& bounds, double resolution, std::size_t row, std::size_t col);

/// Row-major index of the voxel whose center is nearest to p, clamped to the
/// raster for points outside the bounds.
std::size_t nearest_voxel(const Bounds& bounds, double resolution, const GridShape& shape,
                          const Point2& p);

}  // namespace vsaogm
