#pragma once

#include <cstdint>
#include <vector>

#include "vsaogm/fhrr.hpp"
#include "vsaogm/geometry.hpp"
#include "vsaogm/point_cloud.hpp"

namespace vsaogm {

/// Independent x/y axis bases plus the shared length scale (meters per unit
/// exponent).
struct AxisPair {
    AxisBasis x_axis;
    AxisBasis y_axis;
    double length_scale = 1.0;

    std::size_t dim() const { return x_axis.dim; }
};

/// Builds both axes from one seed; the y axis uses a derived seed that never
/// equals the x seed.
AxisPair make_axis_pair(std::uint64_t seed, std::size_t dim, double length_scale);

std::uint64_t y_axis_seed(std::uint64_t seed);

/// Equal when dim, length scale and both axis seeds agree.
bool same_encoding(const AxisPair& a, const AxisPair& b);

Hypervector encode_point(const AxisPair& axes, double x, double y);

std::vector<Hypervector> encode_cloud(const AxisPair& axes, const PointCloud& cloud);

/// Cached location vectors for every voxel center of a raster.
class QueryGrid {
public:
    QueryGrid(const AxisPair& axes, const Bounds& bounds, double resolution);

    const Bounds& bounds() const { return bounds_; }
    double resolution() const { return resolution_; }
    const GridShape& shape() const { return shape_; }
    std::size_t rows() const { return shape_.rows; }
    std::size_t cols() const { return shape_.cols; }
    std::size_t size() const { return vectors_.size(); }

    const AxisPair& axes() const { return axes_; }

    Point2 center(std::size_t index) const;
    const Hypervector& vector(std::size_t index) const { return vectors_[index]; }
    const std::vector<Hypervector>& vectors() const { return vectors_; }

private:
    AxisPair axes_;
    Bounds bounds_;
    double resolution_;
    GridShape shape_;
    std::vector<Hypervector> vectors_;
};

QueryGrid build_query_grid(const AxisPair& axes, const Bounds& bounds, double resolution);

}  // namespace vsaogm
