#include "vsaogm/encoder.hpp"

#include <cmath>
#include <complex>

#include "fft.hpp"
#include "vsaogm/errors.hpp"

namespace vsaogm {

std::uint64_t y_axis_seed(std::uint64_t seed) {
    // Adding an odd constant modulo 2^64 never maps a seed to itself.
    return seed + 0x9E3779B97F4A7C15ULL;
}

AxisPair make_axis_pair(std::uint64_t seed, std::size_t dim, double length_scale) {
    if (!(length_scale > 0.0) || !std::isfinite(length_scale))
        throw InvalidArgument("axis pair: length scale must be positive");
    return {make_axis(seed, dim), make_axis(y_axis_seed(seed), dim), length_scale};
}

bool same_encoding(const AxisPair& a, const AxisPair& b) {
    return a.x_axis.dim == b.x_axis.dim && a.y_axis.dim == b.y_axis.dim &&
           a.x_axis.seed == b.x_axis.seed && a.y_axis.seed == b.y_axis.seed &&
           a.length_scale == b.length_scale;
}

Hypervector encode_point(const AxisPair& axes, double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y))
        throw InvalidArgument("encode_point: coordinates must be finite");

    // Binding in the frequency domain is a product of phasors, so both axes
    // fold into a single inverse transform.
    const double ex = x / axes.length_scale;
    const double ey = y / axes.length_scale;
    const std::size_t d = axes.dim();
    const std::size_t half = detail::half_spectrum_size(d);
    detail::Spectrum spectrum(half);
    for (std::size_t k = 0; k < half; ++k)
        spectrum[k] = std::polar(1.0, axes.x_axis.phases[k] * ex + axes.y_axis.phases[k] * ey);
    return Hypervector(detail::inverse_dft(spectrum, d));
}

std::vector<Hypervector> encode_cloud(const AxisPair& axes, const PointCloud& cloud) {
    if (cloud.empty()) throw EmptyInput("encode_cloud: point cloud is empty");
    std::vector<Hypervector> out;
    out.reserve(cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i) out.push_back(encode_point(axes, cloud.xs[i], cloud.ys[i]));
    return out;
}

QueryGrid::QueryGrid(const AxisPair& axes, const Bounds& bounds, double resolution)
    : axes_(axes), bounds_(bounds), resolution_(resolution), shape_(grid_shape(bounds, resolution)) {
    vectors_.reserve(shape_.size());
    for (std::size_t i = 0; i < shape_.size(); ++i) {
        const Point2 c = center(i);
        vectors_.push_back(encode_point(axes_, c.x, c.y));
    }
}

Point2 QueryGrid::center(std::size_t index) const {
    return voxel_center(bounds_, resolution_, index / shape_.cols, index % shape_.cols);
}

QueryGrid build_query_grid(const AxisPair& axes, const Bounds& bounds, double resolution) {
    return QueryGrid(axes, bounds, resolution);
}

}  // namespace vsaogm
