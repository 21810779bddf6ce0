#include "vsaogm/point_cloud.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vsaogm/errors.hpp"

namespace vsaogm {

std::size_t PointCloud::count(std::uint8_t label) const {
    return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), label));
}

void validate(const PointCloud& cloud) {
    if (cloud.xs.size() != cloud.ys.size() || cloud.xs.size() != cloud.labels.size())
        throw ShapeMismatch("point cloud: coordinate and label arrays differ in length");
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        if (cloud.labels[i] > 1)
            throw InvalidLabel("point cloud: label " + std::to_string(cloud.labels[i]) +
                               " at index " + std::to_string(i) + " is not 0 or 1");
        if (!std::isfinite(cloud.xs[i]) || !std::isfinite(cloud.ys[i]))
            throw InvalidArgument("point cloud: non-finite coordinate at index " + std::to_string(i));
    }
}

PointCloud merge(const std::vector<PointCloud>& clouds) {
    PointCloud out;
    if (!clouds.empty()) out.t = clouds.front().t;
    for (const auto& c : clouds) {
        out.xs.insert(out.xs.end(), c.xs.begin(), c.xs.end());
        out.ys.insert(out.ys.end(), c.ys.begin(), c.ys.end());
        out.labels.insert(out.labels.end(), c.labels.begin(), c.labels.end());
    }
    return out;
}

std::size_t total_points(const std::vector<PointCloud>& clouds) {
    std::size_t n = 0;
    for (const auto& c : clouds) n += c.size();
    return n;
}

}  // namespace vsaogm
