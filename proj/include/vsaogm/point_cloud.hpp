#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vsaogm/geometry.hpp"

namespace vsaogm {

inline constexpr std::uint8_t kEmpty = 0;
inline constexpr std::uint8_t kOccupied = 1;

/// One time step of labeled points in the global frame.
struct PointCloud {
    std::uint64_t t = 0;
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<std::uint8_t> labels;  // 1 occupied, 0 empty

    std::size_t size() const { return xs.size(); }
    bool empty() const { return xs.empty(); }
    Point2 point(std::size_t i) const { return {xs[i], ys[i]}; }

    void push_back(double x, double y, std::uint8_t label) {
        xs.push_back(x);
        ys.push_back(y);
        labels.push_back(label);
    }

    std::size_t count(std::uint8_t label) const;

    friend bool operator==(const PointCloud&, const PointCloud&) = default;
};

/// Throws on length mismatch, non-binary labels or non-finite coordinates.
void validate(const PointCloud& cloud);

/// Concatenates clouds in order; the result carries the first cloud's t.
PointCloud merge(const std::vector<PointCloud>& clouds);

std::size_t total_points(const std::vector<PointCloud>& clouds);

}  // namespace vsaogm
