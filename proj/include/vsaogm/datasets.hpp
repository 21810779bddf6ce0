#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "vsaogm/geometry.hpp"
#include "vsaogm/point_cloud.hpp"

namespace vsaogm {

// --- point-cloud CSV ---
//
// Header `x,y,label` or `x,y,label,t`; label in {0,1}; t a non-negative
// integer (0 when the column is absent). Clouds come back grouped by t in
// ascending order with file order kept inside each group.

std::vector<PointCloud> read_csv(std::istream& in, const std::string& source = "<stream>");
std::vector<PointCloud> load_csv(const std::string& path);

/// Writes all clouds with a t column; reals use 17 significant digits.
void write_csv(std::ostream& out, const std::vector<PointCloud>& clouds);
void save_csv(const std::string& path, const std::vector<PointCloud>& clouds);

// --- ablation circle dataset ---

struct CircleDatasetSpec {
    Bounds bounds{0.0, 8.0, 0.0, 8.0};
    double radius = 4.0;
    std::size_t occupied = 5000;
    std::size_t empty = 5000;
};

/// Occupied points uniform in angle on the circle, empty points uniform over
/// the enclosed disk. Occupied points come first.
PointCloud gen_circle_dataset(std::uint64_t seed, const CircleDatasetSpec& spec = {});

// --- simulated 2D lidar ---

struct RectObstacle {
    double x0, y0, x1, y1;  // x0 < x1, y0 < y1
};

struct CircleObstacle {
    double cx, cy, r;
};

using Obstacle = std::variant<RectObstacle, CircleObstacle>;

struct World {
    Bounds bounds;
    std::vector<Obstacle> obstacles;

    /// Throws InvalidArgument for degenerate shapes or obstacles entirely
    /// outside the bounds.
    void validate() const;
};

/// Scene file: one shape per line, `rect x0 y0 x1 y1` or `circle cx cy r`,
/// plus an optional `bounds x_min x_max y_min y_max` line. Without it the
/// bounds are the bounding box of the obstacles. `#` starts a comment.
World read_scene(std::istream& in, const std::string& source = "<stream>");
World load_scene(const std::string& path);

struct Pose {
    double x = 0.0;
    double y = 0.0;
    double heading = 0.0;  // radians
};

/// Trajectory CSV: header `x,y` or `x,y,heading` with heading in degrees.
std::vector<Pose> load_trajectory(const std::string& path);

struct LidarSpec {
    int beams = 50;
    double fov_deg = 360.0;
    double range = 20.0;
    // Uniform free-space samples drawn along each beam before its endpoint;
    // 0 disables the augmentation.
    int free_samples = 0;
};

/// Distance along the ray to the first obstacle surface, or +inf.
double cast_ray(const World& world, double ox, double oy, double angle);

/// One cloud per pose (t = pose index). Beam k points at
/// heading - fov/2 + (k + 0.5) * fov / beams. A hit within range yields an
/// occupied point at the hit, a miss yields an empty point at max range.
std::vector<PointCloud> simulate_lidar(const World& world, const std::vector<Pose>& trajectory,
                                       const LidarSpec& sensor, std::uint64_t seed);

// --- train / validation split ---

struct Split {
    std::vector<PointCloud> train;
    std::vector<PointCloud> val;
};

/// Per-point seeded shuffle; round(fraction * n) points go to train. When the
/// input has both labels the validation side is re-drawn (up to 100 times)
/// until it has both as well. Per-cloud grouping and order are kept on both
/// sides; clouds with no points on a side are dropped from that side.
Split split_train_val(const std::vector<PointCloud>& clouds, double fraction, std::uint64_t seed);

}  // namespace vsaogm
