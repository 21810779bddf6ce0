#pragma once

// Quadrant memories: the world is split into a delta x delta partition and
// every cell keeps one accumulator per class, 2 * delta^2 in total, indexed
// 2 * quadrant + label.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "vsaogm/encoder.hpp"
#include "vsaogm/fhrr.hpp"
#include "vsaogm/geometry.hpp"
#include "vsaogm/point_cloud.hpp"

namespace vsaogm {

struct MapperConfig {
    std::size_t dim = 4096;
    double length_scale = 0.2;
    std::size_t quadrants_per_dim = 1;
    Bounds bounds{0.0, 8.0, 0.0, 8.0};
    double resolution = 0.2;
    int r_occupied = 2;
    int r_empty = 2;
    std::uint64_t seed = 0;

    /// Throws InvalidArgument naming the first violated field.
    void validate() const;

    friend bool operator==(const MapperConfig&, const MapperConfig&) = default;
};

inline constexpr std::size_t kNumClasses = 2;

std::vector<Point2> quadrant_centers(const Bounds& bounds, std::size_t quadrants_per_dim);

class QuadrantMemoryBank {
public:
    explicit QuadrantMemoryBank(const MapperConfig& config);

    const MapperConfig& config() const { return config_; }
    const AxisPair& axes() const { return axes_; }
    const std::vector<Point2>& centers() const { return centers_; }

    std::size_t num_quadrants() const { return centers_.size(); }
    std::size_t num_slots() const { return accumulators_.size(); }
    static std::size_t slot(std::size_t quadrant, std::uint8_t label) { return 2 * quadrant + label; }

    const std::vector<Hypervector>& accumulators() const { return accumulators_; }
    const std::vector<std::uint64_t>& point_counts() const { return point_counts_; }

    /// Nearest quadrant center by Euclidean distance, lowest index on ties.
    /// Points outside the bounds map to the nearest center as well.
    std::size_t assign_quadrant(const Point2& p) const;

    /// Bundles every point of the cloud into slot 2*quadrant + label. The
    /// whole cloud is validated before any accumulator changes.
    void add_cloud(const PointCloud& cloud);

    /// Unit-or-zero copies of the accumulators; the bank itself is untouched.
    std::vector<Hypervector> normalized_view() const;

    /// Accumulator storage in bytes, 2 * delta^2 * d * 8.
    std::size_t model_bytes() const;

    /// Direct state restore, used by deserialization and fusion.
    void set_state(std::vector<Hypervector> accumulators, std::vector<std::uint64_t> counts);

    friend bool operator==(const QuadrantMemoryBank& a, const QuadrantMemoryBank& b) {
        return a.config_ == b.config_ && a.accumulators_ == b.accumulators_ &&
               a.point_counts_ == b.point_counts_;
    }

private:
    MapperConfig config_;
    AxisPair axes_;
    std::vector<Point2> centers_;
    std::vector<double> center_xs_;  // per-column center coordinates
    std::vector<double> center_ys_;  // per-row center coordinates
    std::vector<Hypervector> accumulators_;
    std::vector<std::uint64_t> point_counts_;
};

/// Sums accumulators and counts slot by slot. All banks must share axis seeds,
/// dimension and length scale, the class set, and the quadrant partition
/// (delta and bounds); otherwise FusionPreconditionError names the condition.
/// Decode-only settings (resolution, radii) are taken from the first bank.
QuadrantMemoryBank fuse(std::span<const QuadrantMemoryBank> banks);

// Binary bank container:
//
//   "VSAOGM1\n"
//   key=value\n lines: dim, length_scale, quadrants, x_min, x_max, y_min,
//     y_max, resolution, r_occ, r_emp, seed, classes, counts (comma list)
//   "end\n"
//   2 * delta^2 * d little-endian float64 values, slot-major.
//
// Reals in the header are printed with 17 significant digits so they round
// trip exactly.
inline constexpr char kBankMagic[] = "VSAOGM1";

void write_bank(std::ostream& out, const QuadrantMemoryBank& bank);
QuadrantMemoryBank read_bank(std::istream& in);

void save_bank(const std::string& path, const QuadrantMemoryBank& bank);
QuadrantMemoryBank load_bank(const std::string& path);

}  // namespace vsaogm
