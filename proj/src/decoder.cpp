#include "vsaogm/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vsaogm/errors.hpp"

namespace vsaogm {

double ScalarGrid::sample(const Point2& p) const {
    return values[nearest_voxel(bounds, resolution, GridShape{rows, cols}, p)];
}

ScalarGrid query_probability(const QuadrantMemoryBank& bank, std::uint8_t label, const QueryGrid& grid) {
    if (label > 1) throw InvalidLabel("query_probability: label must be 0 or 1");
    if (!same_encoding(bank.axes(), grid.axes()))
        throw ConfigError("query_probability: query grid was built with different axes than the bank");

    const auto memories = bank.normalized_view();
    ScalarGrid out(grid.bounds(), grid.resolution(), grid.rows(), grid.cols());
    for (std::size_t v = 0; v < grid.size(); ++v) {
        const std::size_t quadrant = bank.assign_quadrant(grid.center(v));
        const double q = similarity(memories[QuadrantMemoryBank::slot(quadrant, label)], grid.vector(v));
        const double p = q * q;
        if (p > 1.0 + kProbabilitySlack)
            throw NumericError("query_probability: Born value " + std::to_string(p) + " exceeds 1");
        out.values[v] = p;
    }
    return out;
}

std::vector<std::pair<int, int>> disk_offsets(int r) {
    if (r < 1) throw InvalidArgument("disk_offsets: radius must be >= 1");
    std::vector<std::pair<int, int>> out;
    for (int dv = -r; dv <= r; ++dv)
        for (int du = -r; du <= r; ++du)
            if (du * du + dv * dv <= r * r) out.emplace_back(du, dv);
    return out;
}

double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

ScalarGrid local_entropy(const ScalarGrid& prob, int r) {
    const auto disk = disk_offsets(r);
    ScalarGrid per_voxel = prob;
    for (std::size_t i = 0; i < prob.size(); ++i) {
        const double p = prob.values[i];
        if (!(p >= -kProbabilitySlack && p <= 1.0 + kProbabilitySlack))
            throw DataError("local_entropy: value " + std::to_string(p) + " at index " + std::to_string(i) +
                            " is not a probability");
        per_voxel.values[i] = binary_entropy(p);
    }

    ScalarGrid out(prob.bounds, prob.resolution, prob.rows, prob.cols);
    const auto rows = static_cast<long>(prob.rows);
    const auto cols = static_cast<long>(prob.cols);
    for (long row = 0; row < rows; ++row) {
        for (long col = 0; col < cols; ++col) {
            double sum = 0.0;
            std::size_t n = 0;
            for (const auto& [du, dv] : disk) {
                const long c = col + du;
                const long rr = row + dv;
                if (c < 0 || c >= cols || rr < 0 || rr >= rows) continue;
                sum += per_voxel.values[static_cast<std::size_t>(rr * cols + c)];
                ++n;
            }
            out.values[static_cast<std::size_t>(row * cols + col)] = sum / static_cast<double>(n);
        }
    }
    return out;
}

ScalarGrid global_entropy(const ScalarGrid& s_occupied, const ScalarGrid& s_empty) {
    if (!s_occupied.same_shape(s_empty)) throw ShapeMismatch("global_entropy: grids differ in shape");
    ScalarGrid out = s_occupied;
    for (std::size_t i = 0; i < out.size(); ++i) out.values[i] = s_occupied.values[i] - s_empty.values[i];
    return out;
}

OccupancyMap classify(const ScalarGrid& s, double rho) {
    OccupancyMap out{s.bounds, s.resolution, s.rows, s.cols, {}};
    out.labels.reserve(s.size());
    for (double v : s.values) out.labels.push_back(v >= rho ? CellClass::Occupied : CellClass::Empty);
    return out;
}

double select_threshold(std::span<const double> scores, std::span<const std::uint8_t> labels) {
    if (scores.size() != labels.size()) throw ShapeMismatch("select_threshold: scores and labels differ in length");
    const auto positives = static_cast<std::size_t>(std::count(labels.begin(), labels.end(), std::uint8_t{1}));
    const std::size_t negatives = labels.size() - positives;
    if (positives == 0 || negatives == 0) throw DegenerateLabels("select_threshold: need both classes");

    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

    // Sweep cut-points from the highest score down; after each block of equal
    // scores, (tp, fp) are the counts predicted occupied at that threshold.
    std::size_t tp = 0, fp = 0;
    double best_rho = scores[order.front()];
    double best_j = -2.0;
    for (std::size_t i = 0; i < order.size();) {
        const double s = scores[order[i]];
        while (i < order.size() && scores[order[i]] == s) {
            (labels[order[i]] == 1 ? tp : fp) += 1;
            ++i;
        }
        const double j = static_cast<double>(tp) / static_cast<double>(positives) -
                         static_cast<double>(fp) / static_cast<double>(negatives);
        if (j >= best_j) {
            best_j = j;
            best_rho = s;
        }
    }
    return best_rho;
}

DecodedMaps decode_pipeline(const QuadrantMemoryBank& bank, const QueryGrid& grid) {
    DecodedMaps m;
    m.prob_empty = query_probability(bank, kEmpty, grid);
    m.prob_occupied = query_probability(bank, kOccupied, grid);
    m.entropy_empty = local_entropy(m.prob_empty, bank.config().r_empty);
    m.entropy_occupied = local_entropy(m.prob_occupied, bank.config().r_occupied);
    m.global = global_entropy(m.entropy_occupied, m.entropy_empty);
    return m;
}

QueryGrid query_grid_for(const QuadrantMemoryBank& bank) {
    return build_query_grid(bank.axes(), bank.config().bounds, bank.config().resolution);
}

}  // namespace vsaogm
