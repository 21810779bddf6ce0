#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "vsaogm/decoder.hpp"
#include "vsaogm/memory.hpp"
#include "vsaogm/point_cloud.hpp"

namespace vsaogm {

/// Mann-Whitney U / (n+ n-) with average ranks for tied scores.
double roc_auc(std::span<const double> scores, std::span<const std::uint8_t> labels);

struct Confusion {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

/// Predictions are score >= rho. A metric whose denominator is zero is 0.
Confusion confusion_metrics(std::span<const double> scores, std::span<const std::uint8_t> labels, double rho);

struct EvalReport {
    double auc = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double rho = 0.0;
    std::size_t n_val = 0;
    std::size_t model_bytes = 0;
    std::map<std::string, double> timings;  // stage -> milliseconds

    friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

std::string to_json(const EvalReport& report);
EvalReport report_from_json(const std::string& text);

/// Global entropy sampled at the voxel nearest each point.
std::vector<double> score_points(const ScalarGrid& global, const PointCloud& points);

/// Decodes the bank over `grid`, scores the validation points, picks rho by
/// Youden's statistic on those scores and fills in the report. Timings cover
/// the decode ("decode"), entropy ("entropy") and scoring ("score") stages.
EvalReport evaluate(const QuadrantMemoryBank& bank, const PointCloud& val, const QueryGrid& grid);

/// Same, using the bank's own bounds and resolution; adds an "encode" timing
/// for building the query grid.
EvalReport evaluate(const QuadrantMemoryBank& bank, const PointCloud& val);

}  // namespace vsaogm
