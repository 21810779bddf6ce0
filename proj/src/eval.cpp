#include "vsaogm/eval.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "json.hpp"
#include "vsaogm/errors.hpp"

namespace vsaogm {
namespace {

std::pair<std::size_t, std::size_t> class_counts(std::span<const double> scores, std::span<const std::uint8_t> labels,
                                                 const char* who) {
    if (scores.size() != labels.size()) throw ShapeMismatch(std::string(who) + ": scores and labels differ in length");
    std::size_t pos = 0;
    for (auto l : labels) {
        if (l > 1) throw InvalidLabel(std::string(who) + ": labels must be 0 or 1");
        pos += l;
    }
    const std::size_t neg = labels.size() - pos;
    if (pos == 0 || neg == 0) throw DegenerateLabels(std::string(who) + ": need both classes");
    return {pos, neg};
}

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

}  // namespace

double roc_auc(std::span<const double> scores, std::span<const std::uint8_t> labels) {
    const auto [pos, neg] = class_counts(scores, labels, "roc_auc");

    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    // Sum of (1-based, tie-averaged) ranks of the positives.
    double rank_sum = 0.0;
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && scores[order[j]] == scores[order[i]]) ++j;
        const double avg_rank = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k)
            if (labels[order[k]]) rank_sum += avg_rank;
        i = j;
    }
    const double p = static_cast<double>(pos), n = static_cast<double>(neg);
    return (rank_sum - p * (p + 1.0) / 2.0) / (p * n);
}

Confusion confusion_metrics(std::span<const double> scores, std::span<const std::uint8_t> labels, double rho) {
    class_counts(scores, labels, "confusion_metrics");
    std::size_t tp = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        const bool predicted = scores[i] >= rho;
        if (predicted && labels[i]) ++tp;
        else if (predicted) ++fp;
        else if (labels[i]) ++fn;
    }
    Confusion c;
    if (tp + fp > 0) c.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    if (tp + fn > 0) c.recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
    if (c.precision + c.recall > 0.0) c.f1 = 2.0 * c.precision * c.recall / (c.precision + c.recall);
    return c;
}

std::string to_json(const EvalReport& r) {
    nlohmann::ordered_json j;
    j["auc"] = r.auc;
    j["precision"] = r.precision;
    j["recall"] = r.recall;
    j["f1"] = r.f1;
    j["rho"] = r.rho;
    j["n_val"] = r.n_val;
    j["model_bytes"] = r.model_bytes;
    j["timings"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.timings) j["timings"][k] = v;
    return j.dump(2);
}

EvalReport report_from_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        EvalReport r;
        r.auc = j.at("auc").get<double>();
        r.precision = j.at("precision").get<double>();
        r.recall = j.at("recall").get<double>();
        r.f1 = j.at("f1").get<double>();
        r.rho = j.at("rho").get<double>();
        r.n_val = j.at("n_val").get<std::size_t>();
        r.model_bytes = j.at("model_bytes").get<std::size_t>();
        for (const auto& [k, v] : j.at("timings").items()) r.timings[k] = v.get<double>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("report: ") + e.what());
    }
}

std::vector<double> score_points(const ScalarGrid& global, const PointCloud& points) {
    std::vector<double> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) out[i] = global.sample(points.point(i));
    return out;
}

EvalReport evaluate(const QuadrantMemoryBank& bank, const PointCloud& val, const QueryGrid& grid) {
    validate(val);
    if (val.count(kOccupied) == 0 || val.count(kEmpty) == 0)
        throw DegenerateLabels("evaluate: validation set needs both classes");

    EvalReport report;
    auto t0 = Clock::now();
    const ScalarGrid p_emp = query_probability(bank, kEmpty, grid);
    const ScalarGrid p_occ = query_probability(bank, kOccupied, grid);
    report.timings["decode"] = elapsed_ms(t0);

    t0 = Clock::now();
    const ScalarGrid s_emp = local_entropy(p_emp, bank.config().r_empty);
    const ScalarGrid s_occ = local_entropy(p_occ, bank.config().r_occupied);
    const ScalarGrid global = global_entropy(s_occ, s_emp);
    report.timings["entropy"] = elapsed_ms(t0);

    t0 = Clock::now();
    const auto scores = score_points(global, val);
    report.auc = roc_auc(scores, val.labels);
    report.rho = select_threshold(scores, val.labels);
    const Confusion c = confusion_metrics(scores, val.labels, report.rho);
    report.timings["score"] = elapsed_ms(t0);

    report.precision = c.precision;
    report.recall = c.recall;
    report.f1 = c.f1;
    report.n_val = val.size();
    report.model_bytes = bank.model_bytes();
    return report;
}

EvalReport evaluate(const QuadrantMemoryBank& bank, const PointCloud& val) {
    const auto t0 = Clock::now();
    const QueryGrid grid = query_grid_for(bank);
    const double encode_ms = elapsed_ms(t0);
    EvalReport report = evaluate(bank, val, grid);
    report.timings["encode"] = encode_ms;
    return report;
}

}  // namespace vsaogm
