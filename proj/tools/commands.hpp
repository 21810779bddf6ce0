#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "run_config.hpp"
#include "vsaogm/datasets.hpp"
#include "vsaogm/memory.hpp"

namespace vsaogm::cli {

struct SimulateOptions {
    std::string scene;
    std::string trajectory;
    LidarSpec sensor;
    std::uint64_t seed = 0;
    std::string out;
};
void cmd_simulate(const SimulateOptions& o);

struct SplitOptions {
    std::string in;
    double fraction = 0.9;
    std::uint64_t seed = 0;
    std::string train_out;
    std::string val_out;
};
void cmd_split(const SplitOptions& o);

struct MapOptions {
    RunConfig config;
    std::string in;
    std::string out;
};
/// Bounds default to the data's bounding box when the config gives none.
QuadrantMemoryBank build_bank(const RunConfig& config, const std::vector<PointCloud>& clouds);
void cmd_map(const MapOptions& o);

struct DecodeOptions {
    std::string bank;
    std::string outdir;
    std::optional<double> rho;
};
void cmd_decode(const DecodeOptions& o);

struct FuseOptions {
    std::vector<std::string> banks;
    std::string out;
};
void cmd_fuse(const FuseOptions& o);

struct EvalOptions {
    std::string bank;
    std::string val;
    std::string out;
};
void cmd_eval(const EvalOptions& o);

// --- ablation ---

enum class AblationKind { Dim, LengthScale, Delta, Radii };

AblationKind parse_ablation_kind(const std::string& name);

struct AblationPoint {
    double value = 0.0;   // dim, length scale or delta; r_occ for radii
    double value2 = 0.0;  // r_emp for radii
    double auc = 0.0;
};

struct AblationOptions {
    AblationKind kind = AblationKind::Dim;
    // Values to sweep. Radii entries are "occ:emp" or a single radius used
    // for both. Empty means the default sweep for the kind.
    std::vector<std::string> values;
    MapperConfig base = default_ablation_config();
    std::uint64_t data_seed = 0;
    double split = 0.9;
    std::string out;

    static MapperConfig default_ablation_config();
};

std::vector<std::string> default_sweep(AblationKind kind);

/// Circle dataset, 90/10 split, one bank per sweep value, AUC on the held-out
/// points.
std::vector<AblationPoint> run_ablation(const AblationOptions& o);
void write_ablation_csv(std::ostream& out, AblationKind kind, const std::vector<AblationPoint>& rows);
void cmd_ablate(const AblationOptions& o);

/// Parses argv and dispatches; returns the process exit code
/// (0 ok, 2 config error, 3 data error, 4 numeric failure).
int run_cli(int argc, char** argv);

}  // namespace vsaogm::cli
