#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "vsaogm/decoder.hpp"
#include "vsaogm/errors.hpp"
#include "vsaogm/eval.hpp"
#include "vsaogm/grid_io.hpp"

namespace vsaogm::cli {
namespace {

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Bounds data_bounds(const std::vector<PointCloud>& clouds, double resolution) {
    Bounds b{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
             std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
    for (const auto& c : clouds) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            b.x_min = std::min(b.x_min, c.xs[i]);
            b.x_max = std::max(b.x_max, c.xs[i]);
            b.y_min = std::min(b.y_min, c.ys[i]);
            b.y_max = std::max(b.y_max, c.ys[i]);
        }
    }
    // Half a voxel of margin so border points sit inside a voxel.
    const double pad = 0.5 * resolution;
    return {b.x_min - pad, b.x_max + pad, b.y_min - pad, b.y_max + pad};
}

}  // namespace

void cmd_simulate(const SimulateOptions& o) {
    const World world = load_scene(o.scene);
    const auto trajectory = load_trajectory(o.trajectory);
    save_csv(o.out, simulate_lidar(world, trajectory, o.sensor, o.seed));
}

void cmd_split(const SplitOptions& o) {
    const Split s = split_train_val(load_csv(o.in), o.fraction, o.seed);
    save_csv(o.train_out, s.train);
    save_csv(o.val_out, s.val);
}

QuadrantMemoryBank build_bank(const RunConfig& config, const std::vector<PointCloud>& clouds) {
    if (clouds.empty()) throw EmptyInput("map: no points to ingest");
    MapperConfig mc = config.mapper;
    if (!config.has_bounds) mc.bounds = data_bounds(clouds, mc.resolution);
    QuadrantMemoryBank bank(mc);
    for (const auto& c : clouds) bank.add_cloud(c);
    return bank;
}

void cmd_map(const MapOptions& o) {
    save_bank(o.out, build_bank(o.config, load_csv(o.in)));
}

void cmd_decode(const DecodeOptions& o) {
    const QuadrantMemoryBank bank = load_bank(o.bank);
    const QueryGrid grid = query_grid_for(bank);
    const DecodedMaps maps = decode_pipeline(bank, grid);

    std::filesystem::create_directories(o.outdir);
    const std::filesystem::path dir(o.outdir);
    const std::pair<const char*, const ScalarGrid*> outputs[] = {
        {"prob_empty", &maps.prob_empty},         {"prob_occupied", &maps.prob_occupied},
        {"entropy_empty", &maps.entropy_empty},   {"entropy_occupied", &maps.entropy_occupied},
        {"global_entropy", &maps.global},
    };
    for (const auto& [name, g] : outputs) {
        const std::string stem = (dir / name).string();
        save_grid_csv(stem, *g, name);
        save_grid_pgm(stem + ".pgm", *g);
    }
    if (o.rho) save_occupancy((dir / "occupancy").string(), classify(maps.global, *o.rho));
}

void cmd_fuse(const FuseOptions& o) {
    if (o.banks.empty()) throw ConfigError("fuse: no input banks");
    std::vector<QuadrantMemoryBank> banks;
    banks.reserve(o.banks.size());
    for (const auto& p : o.banks) banks.push_back(load_bank(p));
    save_bank(o.out, fuse(banks));
}

void cmd_eval(const EvalOptions& o) {
    const QuadrantMemoryBank bank = load_bank(o.bank);
    const PointCloud val = merge(load_csv(o.val));
    const EvalReport report = evaluate(bank, val);
    std::ofstream out(o.out, std::ios::trunc);
    if (!out) throw Error("eval: cannot open '" + o.out + "' for writing");
    out << to_json(report) << '\n';
}

// --- ablation ---

MapperConfig AblationOptions::default_ablation_config() {
    MapperConfig c;
    c.dim = 4096;
    c.length_scale = 0.2;
    c.quadrants_per_dim = 1;
    c.bounds = {0.0, 8.0, 0.0, 8.0};
    c.resolution = 0.2;
    c.r_occupied = 2;
    c.r_empty = 2;
    c.seed = 0;
    return c;
}

AblationKind parse_ablation_kind(const std::string& name) {
    if (name == "dim") return AblationKind::Dim;
    if (name == "lengthscale") return AblationKind::LengthScale;
    if (name == "delta") return AblationKind::Delta;
    if (name == "radii") return AblationKind::Radii;
    throw ConfigError("ablate: unknown kind '" + name + "' (expected dim, lengthscale, delta or radii)");
}

std::vector<std::string> default_sweep(AblationKind kind) {
    std::vector<std::string> v;
    switch (kind) {
        case AblationKind::Dim:
            for (int e = 2; e <= 15; ++e) v.push_back(std::to_string(1 << e));
            break;
        case AblationKind::LengthScale:
            v = {"0.01", "0.05", "0.1", "0.2", "0.5", "1.0", "2.0"};
            break;
        case AblationKind::Delta:
            v = {"1", "2", "4", "6"};
            break;
        case AblationKind::Radii:
            for (int a = 1; a <= 4; ++a)
                for (int b = 1; b <= 4; ++b) v.push_back(std::to_string(a) + ":" + std::to_string(b));
            break;
    }
    return v;
}

namespace {

double parse_sweep_number(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) throw ConfigError("ablate: bad sweep value '" + s + "'");
    return v;
}

}  // namespace

std::vector<AblationPoint> run_ablation(const AblationOptions& o) {
    const auto values = o.values.empty() ? default_sweep(o.kind) : o.values;
    const PointCloud data = gen_circle_dataset(o.data_seed);
    const Split split = split_train_val({data}, o.split, o.data_seed);
    const PointCloud val = merge(split.val);

    std::vector<AblationPoint> rows;
    for (const auto& text : values) {
        MapperConfig c = o.base;
        AblationPoint row;
        switch (o.kind) {
            case AblationKind::Dim:
                row.value = parse_sweep_number(text);
                c.dim = static_cast<std::size_t>(row.value);
                break;
            case AblationKind::LengthScale:
                row.value = parse_sweep_number(text);
                c.length_scale = row.value;
                break;
            case AblationKind::Delta:
                row.value = parse_sweep_number(text);
                c.quadrants_per_dim = static_cast<std::size_t>(row.value);
                break;
            case AblationKind::Radii: {
                const auto colon = text.find(':');
                row.value = parse_sweep_number(text.substr(0, colon));
                row.value2 = colon == std::string::npos ? row.value : parse_sweep_number(text.substr(colon + 1));
                c.r_occupied = static_cast<int>(row.value);
                c.r_empty = static_cast<int>(row.value2);
                break;
            }
        }
        QuadrantMemoryBank bank(c);
        for (const auto& cloud : split.train) bank.add_cloud(cloud);
        row.auc = evaluate(bank, val).auc;
        rows.push_back(row);
    }
    return rows;
}

void write_ablation_csv(std::ostream& out, AblationKind kind, const std::vector<AblationPoint>& rows) {
    switch (kind) {
        case AblationKind::Dim: out << "dim,auc\n"; break;
        case AblationKind::LengthScale: out << "length_scale,auc\n"; break;
        case AblationKind::Delta: out << "quadrants,auc\n"; break;
        case AblationKind::Radii: out << "r_occ,r_emp,auc\n"; break;
    }
    for (const auto& r : rows) {
        out << format_real(r.value) << ',';
        if (kind == AblationKind::Radii) out << format_real(r.value2) << ',';
        out << format_real(r.auc) << '\n';
    }
}

void cmd_ablate(const AblationOptions& o) {
    const auto rows = run_ablation(o);
    std::ofstream out(o.out, std::ios::trunc);
    if (!out) throw Error("ablate: cannot open '" + o.out + "' for writing");
    write_ablation_csv(out, o.kind, rows);
}

// --- argument parsing ---

namespace {

// Mapper flags shared by `map` and `ablate`; unset flags leave the config
// value alone.
struct MapperFlags {
    std::optional<std::size_t> dim;
    std::optional<double> length_scale;
    std::optional<std::size_t> quadrants;
    std::optional<int> r_occ;
    std::optional<int> r_emp;
    std::optional<double> resolution;
    std::optional<std::string> bounds;
    std::optional<std::uint64_t> seed;

    void add_to(CLI::App* app) {
        app->add_option("--dim", dim, "Hypervector dimensionality d");
        app->add_option("--length-scale", length_scale, "Length scale l in meters");
        app->add_option("--quadrants", quadrants, "Quadrants per dimension (delta)");
        app->add_option("--r-occ", r_occ, "Disk radius in voxels for the occupied class");
        app->add_option("--r-emp", r_emp, "Disk radius in voxels for the empty class");
        app->add_option("--resolution", resolution, "Voxel size in meters");
        app->add_option("--bounds", bounds, "World bounds \"x_min x_max y_min y_max\"");
        app->add_option("--seed", seed, "Axis seed");
    }

    void apply(RunConfig& cfg) const {
        auto& m = cfg.mapper;
        if (dim) m.dim = *dim;
        if (length_scale) m.length_scale = *length_scale;
        if (quadrants) m.quadrants_per_dim = *quadrants;
        if (r_occ) m.r_occupied = *r_occ;
        if (r_emp) m.r_empty = *r_emp;
        if (resolution) m.resolution = *resolution;
        if (bounds) {
            m.bounds = parse_bounds(*bounds);
            cfg.has_bounds = true;
        }
        if (seed) m.seed = *seed;
    }
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string tok; std::getline(is, tok, ',');)
        if (!tok.empty()) out.push_back(tok);
    return out;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"Hyperdimensional occupancy grid mapping with quadrant FHRR memories"};
    app.require_subcommand(1);

    // simulate
    SimulateOptions sim;
    auto* s_sim = app.add_subcommand("simulate", "Simulate a 2D lidar over a scene and write a point-cloud CSV");
    s_sim->add_option("--scene", sim.scene, "Scene file (rect/circle/bounds lines)")->required();
    s_sim->add_option("--trajectory", sim.trajectory, "Trajectory CSV x,y[,heading in degrees]")->required();
    s_sim->add_option("--beams", sim.sensor.beams, "Beams per scan")->capture_default_str();
    s_sim->add_option("--fov", sim.sensor.fov_deg, "Field of view in degrees")->capture_default_str();
    s_sim->add_option("--range", sim.sensor.range, "Maximum range in meters")->capture_default_str();
    s_sim->add_option("--free-samples", sim.sensor.free_samples, "Empty samples drawn along each beam")
        ->capture_default_str();
    s_sim->add_option("--seed", sim.seed, "Seed for free-space sampling")->capture_default_str();
    s_sim->add_option("--out", sim.out, "Output CSV")->required();

    // split
    SplitOptions spl;
    std::string split_config;
    auto* s_split = app.add_subcommand("split", "Seeded per-point train/validation split of a point-cloud CSV");
    s_split->add_option("--in", spl.in, "Input CSV")->required();
    s_split->add_option("--config", split_config, "Config file (reads split and seed)");
    auto* split_fraction = s_split->add_option("--fraction", spl.fraction, "Training fraction")->capture_default_str();
    auto* split_seed = s_split->add_option("--seed", spl.seed, "Shuffle seed")->capture_default_str();
    s_split->add_option("--train", spl.train_out, "Training CSV output")->required();
    s_split->add_option("--val", spl.val_out, "Validation CSV output")->required();

    // map
    MapOptions map;
    std::string map_config;
    MapperFlags map_flags;
    auto* s_map = app.add_subcommand("map", "Accumulate point clouds into a quadrant memory bank");
    s_map->add_option("--config", map_config, "Config file (key = value)");
    s_map->add_option("--in", map.in, "Point-cloud CSV")->required();
    s_map->add_option("--out", map.out, "Output bank file")->required();
    map_flags.add_to(s_map);

    // decode
    DecodeOptions dec;
    auto* s_dec = app.add_subcommand("decode", "Decode probability and entropy maps from a bank");
    s_dec->add_option("--bank", dec.bank, "Bank file")->required();
    s_dec->add_option("--outdir", dec.outdir, "Output directory")->required();
    s_dec->add_option("--rho", dec.rho, "Decision threshold; writes occupancy.csv/.pgm when given");

    // fuse
    FuseOptions fus;
    auto* s_fuse = app.add_subcommand("fuse", "Fuse banks from several agents");
    s_fuse->add_option("banks", fus.banks, "Input bank files")->required();
    s_fuse->add_option("--out", fus.out, "Output bank file")->required();

    // eval
    EvalOptions ev;
    auto* s_eval = app.add_subcommand("eval", "Evaluate a bank on validation points and write a JSON report");
    s_eval->add_option("--bank", ev.bank, "Bank file")->required();
    s_eval->add_option("--val", ev.val, "Validation CSV")->required();
    s_eval->add_option("--out", ev.out, "Report JSON")->required();

    // ablate
    AblationOptions abl;
    std::string abl_kind, abl_values, abl_config;
    MapperFlags abl_flags;
    auto* s_abl = app.add_subcommand("ablate", "Parameter sweep on the circle dataset, writes (value, AUC) CSV");
    s_abl->add_option("--kind", abl_kind, "dim | lengthscale | delta | radii")->required();
    s_abl->add_option("--values", abl_values, "Comma-separated sweep values (radii as occ:emp)");
    s_abl->add_option("--config", abl_config, "Base config file");
    s_abl->add_option("--data-seed", abl.data_seed, "Dataset and split seed")->capture_default_str();
    s_abl->add_option("--out", abl.out, "Output CSV")->required();
    abl_flags.add_to(s_abl);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (s_sim->parsed()) {
            cmd_simulate(sim);
        } else if (s_split->parsed()) {
            if (!split_config.empty()) {
                const RunConfig rc = load_run_config(split_config);
                if (split_fraction->count() == 0) spl.fraction = rc.split;
                if (split_seed->count() == 0) spl.seed = rc.mapper.seed;
            }
            cmd_split(spl);
        } else if (s_map->parsed()) {
            if (!map_config.empty()) map.config = load_run_config(map_config);
            map_flags.apply(map.config);
            cmd_map(map);
        } else if (s_dec->parsed()) {
            cmd_decode(dec);
        } else if (s_fuse->parsed()) {
            cmd_fuse(fus);
        } else if (s_eval->parsed()) {
            cmd_eval(ev);
        } else if (s_abl->parsed()) {
            abl.kind = parse_ablation_kind(abl_kind);
            RunConfig rc;
            rc.mapper = abl.base;
            if (!abl_config.empty()) {
                rc = load_run_config(abl_config);
                abl.split = rc.split;
            }
            abl_flags.apply(rc);
            abl.base = rc.mapper;
            abl.values = split_list(abl_values);
            cmd_ablate(abl);
        }
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        // DataError and I/O failures.
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}

}  // namespace vsaogm::cli
