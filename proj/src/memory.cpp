#include "vsaogm/memory.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "vsaogm/errors.hpp"

namespace vsaogm {
namespace {

std::size_t nearest_coordinate(double value, const std::vector<double>& coords) {
    std::size_t best = 0;
    double best_d2 = (value - coords[0]) * (value - coords[0]);
    for (std::size_t i = 1; i < coords.size(); ++i) {
        const double d2 = (value - coords[i]) * (value - coords[i]);
        if (d2 < best_d2) {
            best = i;
            best_d2 = d2;
        }
    }
    return best;
}

std::vector<double> cell_centers(double lo, double span, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = lo + (static_cast<double>(i) + 0.5) * span / static_cast<double>(n);
    return out;
}

}  // namespace

void MapperConfig::validate() const {
    if (dim < 2) throw InvalidArgument("config: dim must be >= 2");
    if (!(length_scale > 0.0) || !std::isfinite(length_scale))
        throw InvalidArgument("config: length_scale must be positive");
    if (quadrants_per_dim < 1) throw InvalidArgument("config: quadrants must be >= 1");
    if (!bounds.valid()) throw InvalidArgument("config: bounds are degenerate");
    if (!(resolution > 0.0) || !std::isfinite(resolution))
        throw InvalidArgument("config: resolution must be positive");
    if (r_occupied < 1) throw InvalidArgument("config: r_occ must be >= 1");
    if (r_empty < 1) throw InvalidArgument("config: r_emp must be >= 1");
}

std::vector<Point2> quadrant_centers(const Bounds& bounds, std::size_t quadrants_per_dim) {
    if (!bounds.valid()) throw InvalidArgument("quadrant_centers: degenerate bounds");
    if (quadrants_per_dim < 1) throw InvalidArgument("quadrant_centers: delta must be >= 1");
    const auto xs = cell_centers(bounds.x_min, bounds.width(), quadrants_per_dim);
    const auto ys = cell_centers(bounds.y_min, bounds.height(), quadrants_per_dim);
    std::vector<Point2> out;
    out.reserve(quadrants_per_dim * quadrants_per_dim);
    for (double y : ys)
        for (double x : xs) out.push_back({x, y});
    return out;
}

QuadrantMemoryBank::QuadrantMemoryBank(const MapperConfig& config) : config_(config) {
    config_.validate();
    axes_ = make_axis_pair(config_.seed, config_.dim, config_.length_scale);
    centers_ = quadrant_centers(config_.bounds, config_.quadrants_per_dim);
    center_xs_ = cell_centers(config_.bounds.x_min, config_.bounds.width(), config_.quadrants_per_dim);
    center_ys_ = cell_centers(config_.bounds.y_min, config_.bounds.height(), config_.quadrants_per_dim);
    accumulators_.assign(kNumClasses * centers_.size(), Hypervector::zeros(config_.dim));
    point_counts_.assign(accumulators_.size(), 0);
}

std::size_t QuadrantMemoryBank::assign_quadrant(const Point2& p) const {
    // Squared distance separates over the axes, so the 2D argmin is the pair
    // of per-axis argmins and lowest-index ties carry over to row-major order.
    const std::size_t col = nearest_coordinate(p.x, center_xs_);
    const std::size_t row = nearest_coordinate(p.y, center_ys_);
    return row * config_.quadrants_per_dim + col;
}

void QuadrantMemoryBank::add_cloud(const PointCloud& cloud) {
    if (cloud.empty()) throw EmptyInput("add_cloud: point cloud is empty");
    validate(cloud);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const std::size_t k = slot(assign_quadrant(cloud.point(i)), cloud.labels[i]);
        accumulators_[k] += encode_point(axes_, cloud.xs[i], cloud.ys[i]);
        ++point_counts_[k];
    }
}

std::vector<Hypervector> QuadrantMemoryBank::normalized_view() const {
    std::vector<Hypervector> out;
    out.reserve(accumulators_.size());
    for (const auto& acc : accumulators_) out.push_back(normalize(acc));
    return out;
}

std::size_t QuadrantMemoryBank::model_bytes() const {
    return accumulators_.size() * config_.dim * sizeof(double);
}

void QuadrantMemoryBank::set_state(std::vector<Hypervector> accumulators,
                                   std::vector<std::uint64_t> counts) {
    if (accumulators.size() != accumulators_.size() || counts.size() != point_counts_.size())
        throw ShapeMismatch("bank: slot count mismatch");
    for (const auto& a : accumulators)
        if (a.dim() != config_.dim) throw DimensionMismatch("bank: accumulator dimension mismatch");
    accumulators_ = std::move(accumulators);
    point_counts_ = std::move(counts);
}

QuadrantMemoryBank fuse(std::span<const QuadrantMemoryBank> banks) {
    if (banks.empty()) throw EmptyInput("fuse: no banks given");
    const QuadrantMemoryBank& first = banks.front();
    const MapperConfig& ref = first.config();

    for (std::size_t i = 1; i < banks.size(); ++i) {
        const MapperConfig& c = banks[i].config();
        const std::string who = "fuse: bank " + std::to_string(i) + " ";
        if (!same_encoding(first.axes(), banks[i].axes()))
            throw FusionPreconditionError(who + "violates condition 1 (same axis basis vectors): "
                                          "seed, dim or length scale differ");
        if (banks[i].num_slots() / banks[i].num_quadrants() != first.num_slots() / first.num_quadrants())
            throw FusionPreconditionError(who + "violates condition 2 (same class set)");
        if (c.quadrants_per_dim != ref.quadrants_per_dim || !(c.bounds == ref.bounds))
            throw FusionPreconditionError(who + "violates condition 3 (same quadrant partition): "
                                          "delta or bounds differ");
    }

    std::vector<Hypervector> acc = first.accumulators();
    std::vector<std::uint64_t> counts = first.point_counts();
    for (std::size_t i = 1; i < banks.size(); ++i) {
        for (std::size_t k = 0; k < acc.size(); ++k) {
            acc[k] += banks[i].accumulators()[k];
            counts[k] += banks[i].point_counts()[k];
        }
    }
    QuadrantMemoryBank out(ref);
    out.set_state(std::move(acc), std::move(counts));
    return out;
}

// --- serialization ---

namespace {

std::string format_real(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void put_f64_le(std::ostream& out, double v) {
    auto bits = std::bit_cast<std::uint64_t>(v);
    unsigned char bytes[8];
    for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xFF);
    out.write(reinterpret_cast<const char*>(bytes), 8);
}

double get_f64_le(const unsigned char* bytes) {
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
    return std::bit_cast<double>(bits);
}

template <typename T>
T parse_number(const std::map<std::string, std::string>& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw FormatError("bank: header is missing '" + key + "'");
    std::istringstream is(it->second);
    T v{};
    is >> v;
    if (is.fail() || !is.eof()) throw FormatError("bank: bad value for '" + key + "': " + it->second);
    return v;
}

}  // namespace

void write_bank(std::ostream& out, const QuadrantMemoryBank& bank) {
    const MapperConfig& c = bank.config();
    std::ostringstream header;
    header << kBankMagic << '\n'
           << "dim=" << c.dim << '\n'
           << "length_scale=" << format_real(c.length_scale) << '\n'
           << "quadrants=" << c.quadrants_per_dim << '\n'
           << "x_min=" << format_real(c.bounds.x_min) << '\n'
           << "x_max=" << format_real(c.bounds.x_max) << '\n'
           << "y_min=" << format_real(c.bounds.y_min) << '\n'
           << "y_max=" << format_real(c.bounds.y_max) << '\n'
           << "resolution=" << format_real(c.resolution) << '\n'
           << "r_occ=" << c.r_occupied << '\n'
           << "r_emp=" << c.r_empty << '\n'
           << "seed=" << c.seed << '\n'
           << "classes=" << kNumClasses << '\n'
           << "counts=";
    for (std::size_t k = 0; k < bank.point_counts().size(); ++k)
        header << (k ? "," : "") << bank.point_counts()[k];
    header << "\nend\n";
    const std::string h = header.str();
    out.write(h.data(), static_cast<std::streamsize>(h.size()));
    for (const auto& acc : bank.accumulators())
        for (double v : acc.values()) put_f64_le(out, v);
    if (!out) throw Error("bank: write failed");
}

QuadrantMemoryBank read_bank(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kBankMagic) throw FormatError("bank: bad magic (not a VSAOGM1 file)");

    std::map<std::string, std::string> kv;
    bool ended = false;
    while (std::getline(in, line)) {
        if (line == "end") {
            ended = true;
            break;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw FormatError("bank: malformed header line '" + line + "'");
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    if (!ended) throw FormatError("bank: header not terminated");

    MapperConfig c;
    c.dim = parse_number<std::size_t>(kv, "dim");
    c.length_scale = parse_number<double>(kv, "length_scale");
    c.quadrants_per_dim = parse_number<std::size_t>(kv, "quadrants");
    c.bounds = {parse_number<double>(kv, "x_min"), parse_number<double>(kv, "x_max"),
                parse_number<double>(kv, "y_min"), parse_number<double>(kv, "y_max")};
    c.resolution = parse_number<double>(kv, "resolution");
    c.r_occupied = parse_number<int>(kv, "r_occ");
    c.r_empty = parse_number<int>(kv, "r_emp");
    c.seed = parse_number<std::uint64_t>(kv, "seed");
    if (parse_number<std::size_t>(kv, "classes") != kNumClasses) throw FormatError("bank: unsupported class count");
    try {
        c.validate();
    } catch (const InvalidArgument& e) {
        throw FormatError(std::string("bank: ") + e.what());
    }

    QuadrantMemoryBank bank(c);
    const std::size_t slots = bank.num_slots();

    std::vector<std::uint64_t> counts;
    {
        std::istringstream is(kv.count("counts") ? kv.at("counts") : "");
        std::string tok;
        while (std::getline(is, tok, ',')) {
            std::istringstream ts(tok);
            std::uint64_t v = 0;
            ts >> v;
            if (ts.fail()) throw FormatError("bank: bad counts entry '" + tok + "'");
            counts.push_back(v);
        }
    }
    if (counts.size() != slots) throw FormatError("bank: counts length does not match slot count");

    const std::size_t n_values = slots * c.dim;
    std::vector<unsigned char> raw(n_values * 8);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (static_cast<std::size_t>(in.gcount()) != raw.size())
        throw FormatError("bank: truncated payload (expected " + std::to_string(raw.size()) + " bytes)");
    if (in.peek() != std::char_traits<char>::eof()) throw FormatError("bank: trailing bytes after payload");

    std::vector<Hypervector> acc;
    acc.reserve(slots);
    for (std::size_t k = 0; k < slots; ++k) {
        Hypervector v(c.dim);
        for (std::size_t i = 0; i < c.dim; ++i) v[i] = get_f64_le(&raw[(k * c.dim + i) * 8]);
        acc.push_back(std::move(v));
    }
    bank.set_state(std::move(acc), std::move(counts));
    return bank;
}

void save_bank(const std::string& path, const QuadrantMemoryBank& bank) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("bank: cannot open '" + path + "' for writing");
    write_bank(out, bank);
}

QuadrantMemoryBank load_bank(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("bank: cannot open '" + path + "'");
    return read_bank(in);
}

}  // namespace vsaogm
