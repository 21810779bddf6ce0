#include "vsaogm/datasets.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "vsaogm/errors.hpp"
#include "vsaogm/rng.hpp"

namespace vsaogm {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(sep, start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

template <typename T>
bool parse_field(std::string_view s, T& out) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size() && !s.empty();
}

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

// --- CSV ---

std::vector<PointCloud> read_csv(std::istream& in, const std::string& source) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw ParseError(source, 1, "missing header");
    ++line_no;

    const auto header = split_fields(trim(line), ',');
    int col_x = -1, col_y = -1, col_label = -1, col_t = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const auto& h = header[i];
        const int idx = static_cast<int>(i);
        if (h == "x") col_x = idx;
        else if (h == "y") col_y = idx;
        else if (h == "label") col_label = idx;
        else if (h == "t") col_t = idx;
        else throw ParseError(source, line_no, "unknown column '" + std::string(h) + "'");
    }
    if (col_x < 0 || col_y < 0 || col_label < 0)
        throw ParseError(source, line_no, "header must contain x, y and label columns");

    std::map<std::uint64_t, PointCloud> groups;
    while (std::getline(in, line)) {
        ++line_no;
        const auto body = trim(line);
        if (body.empty()) continue;
        const auto fields = split_fields(body, ',');
        if (fields.size() != header.size())
            throw ParseError(source, line_no,
                             "expected " + std::to_string(header.size()) + " fields, got " + std::to_string(fields.size()));

        double x = 0.0, y = 0.0;
        if (!parse_field(fields[col_x], x) || !parse_field(fields[col_y], y))
            throw ParseError(source, line_no, "coordinate is not a number");
        if (!std::isfinite(x) || !std::isfinite(y)) throw ParseError(source, line_no, "non-finite coordinate");
        int label = -1;
        if (!parse_field(fields[col_label], label) || (label != 0 && label != 1))
            throw ParseError(source, line_no, "label must be 0 or 1, got '" + std::string(fields[col_label]) + "'");
        std::uint64_t t = 0;
        if (col_t >= 0 && !parse_field(fields[col_t], t))
            throw ParseError(source, line_no, "t must be a non-negative integer");

        auto& cloud = groups[t];
        cloud.t = t;
        cloud.push_back(x, y, static_cast<std::uint8_t>(label));
    }

    std::vector<PointCloud> out;
    out.reserve(groups.size());
    for (auto& [t, cloud] : groups) out.push_back(std::move(cloud));
    return out;
}

std::vector<PointCloud> load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    return read_csv(in, path);
}

void write_csv(std::ostream& out, const std::vector<PointCloud>& clouds) {
    out << "x,y,label,t\n";
    for (const auto& c : clouds)
        for (std::size_t i = 0; i < c.size(); ++i)
            out << format_real(c.xs[i]) << ',' << format_real(c.ys[i]) << ',' << static_cast<int>(c.labels[i]) << ','
                << c.t << '\n';
}

void save_csv(const std::string& path, const std::vector<PointCloud>& clouds) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    write_csv(out, clouds);
}

// --- circle dataset ---

PointCloud gen_circle_dataset(std::uint64_t seed, const CircleDatasetSpec& spec) {
    const double cx = 0.5 * (spec.bounds.x_min + spec.bounds.x_max);
    const double cy = 0.5 * (spec.bounds.y_min + spec.bounds.y_max);
    Rng rng(seed);
    PointCloud cloud;
    for (std::size_t i = 0; i < spec.occupied; ++i) {
        const double a = rng.uniform(0.0, 2.0 * std::numbers::pi);
        cloud.push_back(cx + spec.radius * std::cos(a), cy + spec.radius * std::sin(a), kOccupied);
    }
    for (std::size_t i = 0; i < spec.empty; ++i) {
        // sqrt of a uniform radius fraction gives uniform density over the disk.
        const double a = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const double r = spec.radius * std::sqrt(rng.uniform01());
        cloud.push_back(cx + r * std::cos(a), cy + r * std::sin(a), kEmpty);
    }
    return cloud;
}

// --- world / scene ---

void World::validate() const {
    if (!bounds.valid()) throw InvalidArgument("world: degenerate bounds");
    for (const auto& o : obstacles) {
        bool intersects = false;
        if (const auto* r = std::get_if<RectObstacle>(&o)) {
            if (!(r->x1 > r->x0 && r->y1 > r->y0)) throw InvalidArgument("world: degenerate rectangle");
            intersects = r->x0 <= bounds.x_max && r->x1 >= bounds.x_min && r->y0 <= bounds.y_max && r->y1 >= bounds.y_min;
        } else {
            const auto& c = std::get<CircleObstacle>(o);
            if (!(c.r > 0.0)) throw InvalidArgument("world: circle radius must be positive");
            const double nx = std::clamp(c.cx, bounds.x_min, bounds.x_max);
            const double ny = std::clamp(c.cy, bounds.y_min, bounds.y_max);
            intersects = std::hypot(c.cx - nx, c.cy - ny) <= c.r;
        }
        if (!intersects) throw InvalidArgument("world: obstacle lies entirely outside the bounds");
    }
}

World read_scene(std::istream& in, const std::string& source) {
    World world;
    bool have_bounds = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        std::vector<double> v;
        for (double x; ls >> x;) v.push_back(x);
        if (!ls.eof()) throw ParseError(source, line_no, "non-numeric field");
        auto need = [&](std::size_t n) {
            if (v.size() != n) throw ParseError(source, line_no, "'" + kind + "' takes " + std::to_string(n) + " numbers");
        };
        if (kind == "rect") {
            need(4);
            world.obstacles.emplace_back(RectObstacle{std::min(v[0], v[2]), std::min(v[1], v[3]),
                                                      std::max(v[0], v[2]), std::max(v[1], v[3])});
        } else if (kind == "circle") {
            need(3);
            world.obstacles.emplace_back(CircleObstacle{v[0], v[1], v[2]});
        } else if (kind == "bounds") {
            need(4);
            world.bounds = {v[0], v[1], v[2], v[3]};
            have_bounds = true;
        } else {
            throw ParseError(source, line_no, "unknown shape '" + kind + "'");
        }
    }
    if (!have_bounds) {
        if (world.obstacles.empty()) throw ParseError(source, line_no, "scene has no obstacles and no bounds line");
        Bounds b{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
                 std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
        for (const auto& o : world.obstacles) {
            if (const auto* r = std::get_if<RectObstacle>(&o)) {
                b = {std::min(b.x_min, r->x0), std::max(b.x_max, r->x1), std::min(b.y_min, r->y0), std::max(b.y_max, r->y1)};
            } else {
                const auto& c = std::get<CircleObstacle>(o);
                b = {std::min(b.x_min, c.cx - c.r), std::max(b.x_max, c.cx + c.r), std::min(b.y_min, c.cy - c.r),
                     std::max(b.y_max, c.cy + c.r)};
            }
        }
        world.bounds = b;
    }
    try {
        world.validate();
    } catch (const InvalidArgument& e) {
        throw ParseError(source, line_no, e.what());
    }
    return world;
}

World load_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open scene '" + path + "'");
    return read_scene(in, path);
}

std::vector<Pose> load_trajectory(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open trajectory '" + path + "'");
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line)) throw ParseError(path, 1, "missing header");
    const auto header = split_fields(trim(line), ',');
    const bool with_heading = header.size() == 3 && header[2] == "heading";
    if (header.size() < 2 || header[0] != "x" || header[1] != "y" || (header.size() == 3 && !with_heading) ||
        header.size() > 3)
        throw ParseError(path, 1, "header must be x,y or x,y,heading");

    std::vector<Pose> poses;
    while (std::getline(in, line)) {
        ++line_no;
        const auto body = trim(line);
        if (body.empty()) continue;
        const auto f = split_fields(body, ',');
        if (f.size() != header.size()) throw ParseError(path, line_no, "wrong field count");
        Pose p;
        double heading_deg = 0.0;
        if (!parse_field(f[0], p.x) || !parse_field(f[1], p.y) || (with_heading && !parse_field(f[2], heading_deg)))
            throw ParseError(path, line_no, "field is not a number");
        p.heading = heading_deg * std::numbers::pi / 180.0;
        poses.push_back(p);
    }
    return poses;
}

// --- lidar ---

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double ray_rect(const RectObstacle& r, double ox, double oy, double dx, double dy) {
    double t_near = -kInf, t_far = kInf;
    auto slab = [&](double o, double d, double lo, double hi) {
        if (d == 0.0) return o >= lo && o <= hi;
        double t0 = (lo - o) / d, t1 = (hi - o) / d;
        if (t0 > t1) std::swap(t0, t1);
        t_near = std::max(t_near, t0);
        t_far = std::min(t_far, t1);
        return true;
    };
    if (!slab(ox, dx, r.x0, r.x1) || !slab(oy, dy, r.y0, r.y1)) return kInf;
    if (t_near > t_far || t_far < 0.0) return kInf;
    return std::max(t_near, 0.0);
}

double ray_circle(const CircleObstacle& c, double ox, double oy, double dx, double dy) {
    const double px = ox - c.cx, py = oy - c.cy;
    const double b = dx * px + dy * py;
    const double cc = px * px + py * py - c.r * c.r;
    const double disc = b * b - cc;
    if (disc < 0.0) return kInf;
    const double s = std::sqrt(disc);
    const double t1 = -b - s;
    const double t2 = -b + s;
    if (t2 < 0.0) return kInf;
    return std::max(t1, 0.0);
}

bool strictly_inside(const Obstacle& o, double x, double y) {
    if (const auto* r = std::get_if<RectObstacle>(&o)) return x > r->x0 && x < r->x1 && y > r->y0 && y < r->y1;
    const auto& c = std::get<CircleObstacle>(o);
    return std::hypot(x - c.cx, y - c.cy) < c.r;
}

}  // namespace

double cast_ray(const World& world, double ox, double oy, double angle) {
    const double dx = std::cos(angle), dy = std::sin(angle);
    double best = kInf;
    for (const auto& o : world.obstacles) {
        const double t = std::visit(
            [&](const auto& shape) {
                if constexpr (std::is_same_v<std::decay_t<decltype(shape)>, RectObstacle>)
                    return ray_rect(shape, ox, oy, dx, dy);
                else
                    return ray_circle(shape, ox, oy, dx, dy);
            },
            o);
        best = std::min(best, t);
    }
    return best;
}

std::vector<PointCloud> simulate_lidar(const World& world, const std::vector<Pose>& trajectory,
                                       const LidarSpec& sensor, std::uint64_t seed) {
    if (trajectory.empty()) throw EmptyInput("simulate_lidar: trajectory is empty");
    if (sensor.beams < 1) throw InvalidArgument("simulate_lidar: beams must be >= 1");
    if (!(sensor.range > 0.0)) throw InvalidArgument("simulate_lidar: range must be positive");
    if (!(sensor.fov_deg > 0.0) || sensor.fov_deg > 360.0) throw InvalidArgument("simulate_lidar: fov must be in (0, 360]");
    if (sensor.free_samples < 0) throw InvalidArgument("simulate_lidar: free_samples must be >= 0");

    Rng rng(seed);
    const double fov = sensor.fov_deg * std::numbers::pi / 180.0;
    std::vector<PointCloud> out;
    out.reserve(trajectory.size());
    for (std::size_t t = 0; t < trajectory.size(); ++t) {
        const Pose& pose = trajectory[t];
        for (const auto& o : world.obstacles)
            if (strictly_inside(o, pose.x, pose.y))
                throw InvalidArgument("simulate_lidar: pose " + std::to_string(t) + " lies inside an obstacle");

        PointCloud cloud;
        cloud.t = t;
        for (int k = 0; k < sensor.beams; ++k) {
            const double angle = pose.heading - 0.5 * fov + (k + 0.5) * fov / sensor.beams;
            const double hit = cast_ray(world, pose.x, pose.y, angle);
            const bool occupied = hit <= sensor.range;
            const double dist = occupied ? hit : sensor.range;
            const double c = std::cos(angle), s = std::sin(angle);
            cloud.push_back(pose.x + dist * c, pose.y + dist * s, occupied ? kOccupied : kEmpty);
            for (int j = 0; j < sensor.free_samples; ++j) {
                const double u = rng.uniform(0.0, dist);
                cloud.push_back(pose.x + u * c, pose.y + u * s, kEmpty);
            }
        }
        out.push_back(std::move(cloud));
    }
    return out;
}

// --- split ---

Split split_train_val(const std::vector<PointCloud>& clouds, double fraction, std::uint64_t seed) {
    if (!(fraction > 0.0 && fraction < 1.0)) throw InvalidArgument("split: fraction must lie in (0, 1)");

    const std::size_t n = total_points(clouds);
    // Global point index -> (cloud, offset).
    std::vector<std::pair<std::size_t, std::size_t>> where;
    where.reserve(n);
    bool has_occ = false, has_emp = false;
    for (std::size_t c = 0; c < clouds.size(); ++c) {
        for (std::size_t i = 0; i < clouds[c].size(); ++i) {
            where.emplace_back(c, i);
            (clouds[c].labels[i] ? has_occ : has_emp) = true;
        }
    }
    const auto n_train = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));

    Rng rng(seed);
    std::vector<std::size_t> order(n);
    std::vector<char> in_train(n);
    for (int attempt = 0; attempt < 100; ++attempt) {
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        rng.shuffle(order);
        std::fill(in_train.begin(), in_train.end(), 0);
        for (std::size_t i = 0; i < n_train; ++i) in_train[order[i]] = 1;

        bool val_occ = false, val_emp = false;
        for (std::size_t g = 0; g < n; ++g) {
            if (in_train[g]) continue;
            const auto [c, i] = where[g];
            (clouds[c].labels[i] ? val_occ : val_emp) = true;
        }
        if (has_occ && has_emp && !(val_occ && val_emp)) continue;

        Split split;
        for (std::size_t c = 0, g = 0; c < clouds.size(); ++c) {
            PointCloud tr, va;
            tr.t = va.t = clouds[c].t;
            for (std::size_t i = 0; i < clouds[c].size(); ++i, ++g)
                (in_train[g] ? tr : va).push_back(clouds[c].xs[i], clouds[c].ys[i], clouds[c].labels[i]);
            if (!tr.empty()) split.train.push_back(std::move(tr));
            if (!va.empty()) split.val.push_back(std::move(va));
        }
        return split;
    }
    throw DegenerateSplit("split: could not draw a validation set containing both classes");
}

}  // namespace vsaogm
