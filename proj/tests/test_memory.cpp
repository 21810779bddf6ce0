#include "doctest.h"

#include <bit>
#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "vsaogm/decoder.hpp"
#include "vsaogm/errors.hpp"
#include "vsaogm/memory.hpp"
#include "vsaogm/rng.hpp"

using namespace vsaogm;

namespace {

MapperConfig small_config(std::size_t delta = 2, std::size_t dim = 256) {
    MapperConfig c;
    c.dim = dim;
    c.length_scale = 0.5;
    c.quadrants_per_dim = delta;
    c.bounds = {0, 10, 0, 10};
    c.resolution = 0.5;
    c.seed = 77;
    return c;
}

PointCloud random_cloud(Rng& rng, std::size_t n, const Bounds& b = {0, 10, 0, 10}) {
    PointCloud c;
    for (std::size_t i = 0; i < n; ++i)
        c.push_back(rng.uniform(b.x_min, b.x_max), rng.uniform(b.y_min, b.y_max),
                    static_cast<std::uint8_t>(rng.below(2)));
    return c;
}

void check_banks_close(const QuadrantMemoryBank& a, const QuadrantMemoryBank& b, double tol) {
    REQUIRE(a.num_slots() == b.num_slots());
    CHECK(a.point_counts() == b.point_counts());
    for (std::size_t k = 0; k < a.num_slots(); ++k)
        CHECK(oracle::max_rel_diff(a.accumulators()[k].values(), b.accumulators()[k].values()) <= tol);
}

}  // namespace

TEST_CASE("quadrant centers") {
    const auto one = quadrant_centers({0, 10, 0, 10}, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == Point2{5, 5});

    const auto four = quadrant_centers({0, 10, 0, 10}, 2);
    REQUIRE(four.size() == 4);
    CHECK(four[0] == Point2{2.5, 2.5});
    CHECK(four[1] == Point2{7.5, 2.5});
    CHECK(four[2] == Point2{2.5, 7.5});
    CHECK(four[3] == Point2{7.5, 7.5});

    const auto six = quadrant_centers({0, 8, 0, 8}, 6);
    REQUIRE(six.size() == 36);
    CHECK(six[1].x - six[0].x == doctest::Approx(8.0 / 6.0));
    CHECK(six[6].y - six[0].y == doctest::Approx(8.0 / 6.0));

    CHECK_THROWS_AS(quadrant_centers({0, 0, 0, 1}, 2), InvalidArgument);
    CHECK_THROWS_AS(quadrant_centers({0, 1, 0, 1}, 0), InvalidArgument);
}

TEST_CASE("bank shape") {
    for (std::size_t delta : {1u, 2u, 4u, 6u}) {
        QuadrantMemoryBank bank(small_config(delta, 64));
        CHECK(bank.num_slots() == delta * delta * 2);
        CHECK(bank.model_bytes() == 2 * delta * delta * 64 * 8);
    }
    MapperConfig bad = small_config();
    bad.r_empty = 0;
    CHECK_THROWS_AS(QuadrantMemoryBank{bad}, InvalidArgument);
    bad = small_config();
    bad.quadrants_per_dim = 0;
    CHECK_THROWS_AS(QuadrantMemoryBank{bad}, InvalidArgument);
}

TEST_CASE("assign_quadrant") {
    QuadrantMemoryBank bank(small_config(2));
    CHECK(bank.assign_quadrant({1, 1}) == 0);
    CHECK(bank.assign_quadrant({5, 5}) == 0);  // equidistant to all four
    CHECK(bank.assign_quadrant({9, 1}) == 1);
    CHECK(bank.assign_quadrant({1, 9}) == 2);
    CHECK(bank.assign_quadrant({-50, 100}) == 2);  // outside the bounds

    for (std::size_t delta : {1u, 3u, 6u}) {
        QuadrantMemoryBank b(small_config(delta, 16));
        Rng rng(delta);
        for (int i = 0; i < 1000; ++i) {
            const Point2 p{rng.uniform(-2, 12), rng.uniform(-2, 12)};
            CHECK(b.assign_quadrant(p) == oracle::nearest_center(b.centers(), p));
        }
    }
}

TEST_CASE("add_cloud routes to slot 2*quadrant + label") {
    QuadrantMemoryBank bank(small_config(2));
    PointCloud c;
    c.push_back(1.0, 2.0, kOccupied);
    bank.add_cloud(c);
    CHECK(bank.accumulators()[1] == encode_point(bank.axes(), 1.0, 2.0));
    for (std::size_t k = 0; k < bank.num_slots(); ++k) {
        if (k == 1) continue;
        CHECK(bank.accumulators()[k] == Hypervector::zeros(bank.config().dim));
    }
    CHECK(bank.point_counts()[1] == 1);

    PointCloud e;
    e.push_back(8.0, 8.0, kEmpty);
    bank.add_cloud(e);
    CHECK(bank.point_counts()[6] == 1);
}

TEST_CASE("each added point increments exactly one count") {
    QuadrantMemoryBank bank(small_config(3, 32));
    Rng rng(9);
    for (int i = 0; i < 200; ++i) {
        PointCloud c;
        c.push_back(rng.uniform(-1, 11), rng.uniform(-1, 11), static_cast<std::uint8_t>(rng.below(2)));
        const auto before = bank.point_counts();
        bank.add_cloud(c);
        const std::size_t expected = QuadrantMemoryBank::slot(bank.assign_quadrant(c.point(0)), c.labels[0]);
        for (std::size_t k = 0; k < bank.num_slots(); ++k)
            CHECK(bank.point_counts()[k] == before[k] + (k == expected ? 1 : 0));
    }
}

TEST_CASE("add_cloud additivity") {
    Rng rng(10);
    const auto cloud = random_cloud(rng, 100);

    QuadrantMemoryBank twice(small_config());
    twice.add_cloud(cloud);
    twice.add_cloud(cloud);
    QuadrantMemoryBank once(small_config());
    once.add_cloud(cloud);
    for (std::size_t k = 0; k < once.num_slots(); ++k) {
        Hypervector doubled = once.accumulators()[k];
        doubled += once.accumulators()[k];
        CHECK(oracle::max_rel_diff(twice.accumulators()[k].values(), doubled.values()) <= 1e-12);
        CHECK(twice.point_counts()[k] == 2 * once.point_counts()[k]);
    }

    QuadrantMemoryBank singles(small_config());
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        PointCloud one;
        one.push_back(cloud.xs[i], cloud.ys[i], cloud.labels[i]);
        singles.add_cloud(one);
    }
    check_banks_close(singles, once, 1e-6);

    // Slot sums computed independently of the bank.
    std::vector<Hypervector> expected(once.num_slots(), Hypervector::zeros(once.config().dim));
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const std::size_t q = oracle::nearest_center(once.centers(), cloud.point(i));
        expected[2 * q + cloud.labels[i]] += encode_point(once.axes(), cloud.xs[i], cloud.ys[i]);
    }
    for (std::size_t k = 0; k < once.num_slots(); ++k)
        CHECK(oracle::max_rel_diff(once.accumulators()[k].values(), expected[k].values()) <= 1e-6);
}

TEST_CASE("add_cloud errors leave the bank untouched") {
    QuadrantMemoryBank bank(small_config());
    PointCloud bad;
    bad.push_back(1, 1, 1);
    bad.push_back(2, 2, 2);
    CHECK_THROWS_AS(bank.add_cloud(bad), InvalidLabel);
    CHECK(bank == QuadrantMemoryBank(small_config()));
    CHECK_THROWS_AS(bank.add_cloud(PointCloud{}), EmptyInput);
}

TEST_CASE("normalized_view") {
    QuadrantMemoryBank bank(small_config(1));
    for (const auto& v : bank.normalized_view()) CHECK(v == Hypervector::zeros(bank.config().dim));

    PointCloud one;
    one.push_back(3, 4, kOccupied);
    bank.add_cloud(one);
    const auto view1 = bank.normalized_view();
    CHECK(oracle::max_abs_diff(view1[1].values(), encode_point(bank.axes(), 3, 4).values()) < 1e-12);

    Rng rng(11);
    PointCloud many;
    for (int i = 0; i < 49; ++i) many.push_back(rng.uniform(0, 10), rng.uniform(0, 10), kOccupied);
    bank.add_cloud(many);
    const auto before = bank.accumulators();
    const auto view = bank.normalized_view();
    CHECK(bank.accumulators() == before);
    CHECK(std::abs(view[1].norm() - 1.0) < 1e-9);
    const double cosine = similarity(view[1], before[1]) / before[1].norm();
    CHECK(std::abs(cosine - 1.0) < 1e-12);
}

TEST_CASE("fuse") {
    Rng rng(12);
    const auto c1 = random_cloud(rng, 60), c2 = random_cloud(rng, 60), c3 = random_cloud(rng, 60);
    const auto cfg = small_config();

    QuadrantMemoryBank a(cfg), b(cfg), c(cfg), all(cfg);
    a.add_cloud(c1);
    b.add_cloud(c2);
    c.add_cloud(c3);
    all.add_cloud(c1);
    all.add_cloud(c2);

    CHECK(fuse(std::vector{a}) == a);
    CHECK(fuse(std::vector{a, QuadrantMemoryBank(cfg)}) == a);
    check_banks_close(fuse(std::vector{a, b}), all, 1e-6);

    // Commutative and associative.
    check_banks_close(fuse(std::vector{a, b}), fuse(std::vector{b, a}), 1e-6);
    check_banks_close(fuse(std::vector{fuse(std::vector{a, b}), c}), fuse(std::vector{a, fuse(std::vector{b, c})}), 1e-6);

    // Training-order independence.
    QuadrantMemoryBank rev(cfg);
    rev.add_cloud(c2);
    rev.add_cloud(c1);
    check_banks_close(rev, all, 1e-6);

    // Decode output is the same for fused and union-trained banks.
    const auto grid = query_grid_for(a);
    const auto fused_maps = decode_pipeline(fuse(std::vector{a, b}), grid);
    const auto union_maps = decode_pipeline(all, grid);
    CHECK(oracle::max_abs_diff(fused_maps.global.values, union_maps.global.values) <= 1e-6);
    CHECK(oracle::max_abs_diff(fused_maps.prob_occupied.values, union_maps.prob_occupied.values) <= 1e-6);
}

TEST_CASE("fuse rejects mismatched banks and names the condition") {
    const auto cfg = small_config();
    QuadrantMemoryBank a(cfg);

    auto expect_condition = [&](MapperConfig other, const std::string& what) {
        const QuadrantMemoryBank b(other);
        try {
            fuse(std::vector{a, b});
            FAIL("fusion should have been rejected");
        } catch (const FusionPreconditionError& e) {
            CHECK(std::string(e.what()).find(what) != std::string::npos);
        }
    };
    auto seed = cfg;
    seed.seed = 78;
    expect_condition(seed, "condition 1");
    auto dim = cfg;
    dim.dim = 128;
    expect_condition(dim, "condition 1");
    auto ls = cfg;
    ls.length_scale = 0.25;
    expect_condition(ls, "condition 1");
    auto delta = cfg;
    delta.quadrants_per_dim = 3;
    expect_condition(delta, "condition 3");
    auto bounds = cfg;
    bounds.bounds = {0, 12, 0, 10};
    expect_condition(bounds, "condition 3");

    // Decode-only settings may differ between agents.
    auto radii = cfg;
    radii.r_occupied = 4;
    radii.r_empty = 1;
    CHECK_NOTHROW(fuse(std::vector{a, QuadrantMemoryBank(radii)}));
    CHECK_THROWS_AS(fuse(std::span<const QuadrantMemoryBank>{}), EmptyInput);
}

TEST_CASE("bank serialization") {
    Rng rng(13);
    QuadrantMemoryBank bank(small_config(2, 64));
    bank.add_cloud(random_cloud(rng, 40));

    std::stringstream ss;
    write_bank(ss, bank);
    const std::string bytes = ss.str();
    CHECK(bytes.rfind("VSAOGM1\n", 0) == 0);
    const auto header_end = bytes.find("\nend\n") + 5;
    CHECK(bytes.size() - header_end == bank.model_bytes());

    std::stringstream in(bytes);
    CHECK(read_bank(in) == bank);

    // Little-endian float64 payload, slot-major.
    const double first = bank.accumulators()[0][0];
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i)
        bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[header_end + i])) << (8 * i);
    CHECK(std::bit_cast<double>(bits) == first);

    std::stringstream bad_magic("VSAOGM2\n" + bytes.substr(8));
    CHECK_THROWS_AS(read_bank(bad_magic), FormatError);
    std::stringstream truncated(bytes.substr(0, bytes.size() - 9));
    CHECK_THROWS_AS(read_bank(truncated), FormatError);
    std::stringstream trailing(bytes + "x");
    CHECK_THROWS_AS(read_bank(trailing), FormatError);
}
