#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "vsaogm/encoder.hpp"
#include "vsaogm/errors.hpp"
#include "vsaogm/rng.hpp"

using namespace vsaogm;

TEST_CASE("axis pair") {
    const auto axes = make_axis_pair(42, 64, 0.5);
    CHECK(axes.x_axis.seed != axes.y_axis.seed);
    CHECK(axes.x_axis.phases != axes.y_axis.phases);
    CHECK(axes.dim() == 64);
    CHECK(same_encoding(axes, make_axis_pair(42, 64, 0.5)));
    CHECK_FALSE(same_encoding(axes, make_axis_pair(43, 64, 0.5)));
    CHECK_FALSE(same_encoding(axes, make_axis_pair(42, 64, 0.25)));
    CHECK_THROWS_AS(make_axis_pair(1, 64, 0.0), InvalidArgument);
    CHECK_THROWS_AS(make_axis_pair(1, 64, -1.0), InvalidArgument);
}

TEST_CASE("encode_point") {
    const auto axes = make_axis_pair(3, 256, 0.2);
    const auto origin = encode_point(axes, 0.0, 0.0);
    CHECK(origin[0] == doctest::Approx(1.0));
    for (std::size_t i = 1; i < 256; ++i) CHECK(std::abs(origin[i]) < 1e-15);

    Rng rng(1);
    for (int trial = 0; trial < 25; ++trial) {
        const double x = rng.uniform(-10, 10), y = rng.uniform(-10, 10);
        const auto v = encode_point(axes, x, y);
        const auto composed = bind(fractional_bind(axes.x_axis, x / 0.2), fractional_bind(axes.y_axis, y / 0.2));
        CHECK(oracle::max_abs_diff(v.values(), composed.values()) < 1e-9);
        CHECK(std::abs(v.norm() - 1.0) < 1e-9);
    }
    CHECK_THROWS_AS(encode_point(axes, NAN, 0.0), InvalidArgument);
    CHECK_THROWS_AS(encode_point(axes, 0.0, INFINITY), InvalidArgument);
}

TEST_CASE("encode_point kernel at two length scales") {
    const double l = 0.3;
    const auto axes = make_axis_pair(17, 16384, l);
    const double s = similarity(encode_point(axes, 0, 0), encode_point(axes, 2 * l, 0));
    CHECK(std::abs(s - oracle::sinc(2.0)) < 0.05);
    CHECK(std::abs(s - oracle::phase_average(axes.x_axis, 2.0)) < 1e-9);
}

TEST_CASE("shift structure and separability") {
    const auto axes = make_axis_pair(5, 256, 0.4);
    Rng rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const double x1 = rng.uniform(-5, 5), y1 = rng.uniform(-5, 5);
        const double x2 = rng.uniform(-5, 5), y2 = rng.uniform(-5, 5);
        const double sx = rng.uniform(-5, 5), sy = rng.uniform(-5, 5);
        const double a = similarity(encode_point(axes, x1, y1), encode_point(axes, x2, y2));
        const double b = similarity(encode_point(axes, x1 + sx, y1 + sy), encode_point(axes, x2 + sx, y2 + sy));
        CHECK(std::abs(a - b) < 1e-9);

        const auto sep = bind(encode_point(axes, x1, 0), encode_point(axes, 0, y1));
        CHECK(oracle::max_abs_diff(sep.values(), encode_point(axes, x1, y1).values()) < 1e-9);
    }
}

TEST_CASE("wider length scale keeps nearby points more similar") {
    for (double delta : {0.05, 0.2, 0.5}) {
        double prev = -2.0;
        for (double l : {0.01, 0.2, 2.0}) {
            const auto axes = make_axis_pair(99, 16384, l);
            const double s = similarity(encode_point(axes, 0, 0), encode_point(axes, delta, 0));
            CHECK(s >= prev - 1e-12);
            prev = s;
        }
    }
}

TEST_CASE("encode_cloud") {
    const auto axes = make_axis_pair(8, 1024, 0.5);
    PointCloud one;
    one.push_back(0, 0, 1);
    const auto out = encode_cloud(axes, one);
    REQUIRE(out.size() == 1);
    CHECK(out[0] == encode_point(axes, 0, 0));

    Rng rng(3);
    PointCloud cloud;
    for (int i = 0; i < 500; ++i) cloud.push_back(rng.uniform(-20, 20), rng.uniform(-20, 20), i % 2);
    const auto vs = encode_cloud(axes, cloud);
    REQUIRE(vs.size() == 500);
    for (const auto& v : vs) CHECK(std::abs(v.norm() - 1.0) < 1e-9);

    // Reversing the input reverses the output.
    PointCloud rev;
    for (std::size_t i = cloud.size(); i-- > 0;) rev.push_back(cloud.xs[i], cloud.ys[i], cloud.labels[i]);
    const auto vr = encode_cloud(axes, rev);
    for (std::size_t i = 0; i < vs.size(); ++i) CHECK(vr[vs.size() - 1 - i] == vs[i]);

    CHECK_THROWS_AS(encode_cloud(axes, PointCloud{}), EmptyInput);
}

TEST_CASE("query grid layout") {
    const auto axes = make_axis_pair(1, 64, 0.2);
    const auto g = build_query_grid(axes, {0, 1, 0, 1}, 0.5);
    REQUIRE(g.rows() == 2);
    REQUIRE(g.cols() == 2);
    CHECK(g.center(0) == Point2{0.25, 0.25});
    CHECK(g.center(1) == Point2{0.75, 0.25});
    CHECK(g.center(2) == Point2{0.25, 0.75});
    CHECK(g.center(3) == Point2{0.75, 0.75});
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(g.vector(i) == encode_point(axes, g.center(i).x, g.center(i).y));
        CHECK(std::abs(g.vector(i).norm() - 1.0) < 1e-9);
    }

    const auto big = build_query_grid(axes, {0, 8, 0, 8}, 0.2);
    CHECK(big.rows() == 40);
    CHECK(big.cols() == 40);
    CHECK(big.size() == 1600);

    CHECK_THROWS_AS(build_query_grid(axes, {0, 0, 0, 1}, 0.5), InvalidArgument);
    CHECK_THROWS_AS(build_query_grid(axes, {0, 1, 2, 1}, 0.5), InvalidArgument);
    CHECK_THROWS_AS(build_query_grid(axes, {0, 1, 0, 1}, 0.0), InvalidArgument);
    CHECK_THROWS_AS(build_query_grid(axes, {0, 1, 0, 1}, -0.1), InvalidArgument);
}
