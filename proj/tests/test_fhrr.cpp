#include "doctest.h"

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "vsaogm/errors.hpp"
#include "vsaogm/fhrr.hpp"
#include "vsaogm/rng.hpp"

using namespace vsaogm;

namespace {

Hypervector random_unit(Rng& rng, std::size_t d) {
    Hypervector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = rng.uniform(-1.0, 1.0);
    return normalize(v);
}

}  // namespace

TEST_CASE("make_axis symmetry and determinism") {
    const auto a = make_axis(7, 8);
    CHECK(a.dim == 8);
    CHECK(a.phases[0] == 0.0);
    CHECK(a.phases[4] == 0.0);
    CHECK(a.phases[5] == -a.phases[3]);
    for (std::size_t k = 1; k < 8; ++k) CHECK(a.phases[8 - k] == -a.phases[k]);

    const auto b = make_axis(7, 8);
    CHECK(a.phases == b.phases);

    const auto c = make_axis(8, 8);
    bool differs = false;
    for (std::size_t k = 1; k < 4; ++k) differs = differs || (a.phases[k] != c.phases[k]);
    CHECK(differs);

    // Odd dimension has no Nyquist bin; all free phases lie in (-pi, pi].
    const auto odd = make_axis(3, 9);
    CHECK(odd.phases[0] == 0.0);
    for (std::size_t k = 1; k < 9; ++k) {
        CHECK(odd.phases[9 - k] == -odd.phases[k]);
        CHECK(odd.phases[k] > -std::numbers::pi);
        CHECK(odd.phases[k] <= std::numbers::pi);
    }

    CHECK_THROWS_AS(make_axis(1, 1), InvalidArgument);
    CHECK_THROWS_AS(make_axis(1, 0), InvalidArgument);
}

TEST_CASE("fractional_bind matches a naive inverse DFT") {
    for (std::size_t d : {8u, 31u, 64u}) {
        const auto axis = make_axis(11, d);
        for (double x : {-2.5, 0.0, 0.7, 13.0}) {
            const auto v = fractional_bind(axis, x);
            const auto ref = oracle::naive_fractional_power(axis, x);
            CHECK(oracle::max_abs_diff(v.values(), ref) < 1e-12);
        }
    }
}

TEST_CASE("fractional_bind basics") {
    const auto axis = make_axis(5, 64);
    const auto id = fractional_bind(axis, 0.0);
    CHECK(id[0] == doctest::Approx(1.0).epsilon(1e-15));
    for (std::size_t i = 1; i < 64; ++i) CHECK(std::abs(id[i]) < 1e-15);

    Rng rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const double x = rng.uniform(-100.0, 100.0);
        const auto v = fractional_bind(axis, x);
        CHECK(std::abs(v.norm() - 1.0) < 1e-9);
        CHECK(std::abs(similarity(v, v) - 1.0) < 1e-9);
        for (double m : spectrum_moduli(v)) CHECK(std::abs(m - 1.0) < 1e-9);
    }

    CHECK_THROWS_AS(fractional_bind(axis, std::nan("")), InvalidArgument);
    CHECK_THROWS_AS(fractional_bind(axis, INFINITY), InvalidArgument);
}

TEST_CASE("similarity of fractional powers follows the sinc kernel") {
    const auto axis = make_axis(2024, 16384);
    const double s = similarity(fractional_bind(axis, 0.0), fractional_bind(axis, 3.5));
    // The FFT route must equal the phase average exactly (up to rounding).
    CHECK(std::abs(s - oracle::phase_average(axis, 3.5)) < 1e-9);
    CHECK(std::abs(s - oracle::sinc(3.5)) < 0.05);
    CHECK(oracle::sinc(3.5) == doctest::Approx(-0.0909).epsilon(1e-3));
}

TEST_CASE("bind against brute-force circular convolution") {
    Rng rng(3);
    const auto a = random_unit(rng, 48);
    const auto b = random_unit(rng, 48);
    const auto ab = bind(a, b);
    const auto ref = oracle::circular_convolution(std::vector<double>(a.values().begin(), a.values().end()),
                                                  std::vector<double>(b.values().begin(), b.values().end()));
    CHECK(oracle::max_abs_diff(ab.values(), ref) < 1e-12);
    CHECK_THROWS_AS(bind(a, Hypervector(47)), DimensionMismatch);
}

TEST_CASE("bind identity, additivity and associativity") {
    const std::size_t d = 256;
    const auto axis = make_axis(9, d);
    const auto id = fractional_bind(axis, 0.0);
    Rng rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_unit(rng, d);
        CHECK(oracle::max_abs_diff(bind(a, id).values(), a.values()) < 1e-12);

        const double x = rng.uniform(-20, 20), y = rng.uniform(-20, 20);
        const auto sum = bind(fractional_bind(axis, x), fractional_bind(axis, y));
        CHECK(oracle::max_abs_diff(sum.values(), fractional_bind(axis, x + y).values()) < 1e-9);

        const auto b = random_unit(rng, d), c = random_unit(rng, d);
        CHECK(oracle::max_abs_diff(bind(bind(a, b), c).values(), bind(a, bind(b, c)).values()) < 1e-9);
    }
}

TEST_CASE("inverse is exact on unit-modulus vectors") {
    const std::size_t d = 256;
    const auto axis = make_axis(10, d);
    const auto id = fractional_bind(axis, 0.0);
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const double x = rng.uniform(-30, 30), y = rng.uniform(-30, 30);
        const auto px = fractional_bind(axis, x);
        const auto py = fractional_bind(axis, y);
        CHECK(oracle::max_abs_diff(bind(px, inverse(px)).values(), id.values()) < 1e-9);
        CHECK(oracle::max_abs_diff(inverse(px).values(), fractional_bind(axis, -x).values()) < 1e-9);
        const auto recovered = bind(bind(px, py), inverse(py));
        CHECK(oracle::max_abs_diff(recovered.values(), px.values()) < 1e-9);
    }
    // Involution, also for arbitrary vectors.
    const auto r = random_unit(rng, 17);
    CHECK(inverse(inverse(r)) == r);
}

TEST_CASE("bundle_into") {
    Rng rng(6);
    const auto a = random_unit(rng, 32), b = random_unit(rng, 32);
    CHECK(bundle_into(Hypervector::zeros(32), a) == a);
    CHECK(bundle_into(a, b) == bundle_into(b, a));
    CHECK_THROWS_AS(bundle_into(a, Hypervector(31)), DimensionMismatch);

    // Quasi-orthogonal vectors: the sum norm grows like sqrt(k).
    const auto axis = make_axis(12, 1024);
    Hypervector acc(1024);
    for (int k = 0; k < 100; ++k) acc = bundle_into(std::move(acc), fractional_bind(axis, rng.uniform(-500, 500)));
    CHECK(acc.norm() >= 10.0 * 0.5);
    CHECK(acc.norm() <= 10.0 * 1.5);
}

TEST_CASE("normalize") {
    const auto n = normalize(Hypervector(std::vector<double>{3, 4, 0, 0}));
    CHECK(n[0] == doctest::Approx(0.6));
    CHECK(n[1] == doctest::Approx(0.8));
    CHECK(n[2] == 0.0);
    CHECK(normalize(Hypervector::zeros(5)) == Hypervector::zeros(5));

    const auto axis = make_axis(13, 512);
    Rng rng(7);
    Hypervector acc(512);
    for (int k = 0; k < 50; ++k) acc += fractional_bind(axis, rng.uniform(-10, 10));
    CHECK(std::abs(normalize(acc).norm() - 1.0) < 1e-9);
}

TEST_CASE("similarity") {
    Rng rng(8);
    Hypervector v(std::vector<double>{1, 2, 3});
    CHECK(similarity(v, v) == doctest::Approx(14.0));
    CHECK_THROWS_AS(similarity(v, Hypervector(4)), DimensionMismatch);

    // Independent axes are quasi-orthogonal.
    int below = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto ax = make_axis(1000 + 2 * trial, 4096);
        const auto ay = make_axis(1001 + 2 * trial, 4096);
        const double x = rng.uniform(1, 50);
        if (std::abs(similarity(fractional_bind(ax, x), fractional_bind(ay, x))) < 0.1) ++below;
    }
    CHECK(below >= 99);
}

TEST_CASE("kernel noise shrinks with dimension") {
    // Sample standard deviation of similarity(phi(0), phi(x)) over seeds.
    const double x = 2.3;
    std::vector<double> stds;
    for (std::size_t d : {64u, 1024u, 16384u}) {
        double s = 0.0, s2 = 0.0;
        const int n = 200;
        for (int seed = 0; seed < n; ++seed) {
            const auto axis = make_axis(static_cast<std::uint64_t>(seed), d);
            const double v = similarity(fractional_bind(axis, 0.0), fractional_bind(axis, x));
            s += v;
            s2 += v * v;
        }
        const double mean = s / n;
        stds.push_back(std::sqrt((s2 - n * mean * mean) / (n - 1)));
    }
    CHECK(stds[0] > stds[1]);
    CHECK(stds[1] > stds[2]);
}
