#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "gsa/rng.hpp"
#include "gsa/sampling.hpp"
#include "gsa/sobol.hpp"

using namespace gsa;

TEST_CASE("random_points is deterministic in (n, d, seed)") {
    const auto a = random_points(3, 2, 42);
    const auto b = random_points(3, 2, 42);
    CHECK(a == b);
    CHECK(random_points(3, 2, 43) != a);
}

TEST_CASE("random_points sample mean within the 3-sigma uniform bound") {
    const auto m = random_points(10000, 1, 7);
    double s = 0.0;
    for (double v : m.values()) s += v;
    const double mean = s / 10000.0;
    CHECK(mean > 0.47);
    CHECK(mean < 0.53);
}

TEST_CASE("random_points range contract") {
    const auto m = random_points(1, 1, 0);
    CHECK(m.rows() == 1);
    CHECK(m.in_unit_interval());
}

TEST_CASE("sobol_points first dimension matches the published sequence") {
    const auto m = sobol_points(3, 1);
    CHECK(m(0, 0) == 0.5);
    CHECK(m(1, 0) == 0.75);
    CHECK(m(2, 0) == 0.25);
}

TEST_CASE("sobol_points matches the reference table across dimensions") {
    // First eight points in eight dimensions, Joe-Kuo direction numbers
    // (checked against an independent implementation of the same table).
    const double expected[8][8] = {
        {0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5},
        {0.75, 0.25, 0.25, 0.25, 0.75, 0.75, 0.25, 0.75},
        {0.25, 0.75, 0.75, 0.75, 0.25, 0.25, 0.75, 0.25},
        {0.375, 0.375, 0.625, 0.875, 0.375, 0.125, 0.375, 0.875},
        {0.875, 0.875, 0.125, 0.375, 0.875, 0.625, 0.875, 0.375},
        {0.625, 0.125, 0.875, 0.625, 0.625, 0.875, 0.125, 0.125},
        {0.125, 0.625, 0.375, 0.125, 0.125, 0.375, 0.625, 0.625},
        {0.1875, 0.3125, 0.9375, 0.4375, 0.5625, 0.3125, 0.4375, 0.9375},
    };
    const auto m = sobol_points(8, 8);
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c)
            CHECK(m(r, c) == doctest::Approx(expected[r][c]).epsilon(1e-15));
}

TEST_CASE("sobol 1-D construction is a dyadic net") {
    // The raw sequence including its zero point stratifies every prefix of
    // length 2^m; the returned stream skips that zero point, so the net
    // statement is {0} union the first 2^m - 1 returned values.
    for (int mexp = 1; mexp <= 12; ++mexp) {
        const std::size_t n = std::size_t{1} << mexp;
        const auto pts = sobol_points(n - 1, 1);
        std::vector<bool> hit(n, false);
        hit[0] = true;  // the skipped zero point
        for (double v : pts.values()) {
            const auto bin = static_cast<std::size_t>(v * static_cast<double>(n));
            REQUIRE(bin < n);
            CHECK_FALSE(hit[bin]);
            hit[bin] = true;
        }
        CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
    }
}

TEST_CASE("scrambled sobol is deterministic and stays in range") {
    const auto a = sobol_points(4, 2, 1);
    const auto b = sobol_points(4, 2, 1);
    CHECK(a == b);
    CHECK(a != sobol_points(4, 2, 2));
    CHECK(a.in_unit_interval());
}

TEST_CASE("digital shift preserves 1-D stratification") {
    const std::size_t n = 1 << 8;
    const auto pts = sobol_points(n, 1, 99);
    std::set<std::size_t> bins;
    for (double v : pts.values())
        bins.insert(static_cast<std::size_t>(v * static_cast<double>(n)));
    // One point per bin except the pair sharing the skipped index's bin.
    CHECK(bins.size() >= n - 1);
}

TEST_CASE("sobol dimension beyond the table is an error") {
    CHECK_THROWS_AS(sobol_points(4, SobolSequence::max_dimension() + 1, {}),
                    std::invalid_argument);
    CHECK_NOTHROW(sobol_points(2, 111, {}));  // must cover at least 111 dimensions
}

TEST_CASE("build_ab splits columns and AB(i) swaps a single column") {
    SampleMatrix base(2, 2, {0.1, 0.9, 0.2, 0.8});
    const auto d = build_ab(base);
    CHECK(d.a(0, 0) == 0.1);
    CHECK(d.a(1, 0) == 0.2);
    CHECK(d.b(0, 0) == 0.9);
    CHECK(d.b(1, 0) == 0.8);
    CHECK(d.ab_value(0, 0, 0) == 0.9);  // k = 1: AB(0) = B

    SampleMatrix base2(1, 4, {0.11, 0.22, 0.33, 0.44});
    const auto d2 = build_ab(base2);
    CHECK(d2.ab_value(0, 0, 0) == 0.33);
    CHECK(d2.ab_value(0, 0, 1) == 0.22);
    CHECK(d2.ab_value(1, 0, 0) == 0.11);
    CHECK(d2.ab_value(1, 0, 1) == 0.44);
}

TEST_CASE("build_ab degenerate and error cases") {
    const auto empty = build_ab(SampleMatrix(0, 6));
    CHECK(empty.n() == 0);
    CHECK(empty.k() == 3);
    CHECK_THROWS_AS(build_ab(SampleMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("AB(i) differs from A only in column i") {
    const auto base = random_points(32, 10, 5);
    const auto d = build_ab(base);
    for (std::size_t i = 0; i < d.k(); ++i)
        for (std::size_t r = 0; r < d.n(); ++r)
            for (std::size_t c = 0; c < d.k(); ++c) {
                const double v = d.ab_value(i, r, c);
                if (c == i)
                    CHECK(v == d.b(r, c));
                else
                    CHECK(v == d.a(r, c));
            }
}

TEST_CASE("build_stars point counts follow the cost formula") {
    const auto d1 = build_stars(random_points(2, 3, 1), 0.1);
    CHECK(d1.points.rows() == 56);  // 2 [3 (10 - 1) + 1]
    const auto d2 = build_stars(random_points(1, 3, 2), 0.2);
    CHECK(d2.points.rows() == 13);

    for (const std::uint64_t seed : {7u, 8u, 9u}) {
        const std::size_t n_star = 1 + seed % 5, k = 3 + seed % 4;
        for (const double h : {0.1, 0.2, 0.05}) {
            const auto d = build_stars(random_points(n_star, k, seed), h);
            const auto grid = static_cast<std::size_t>(std::llround(1.0 / h));
            CHECK(d.points.rows() == n_star * (k * (grid - 1) + 1));
        }
    }
}

TEST_CASE("cross-section grids are anchored at the center") {
    SampleMatrix centers(1, 1, {0.537});
    const auto d = build_stars(centers, 0.1);
    const auto& section = d.section(0, 0);
    REQUIRE(section.size() == 10);
    for (std::size_t j = 0; j < 10; ++j) {
        const double expected = 0.037 + 0.1 * static_cast<double>(j);
        CHECK(d.points(section[j], 0) == doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK(d.points(section[5], 0) == 0.537);  // the center itself, exactly
}

TEST_CASE("sections vary only their own coordinate") {
    const auto centers = random_points(3, 4, 11);
    const auto d = build_stars(centers, 0.2);
    for (std::size_t v = 0; v < 3; ++v)
        for (std::size_t i = 0; i < 4; ++i) {
            const auto& sec = d.section(v, i);
            CHECK(sec.size() == 5);
            for (std::size_t j = 0; j < sec.size(); ++j) {
                for (std::size_t c = 0; c < 4; ++c)
                    if (c != i) CHECK(d.points(sec[j], c) == centers(v, c));
                if (j > 0)
                    CHECK(d.points(sec[j], i) - d.points(sec[j - 1], i) ==
                          doctest::Approx(0.2).epsilon(1e-12));
            }
            // center appears in every section of its star
            CHECK(std::find(sec.begin(), sec.end(), d.center_rows[v]) != sec.end());
        }
    CHECK(d.points.in_unit_interval());
}

TEST_CASE("build_stars rejects non-reciprocal-integer h") {
    CHECK_THROWS_AS(build_stars(random_points(1, 2, 0), 0.3), std::invalid_argument);
    CHECK_THROWS_AS(build_stars(random_points(1, 2, 0), 0.15), std::invalid_argument);
}

TEST_CASE("generators are pure functions of sizes and seed") {
    CHECK(sobol_points(17, 5, 3) == sobol_points(17, 5, 3));
    CHECK(random_points(17, 5, 3) == random_points(17, 5, 3));
    const auto c = random_points(4, 3, 12);
    const auto s1 = build_stars(c, 0.1);
    const auto s2 = build_stars(c, 0.1);
    CHECK(s1.points == s2.points);
    CHECK(s1.sections == s2.sections);
}
