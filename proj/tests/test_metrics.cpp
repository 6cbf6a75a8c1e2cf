#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gsa/metrics.hpp"
#include "gsa/rng.hpp"

using namespace gsa;

TEST_CASE("mae hand arithmetic") {
    const std::vector<double> T{0.5, 0.5};
    CHECK(mae(T, {{0.5, 0.5}, {0.5, 0.5}}) == 0.0);
    CHECK(mae(T, {{0.6, 0.4}}) == doctest::Approx(0.1));
    // per-replicate MAEs 0.1 and 0.3 average to 0.2
    CHECK(mae(T, {{0.6, 0.4}, {0.8, 0.2}}) == doctest::Approx(0.2));
    CHECK_THROWS_AS(mae(T, {}), std::invalid_argument);
}

TEST_CASE("prob_failure extremes") {
    const std::vector<double> truth{3.0, 2.0, 1.0};
    CHECK(prob_failure(truth, {{0.9, 0.5, 0.1}, {5.0, 4.0, 3.0}}) == 0.0);
    CHECK(prob_failure(truth, {{0.1, 0.5, 0.9}}) == 1.0);
    CHECK(prob_failure(truth, {{0.9, 0.5, 0.1}, {0.1, 0.5, 0.9}}) == 0.5);
}

TEST_CASE("prob_failure tie handling") {
    const std::vector<double> truth{1.0, 0.5, 0.0};
    // an exact tie on the last place is not an inversion
    CHECK(prob_failure(truth, {{0.8, 0.1, 0.1}}) == 0.0);
    // true ties are never scored as failures either way
    const std::vector<double> tied_truth{1.0, 0.5, 0.5};
    CHECK(prob_failure(tied_truth, {{0.9, 0.2, 0.4}}) == 0.0);
}

TEST_CASE("prob_failure is monotone nonincreasing in the tolerance") {
    CounterRng rng(77);
    const std::vector<double> truth{0.4, 0.3, 0.2, 0.1};
    std::vector<std::vector<double>> reps;
    for (int r = 0; r < 200; ++r) {
        std::vector<double> e(4);
        for (std::size_t i = 0; i < 4; ++i)
            e[i] = truth[i] + 0.15 * (rng.next_double() - 0.5);
        reps.push_back(e);
    }
    double prev = 1.0;
    for (const double tol : {0.0, 0.02, 0.05, 0.1, 0.3}) {
        const double pf = prob_failure(truth, reps, tol);
        CHECK(pf <= prev + 1e-15);
        CHECK(pf >= 0.0);
        CHECK(pf <= 1.0);
        prev = pf;
    }
}

TEST_CASE("savage scores of k = 3") {
    const std::vector<int> ranks{1, 2, 3};
    const auto s = savage_scores(ranks);
    CHECK(s[0] == doctest::Approx(1.0 + 0.5 + 1.0 / 3.0));
    CHECK(s[1] == doctest::Approx(0.5 + 1.0 / 3.0));
    CHECK(s[2] == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("savage scores sum to k and decrease with rank") {
    CounterRng rng(3);
    for (const std::size_t k : {1u, 2u, 5u, 17u, 50u}) {
        std::vector<int> ranks(k);
        for (std::size_t i = 0; i < k; ++i) ranks[i] = static_cast<int>(i) + 1;
        // shuffle
        for (std::size_t i = 0; i + 1 < k; ++i)
            std::swap(ranks[i], ranks[i + rng.next_below(k - i)]);
        const auto s = savage_scores(ranks);
        double sum = 0.0;
        for (double v : s) sum += v;
        CHECK(sum == doctest::Approx(static_cast<double>(k)).epsilon(1e-12));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (ranks[i] < ranks[j]) CHECK(s[i] > s[j]);
    }
    CHECK(savage_scores(std::vector<int>{1})[0] == doctest::Approx(1.0));
}

TEST_CASE("savage scores reject non-permutations") {
    CHECK_THROWS_AS(savage_scores(std::vector<int>{1, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(savage_scores(std::vector<int>{0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(savage_scores(std::vector<int>{1, 2, 4}), std::invalid_argument);
}

TEST_CASE("rank_descending assigns rank 1 to the largest") {
    const std::vector<double> v{0.1, 0.9, 0.5};
    const auto r = rank_descending(v);
    CHECK(r == std::vector<int>{3, 1, 2});
}

TEST_CASE("performance_r identity and affine invariance") {
    const std::vector<double> T{0.5, 0.3, 0.15, 0.05};
    for (int delta = 1; delta <= 3; ++delta)
        CHECK(*performance_r(delta, T, T) == doctest::Approx(1.0));

    std::vector<double> affine(T.size());
    for (std::size_t i = 0; i < T.size(); ++i) affine[i] = 2.0 * T[i] + 1.0;
    CHECK(*performance_r(1, T, affine) == doctest::Approx(1.0));

    // rank-preserving monotone distortion: perfect rank correlation
    std::vector<double> distorted(T.size());
    for (std::size_t i = 0; i < T.size(); ++i) distorted[i] = std::exp(5.0 * T[i]);
    CHECK(*performance_r(2, T, distorted) == doctest::Approx(1.0));
    CHECK(*performance_r(3, T, distorted) == doctest::Approx(1.0));
    CHECK(*performance_r(1, T, distorted) < 1.0);
}

TEST_CASE("performance_r stays within [-1, 1] and flags degenerate vectors") {
    CounterRng rng(12);
    for (int t = 0; t < 100; ++t) {
        std::vector<double> a(5), b(5);
        for (std::size_t i = 0; i < 5; ++i) {
            a[i] = rng.next_double();
            b[i] = rng.next_double();
        }
        for (int delta = 1; delta <= 3; ++delta) {
            const auto r = performance_r(delta, a, b);
            REQUIRE(r.has_value());
            CHECK(*r >= -1.0 - 1e-12);
            CHECK(*r <= 1.0 + 1e-12);
        }
    }
    const std::vector<double> flat{1.0, 1.0, 1.0};
    const std::vector<double> ok{0.3, 0.2, 0.1};
    CHECK_FALSE(performance_r(1, flat, ok).has_value());
    CHECK_THROWS_AS(performance_r(4, ok, ok), std::invalid_argument);
    CHECK_THROWS_AS(performance_r(1, std::vector<double>{1.0, 2.0}, std::vector<double>{1.0, 2.0}),
                    std::invalid_argument);
}
