#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gsa/models.hpp"
#include "gsa/rng.hpp"
#include "gsa/sampling.hpp"
#include "gsa/sobol_estimators.hpp"

using namespace gsa;

namespace {

// y(A) and y(AB_i) for an arbitrary model over a pick-freeze design.
struct Outputs {
    std::vector<double> y_a, y_b;
    std::vector<std::vector<double>> y_ab;
};

Outputs evaluate_design(const Model& model, const DesignAB& d) {
    Outputs out;
    const std::size_t n = d.n(), k = d.k();
    out.y_a.resize(n);
    out.y_b.resize(n);
    out.y_ab.assign(k, std::vector<double>(n));
    std::vector<double> point(k);
    for (std::size_t r = 0; r < n; ++r) {
        out.y_a[r] = model(d.a.row(r));
        out.y_b[r] = model(d.b.row(r));
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < k; ++c) point[c] = d.ab_value(i, r, c);
            out.y_ab[i][r] = model(point);
        }
    return out;
}

}  // namespace

TEST_CASE("jansen_total hand-computed example") {
    // numerator (4+4)/(2*2) = 2, population variance of {1,3} = 1
    const std::vector<double> y_a{1.0, 3.0};
    const std::vector<std::vector<double>> y_ab{{3.0, 1.0}};
    const auto est = jansen_total(y_a, y_ab);
    CHECK(est.values[0] == doctest::Approx(2.0));  // > 1 is legal estimator noise
    CHECK(est.clipped[0] == 1.0);
    CHECK(est.variance == doctest::Approx(1.0));
    CHECK(est.n_evaluations == 4);
    CHECK_FALSE(est.degenerate);
}

TEST_CASE("jansen_total of an ignored input is exactly zero") {
    const auto pts = random_points(64, 3, 4);
    std::vector<double> y_a(64);
    for (std::size_t r = 0; r < 64; ++r) y_a[r] = pts(r, 0) + pts(r, 1);
    const std::vector<std::vector<double>> y_ab{y_a};  // bitwise equal outputs
    const auto est = jansen_total(y_a, y_ab);
    CHECK(est.values[0] == 0.0);
}

TEST_CASE("jansen degenerate variance is flagged, not thrown") {
    const std::vector<double> y_a{2.0, 2.0, 2.0};
    const std::vector<std::vector<double>> y_ab{{2.0, 2.0, 2.0}};
    const auto est = jansen_total(y_a, y_ab);
    CHECK(est.degenerate);
    const auto first = jansen_first(y_a, y_ab, 0.0);
    CHECK(first.degenerate);
}

TEST_CASE("jansen_first: fully determining input gives S = 1") {
    const std::vector<double> y_b{0.4, 1.7, -2.0, 0.9};
    const std::vector<std::vector<double>> y_ab{y_b};
    const auto est = jansen_first(y_b, y_ab, 3.21);
    CHECK(est.values[0] == doctest::Approx(1.0));
}

TEST_CASE("additive linear model: first-order shares sum to one") {
    const Model linear{2, "lin", [](std::span<const double> x) { return x[0] + x[1]; }};
    const auto design = build_ab(sobol_points(4096, 4, 17));
    const auto out = evaluate_design(linear, design);
    std::vector<double> pooled(out.y_a);
    pooled.insert(pooled.end(), out.y_b.begin(), out.y_b.end());
    const auto est = jansen_first(out.y_b, out.y_ab, population_variance(pooled));
    CHECK(est.values[0] + est.values[1] == doctest::Approx(1.0).epsilon(0.02));
    CHECK(est.values[0] == doctest::Approx(0.5).epsilon(0.04));
}

TEST_CASE("six-dim model at N = 2^12: totals match the analytic shares") {
    const auto analytic = sixdim_analytic();
    const auto design = build_ab(sobol_points(1 << 12, 12, 23));
    const auto out = evaluate_design(sixdim_model(), design);
    const auto est = jansen_total(out.y_a, out.y_ab);
    for (int i = 0; i < 6; ++i)
        CHECK(std::abs(est.values[i] - analytic.shares[i]) < 0.01);
}

TEST_CASE("estimates are invariant under affine output rescaling") {
    const auto design = build_ab(sobol_points(256, 8, 3));
    const auto mf = Metafunction::build(4, 5, 0.6, 0.4);
    const auto out = evaluate_design(mf.as_model(), design);

    const auto scale = [](const std::vector<double>& y, double a, double b) {
        std::vector<double> s(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) s[i] = a * y[i] + b;
        return s;
    };
    const double a = -3.7, b = 11.0;
    std::vector<std::vector<double>> y_ab_s;
    for (const auto& col : out.y_ab) y_ab_s.push_back(scale(col, a, b));

    const auto t0 = jansen_total(out.y_a, out.y_ab);
    const auto t1 = jansen_total(scale(out.y_a, a, b), y_ab_s);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(t1.values[i] == doctest::Approx(t0.values[i]).epsilon(1e-12));

    const double v = population_variance(out.y_a);
    const auto f0 = jansen_first(out.y_b, out.y_ab, v);
    const auto f1 = jansen_first(scale(out.y_b, a, b), y_ab_s, a * a * v);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(f1.values[i] == doctest::Approx(f0.values[i]).epsilon(1e-12));
}

TEST_CASE("single-trajectory estimator on the six-dim model") {
    const auto model = sixdim_model();
    const auto analytic = sixdim_analytic();
    const std::vector<double> anchor{0.3, 0.3, 0.3, 0.3, 0.3, 0.3};

    // the constant input: exactly zero
    CHECK(single_trajectory_first(model, 5, anchor, 10000, analytic.total_variance) == 0.0);

    // the dominant input at a 1e4 midpoint grid
    const double s2 = single_trajectory_first(model, 1, anchor, 10000, analytic.total_variance);
    CHECK(std::abs(s2 - analytic.shares[1]) < 1e-3);
}

TEST_CASE("single-trajectory estimates are anchor-independent on additive models") {
    const auto model = sixdim_model();
    const auto analytic = sixdim_analytic();
    const std::vector<double> a1{0.1, 0.9, 0.5, 0.2, 0.8, 0.4};
    const std::vector<double> a2{0.6, 0.1, 0.9, 0.7, 0.3, 0.2};
    for (std::size_t i = 0; i < 6; ++i) {
        const double v1 = single_trajectory_first(model, i, a1, 512, analytic.total_variance);
        const double v2 = single_trajectory_first(model, i, a2, 512, analytic.total_variance);
        CHECK(std::abs(v1 - v2) <= 1e-12);
    }
}

TEST_CASE("single-trajectory argument validation") {
    const auto model = sixdim_model();
    const std::vector<double> anchor(6, 0.5);
    CHECK_THROWS_AS(single_trajectory_first(model, 0, anchor, 4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(single_trajectory_first(model, 0, anchor, 64, 0.0), std::invalid_argument);
}

TEST_CASE("bootstrap: resample-invariant estimator gives zero-width intervals") {
    const auto pts = random_points(32, 1, 9);
    std::vector<double> y(32);
    for (std::size_t r = 0; r < 32; ++r) y[r] = 1.0 + pts(r, 0);
    const std::vector<std::vector<double>> y_ab{y};  // T_i = 0, S_i = 1 in every resample
    const auto boot = bootstrap_percentile(y, y, y_ab, 200, 0.95, 5);
    CHECK(boot.total_lo[0] == 0.0);
    CHECK(boot.total_hi[0] == 0.0);
    CHECK(boot.first_lo[0] == doctest::Approx(1.0));
    CHECK(boot.first_hi[0] == doctest::Approx(1.0));
}

TEST_CASE("bootstrap intervals cover the point estimate") {
    const Model linear{3, "lin3",
                       [](std::span<const double> x) { return x[0] + 2.0 * x[1] + 3.0 * x[2]; }};
    int covered = 0;
    const int trials = 60;
    for (int t = 0; t < trials; ++t) {
        const auto design = build_ab(random_points(128, 6, 1000 + t));
        const auto out = evaluate_design(linear, design);
        const auto est = jansen_total(out.y_a, out.y_ab);
        const auto boot =
            bootstrap_percentile(out.y_a, out.y_b, out.y_ab, 120, 0.95, 2000 + t);
        bool ok = true;
        for (std::size_t i = 0; i < 3; ++i)
            ok = ok && boot.total_lo[i] <= est.values[i] && est.values[i] <= boot.total_hi[i];
        covered += ok ? 1 : 0;
    }
    CHECK(covered >= trials - 1);
}

TEST_CASE("bootstrap argument validation") {
    const std::vector<double> y{1.0, 2.0};
    const std::vector<std::vector<double>> y_ab{{1.0, 2.0}};
    CHECK_THROWS_AS(bootstrap_percentile(y, y, y_ab, 50, 0.95, 1), std::invalid_argument);
    CHECK_THROWS_AS(bootstrap_percentile(y, y, y_ab, 150, 1.5, 1), std::invalid_argument);
}
