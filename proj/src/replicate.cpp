#include "gsa/replicate.hpp"

#include <cmath>

#include "gsa/metrics.hpp"
#include "gsa/models.hpp"
#include "gsa/rng.hpp"
#include "gsa/sampling.hpp"
#include "gsa/sobol_estimators.hpp"
#include "gsa/vars_estimators.hpp"

namespace gsa::replicate {

namespace {

constexpr std::size_t kDim = 6;

// One replicate of the single-trajectory protocol: per-axis index
// estimates plus the joint-block sample variance.
struct SingleTrajectoryReplicate {
    std::vector<double> indices;  // numerator / variance
    double sample_variance = 0.0;
};

SingleTrajectoryReplicate single_trajectory_replicate(std::size_t m, std::uint64_t seed,
                                                      double variance) {
    const auto pts = sobol_points(m, kDim, seed);
    SingleTrajectoryReplicate rep;
    rep.indices.resize(kDim);

    std::vector<double> point(kDim), y(m);
    const auto anchor = pts.row(0);

    for (std::size_t i = 0; i < kDim; ++i) {
        std::copy(anchor.begin(), anchor.end(), point.begin());
        for (std::size_t j = 0; j < m; ++j) {
            point[i] = pts(j, i);
            y[j] = sixdim_eval(point);
        }
        rep.indices[i] = population_variance(y) / variance;
    }

    // Joint block: the same matrix evaluated rowwise, the (k+1)-th slice
    // of the budget.
    for (std::size_t j = 0; j < m; ++j) y[j] = sixdim_eval(pts.row(j));
    rep.sample_variance = population_variance(y);
    return rep;
}

}  // namespace

std::vector<PfPoint> fig4a_pf(const std::vector<std::size_t>& traj_points,
                              std::size_t replicates, std::uint64_t seed) {
    const auto analytic = sixdim_analytic();
    const std::vector<double> reference(analytic.variances.begin(), analytic.variances.end());

    std::vector<PfPoint> out;
    for (const std::size_t m : traj_points) {
        PfPoint point;
        point.traj_points = m;
        point.n_t = static_cast<long long>(m * (kDim + 1));

        std::vector<std::vector<double>> estimates;
        estimates.reserve(replicates);
        double vbar = 0.0;
        for (std::size_t r = 0; r < replicates; ++r) {
            const auto rep = single_trajectory_replicate(
                m, derive_seed(seed, (static_cast<std::uint64_t>(m) << 32) | r),
                analytic.total_variance);
            estimates.push_back(rep.indices);
            vbar += rep.sample_variance;
        }
        point.pf = prob_failure(reference, estimates, 0.0);
        point.mean_sample_variance = vbar / static_cast<double>(replicates);
        out.push_back(point);
    }
    return out;
}

std::vector<MaePoint> fig4b_mae(const std::vector<std::size_t>& traj_points, std::size_t p,
                                std::uint64_t seed) {
    const auto analytic = sixdim_analytic();
    const std::vector<double> reference(analytic.shares.begin(), analytic.shares.end());
    constexpr double kH = 0.1;
    const auto per_star = static_cast<long long>(kDim * (std::llround(1.0 / kH) - 1) + 1);

    std::vector<MaePoint> out;
    for (const std::size_t m : traj_points) {
        MaePoint point;
        point.traj_points = m;
        point.n_t_single = static_cast<long long>(m * (kDim + 1));
        point.n_star = static_cast<int>(
            std::max<long long>(1, std::llround(static_cast<double>(point.n_t_single) /
                                                static_cast<double>(per_star))));
        point.n_t_vars = point.n_star * per_star;

        std::vector<std::vector<double>> single_reps, vars_reps;
        for (std::size_t r = 0; r < p; ++r) {
            const auto tag = (static_cast<std::uint64_t>(m) << 32) | r;
            single_reps.push_back(
                single_trajectory_replicate(m, derive_seed(seed, tag), analytic.total_variance)
                    .indices);

            const auto centers = sobol_points(static_cast<std::size_t>(point.n_star), kDim,
                                              derive_seed(seed ^ 0x5eedULL, tag));
            const auto stars = build_stars(centers, kH);
            std::vector<double> y(stars.points.rows());
            for (std::size_t row = 0; row < stars.points.rows(); ++row)
                y[row] = sixdim_eval(stars.points.row(row));
            vars_reps.push_back(vars_to(stars, y).values);
        }
        point.mae_single = mae(reference, single_reps);
        point.mae_vars = mae(reference, vars_reps);
        out.push_back(point);
    }
    return out;
}

}  // namespace gsa::replicate
