#pragma once

#include <cstdint>
#include <vector>

namespace gsa::replicate {

// Probability-of-failure curve for the single-trajectory first-order
// estimator on the six-dimensional response surface. For each budget,
// one replicate draws a digitally shifted (m, 6) Sobol' matrix; column i
// serves as the trajectory along axis i (anchored at the matrix's first
// row), and the joint rows estimate the output variance. The ranking is
// scored against the analytic variances. N_t = m (k + 1).
struct PfPoint {
    std::size_t traj_points = 0;  // m
    long long n_t = 0;            // m (k+1)
    double pf = 0.0;
    double mean_sample_variance = 0.0;  // mean V̂(y) over replicates, diagnostic
};

std::vector<PfPoint> fig4a_pf(const std::vector<std::size_t>& traj_points,
                              std::size_t replicates, std::uint64_t seed);

// Matched-budget MAE comparison on the six-dimensional surface:
// single-trajectory estimator (analytic output variance, per the model's
// closed form) versus VARS-TO at h = 0.1 with N_star chosen to match the
// budget. p replicates per budget.
struct MaePoint {
    std::size_t traj_points = 0;     // m for the single-trajectory side
    long long n_t_single = 0;        // m (k+1)
    long long n_t_vars = 0;          // N_star [k(1/h - 1) + 1]
    int n_star = 0;
    double mae_single = 0.0;
    double mae_vars = 0.0;
};

std::vector<MaePoint> fig4b_mae(const std::vector<std::size_t>& traj_points, std::size_t p,
                                std::uint64_t seed);

}  // namespace gsa::replicate
