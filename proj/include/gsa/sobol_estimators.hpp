#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gsa {

// Per-input sensitivity index estimate with its method tag, the number
// of model evaluations consumed, and the output variance estimate used
// in the denominator. A zero or non-finite variance marks the whole
// estimate degenerate instead of producing 0/0 values.
struct SensitivityEstimate {
    std::string method;
    std::vector<double> values;           // raw index values
    std::vector<double> clipped;          // values clamped into [0, 1]
    double variance = 0.0;                // V̂(y)
    long long n_evaluations = 0;          // N_t
    bool degenerate = false;
};

// Population (divide-by-N) mean and variance helpers; population
// normalization keeps the variogram closure identities exact.
double mean_of(std::span<const double> y);
double population_variance(std::span<const double> y);

// Jansen total-order estimator:
//   T_i = [ (1/2N) sum_j (yA_j - yAB_i,j)^2 ] / V̂(yA).
SensitivityEstimate jansen_total(std::span<const double> y_a,
                                 const std::vector<std::vector<double>>& y_ab);

// Jansen first-order estimator with a caller-supplied variance:
//   S_i = [ V̂ - (1/2N) sum_j (yB_j - yAB_i,j)^2 ] / V̂.
SensitivityEstimate jansen_first(std::span<const double> y_b,
                                 const std::vector<std::vector<double>>& y_ab,
                                 double variance);

// First-order index of an additive-in-x_i model from one trajectory:
// the population variance of the supplied trajectory outputs divided by
// the (global) output variance. Where the trajectory points come from is
// the caller's business.
double trajectory_variance_ratio(std::span<const double> y_trajectory, double variance);

// Single-trajectory first-order estimate on an equal-weight midpoint
// grid of grid_n points along axis i, all other coordinates fixed at
// `anchor`. For additive models the anchor does not matter.
struct Model;
double single_trajectory_first(const Model& model, std::size_t i,
                               std::span<const double> anchor, std::size_t grid_n,
                               double variance);

// Percentile bootstrap over design rows: resamples (yA, yB, yAB) jointly
// R times and recomputes both Jansen estimators.
struct BootstrapResult {
    std::vector<double> first_lo, first_hi;
    std::vector<double> total_lo, total_hi;
    bool degenerate = false;
};

BootstrapResult bootstrap_percentile(std::span<const double> y_a,
                                     std::span<const double> y_b,
                                     const std::vector<std::vector<double>>& y_ab,
                                     std::size_t resamples, double level,
                                     std::uint64_t seed);

}  // namespace gsa
