#pragma once

#include <span>
#include <vector>

#include "gsa/sampling.hpp"
#include "gsa/sobol_estimators.hpp"

namespace gsa {

// Per-lag statistics of one cross section, population-normalized. With
// population means/variances the closure identity
//   gamma + cov = (s2_head + s2_tail)/2 + (m_head - m_tail)^2 / 2
// holds to machine precision; see the property tests.
struct LagStats {
    double gamma = 0.0;       // (1/2N) sum (y_j - y_{j+m})^2
    double cov = 0.0;         // (1/N) sum y_j y_{j+m} - m_head m_tail
    double mean_head = 0.0;
    double mean_tail = 0.0;
    std::size_t pairs = 0;
};

// Stats for lags m*h, m = 1..floor(max_lag/h), pairs (j, j+m); lags that
// exceed the section length are omitted.
std::vector<LagStats> cross_section_stats(std::span<const double> y, double h, double max_lag);

// Directional variogram of one input pooled over the stars of a design,
// pair-count-weighted per lag.
struct VariogramCurve {
    std::size_t input = 0;
    std::vector<double> lags;        // strictly increasing multiples of h, <= 0.5
    std::vector<double> gamma;
    std::vector<double> cov;
    std::vector<double> mean_head;
    std::vector<double> mean_tail;
    std::vector<std::size_t> pairs;  // pooled pair count per lag
};

VariogramCurve pooled_variogram(const StarDesign& design, std::span<const double> outputs,
                                std::size_t input);

// Integrated variogram over [0, H] by the trapezoid rule with
// gamma(0) = 0. H must be reachable: at least one lag <= H. If H falls
// between lags the curve is interpolated linearly; beyond the last lag
// (by less than one lag spacing) it is extended flat.
double ivars(const VariogramCurve& curve, double H);

// VARS total-order index. Per section and lag the covariogram entering
// the index is taken from the variance relation
//   C_section(h) = V(y | section) - gamma_section(h)
// rather than from the product-moment pair covariance: on a finite
// cross section the latter is biased by range restriction (its head and
// tail windows do not span the section), and the relation above is the
// one that makes per-lag estimates consistent. Index values are the
// per-lag ratios averaged over all usable lags (<= 0.5).
SensitivityEstimate vars_to(const StarDesign& design, std::span<const double> outputs);

// Per-lag VARS-TO ratios for one input, same covariogram convention.
std::vector<double> vars_to_per_lag(const StarDesign& design, std::span<const double> outputs,
                                    std::size_t input);

// Maximum meaningful lag: one half of the factor range.
inline constexpr double kMaxLag = 0.5;

}  // namespace gsa
