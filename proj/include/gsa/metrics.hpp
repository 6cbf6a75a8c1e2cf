#pragma once

#include <optional>
#include <span>
#include <vector>

namespace gsa {

// Mean absolute error between a reference index vector and p replicate
// estimates: (1/p) sum_v ( sum_i |T_i - That_i| / k ).
double mae(std::span<const double> reference,
           const std::vector<std::vector<double>>& replicates);

// Fraction of replicates whose induced importance ranking (descending
// estimate) contradicts the reference. A replicate fails if some pair
// the reference orders strictly is inverted by more than tie_tolerance;
// estimated ties within the tolerance never count as failures, so an
// exactly-zero estimate for a zero-variance input stays correct as long
// as nothing truly larger is ranked below it.
double prob_failure(std::span<const double> reference,
                    const std::vector<std::vector<double>>& replicate_estimates,
                    double tie_tolerance = 0.0);

// Ranks of a vector, rank 1 = largest value; ties broken by index.
std::vector<int> rank_descending(std::span<const double> values);

// Savage scores: rank j receives sum_{m=j}^{k} 1/m; input is a
// permutation of 1..k, output is ordered like the input items.
std::vector<double> savage_scores(std::span<const int> ranks);

// Pearson correlation; nullopt when either vector has zero variance.
std::optional<double> pearson(std::span<const double> a, std::span<const double> b);

// The delta performance measures: 1 = Pearson on raw values, 2 = Pearson
// on ranks, 3 = Pearson on Savage scores of the ranks. Requires k >= 3.
std::optional<double> performance_r(int delta, std::span<const double> reference,
                                    std::span<const double> estimate);

}  // namespace gsa
