#include "gsa/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gsa {

double mae(std::span<const double> reference,
           const std::vector<std::vector<double>>& replicates) {
    if (replicates.empty())
        throw std::invalid_argument("mae: replicate set is empty");
    const std::size_t k = reference.size();
    double total = 0.0;
    for (const auto& rep : replicates) {
        if (rep.size() != k)
            throw std::invalid_argument("mae: replicate length mismatch");
        double s = 0.0;
        for (std::size_t i = 0; i < k; ++i) s += std::abs(reference[i] - rep[i]);
        total += s / static_cast<double>(k);
    }
    return total / static_cast<double>(replicates.size());
}

double prob_failure(std::span<const double> reference,
                    const std::vector<std::vector<double>>& replicate_estimates,
                    double tie_tolerance) {
    if (replicate_estimates.empty())
        throw std::invalid_argument("prob_failure: replicate set is empty");
    const std::size_t k = reference.size();
    std::size_t failures = 0;
    for (const auto& est : replicate_estimates) {
        if (est.size() != k)
            throw std::invalid_argument("prob_failure: replicate length mismatch");
        bool failed = false;
        for (std::size_t i = 0; i < k && !failed; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (reference[i] > reference[j] && est[j] > est[i] + tie_tolerance) {
                    failed = true;
                    break;
                }
        failures += failed ? 1 : 0;
    }
    return static_cast<double>(failures) / static_cast<double>(replicate_estimates.size());
}

std::vector<int> rank_descending(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    std::vector<int> ranks(values.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        ranks[order[pos]] = static_cast<int>(pos) + 1;
    return ranks;
}

std::vector<double> savage_scores(std::span<const int> ranks) {
    const std::size_t k = ranks.size();
    std::vector<bool> seen(k, false);
    for (int r : ranks) {
        if (r < 1 || static_cast<std::size_t>(r) > k || seen[r - 1])
            throw std::invalid_argument("savage_scores: ranks must be a permutation of 1..k");
        seen[r - 1] = true;
    }
    // score(j) = sum_{m=j}^{k} 1/m, accumulated from the bottom rank up.
    std::vector<double> by_rank(k + 1, 0.0);
    double acc = 0.0;
    for (std::size_t m = k; m >= 1; --m) {
        acc += 1.0 / static_cast<double>(m);
        by_rank[m] = acc;
    }
    std::vector<double> out(k);
    for (std::size_t i = 0; i < k; ++i) out[i] = by_rank[ranks[i]];
    return out;
}

std::optional<double> pearson(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.size() < 2)
        throw std::invalid_argument("pearson: vectors must have equal length >= 2");
    const auto n = static_cast<double>(a.size());
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double saa = 0.0, sbb = 0.0, sab = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = a[i] - ma, db = b[i] - mb;
        saa += da * da;
        sbb += db * db;
        sab += da * db;
    }
    if (saa <= 0.0 || sbb <= 0.0 || !std::isfinite(saa) || !std::isfinite(sbb))
        return std::nullopt;
    return sab / std::sqrt(saa * sbb);
}

std::optional<double> performance_r(int delta, std::span<const double> reference,
                                    std::span<const double> estimate) {
    if (reference.size() != estimate.size() || reference.size() < 3)
        throw std::invalid_argument("performance_r: need equal lengths k >= 3");
    switch (delta) {
        case 1:
            return pearson(reference, estimate);
        case 2:
        case 3: {
            const auto rr = rank_descending(reference);
            const auto re = rank_descending(estimate);
            std::vector<double> xr, xe;
            if (delta == 2) {
                xr.assign(rr.begin(), rr.end());
                xe.assign(re.begin(), re.end());
            } else {
                xr = savage_scores(rr);
                xe = savage_scores(re);
            }
            return pearson(xr, xe);
        }
        default:
            throw std::invalid_argument("performance_r: delta must be 1, 2 or 3");
    }
}

}  // namespace gsa
