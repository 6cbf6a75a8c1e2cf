#include "gsa/sobol_estimators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gsa/models.hpp"
#include "gsa/rng.hpp"

namespace gsa {

namespace {

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

void fill_clipped(SensitivityEstimate& est) {
    est.clipped.resize(est.values.size());
    for (std::size_t i = 0; i < est.values.size(); ++i) est.clipped[i] = clamp01(est.values[i]);
}

bool usable_variance(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

double mean_of(std::span<const double> y) {
    double s = 0.0;
    for (double v : y) s += v;
    return s / static_cast<double>(y.size());
}

double population_variance(std::span<const double> y) {
    // Constant inputs short-circuit to an exact zero; summation rounding
    // would otherwise leave ~1e-24 residue, and ignored-input indices are
    // contracted to be exactly zero.
    bool constant = true;
    for (double v : y)
        if (v != y.front()) {
            constant = false;
            break;
        }
    if (constant) return 0.0;
    const double m = mean_of(y);
    double s = 0.0;
    for (double v : y) s += (v - m) * (v - m);
    return s / static_cast<double>(y.size());
}

SensitivityEstimate jansen_total(std::span<const double> y_a,
                                 const std::vector<std::vector<double>>& y_ab) {
    const std::size_t n = y_a.size();
    if (n < 2)
        throw std::invalid_argument("jansen_total: need at least 2 rows");
    for (const auto& col : y_ab)
        if (col.size() != n)
            throw std::invalid_argument("jansen_total: yAB length mismatch");

    SensitivityEstimate est;
    est.method = "jansen-total";
    est.variance = population_variance(y_a);
    est.n_evaluations = static_cast<long long>(n * (y_ab.size() + 1));
    est.values.resize(y_ab.size(), 0.0);

    if (!usable_variance(est.variance)) {
        est.degenerate = true;
        fill_clipped(est);
        return est;
    }
    for (std::size_t i = 0; i < y_ab.size(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double d = y_a[j] - y_ab[i][j];
            s += d * d;
        }
        est.values[i] = s / (2.0 * static_cast<double>(n)) / est.variance;
    }
    fill_clipped(est);
    return est;
}

SensitivityEstimate jansen_first(std::span<const double> y_b,
                                 const std::vector<std::vector<double>>& y_ab,
                                 double variance) {
    const std::size_t n = y_b.size();
    if (n < 2)
        throw std::invalid_argument("jansen_first: need at least 2 rows");
    for (const auto& col : y_ab)
        if (col.size() != n)
            throw std::invalid_argument("jansen_first: yAB length mismatch");

    SensitivityEstimate est;
    est.method = "jansen-first";
    est.variance = variance;
    est.n_evaluations = static_cast<long long>(n * (y_ab.size() + 1));
    est.values.resize(y_ab.size(), 0.0);

    if (!usable_variance(variance)) {
        est.degenerate = true;
        fill_clipped(est);
        return est;
    }
    for (std::size_t i = 0; i < y_ab.size(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double d = y_b[j] - y_ab[i][j];
            s += d * d;
        }
        est.values[i] = (variance - s / (2.0 * static_cast<double>(n))) / variance;
    }
    fill_clipped(est);
    return est;
}

double trajectory_variance_ratio(std::span<const double> y_trajectory, double variance) {
    if (!usable_variance(variance))
        throw std::invalid_argument("trajectory_variance_ratio: variance must be positive");
    return population_variance(y_trajectory) / variance;
}

double single_trajectory_first(const Model& model, std::size_t i,
                               std::span<const double> anchor, std::size_t grid_n,
                               double variance) {
    if (grid_n < 8)
        throw std::invalid_argument("single_trajectory_first: grid_n must be >= 8");
    if (anchor.size() != model.dimension)
        throw std::invalid_argument("single_trajectory_first: anchor dimension mismatch");

    std::vector<double> point(anchor.begin(), anchor.end());
    std::vector<double> y(grid_n);
    for (std::size_t j = 0; j < grid_n; ++j) {
        point[i] = (static_cast<double>(j) + 0.5) / static_cast<double>(grid_n);
        y[j] = model(point);
    }
    return trajectory_variance_ratio(y, variance);
}

BootstrapResult bootstrap_percentile(std::span<const double> y_a,
                                     std::span<const double> y_b,
                                     const std::vector<std::vector<double>>& y_ab,
                                     std::size_t resamples, double level,
                                     std::uint64_t seed) {
    if (resamples < 100)
        throw std::invalid_argument("bootstrap_percentile: need at least 100 resamples");
    if (!(level > 0.0 && level < 1.0))
        throw std::invalid_argument("bootstrap_percentile: level must lie in (0, 1)");

    const std::size_t n = y_a.size();
    const std::size_t k = y_ab.size();
    CounterRng rng(derive_seed(seed, "bootstrap"));

    std::vector<std::vector<double>> first(k), total(k);
    for (auto& v : first) v.reserve(resamples);
    for (auto& v : total) v.reserve(resamples);

    std::vector<std::size_t> idx(n);
    std::vector<double> ra(n), rb(n);
    std::vector<std::vector<double>> rab(k, std::vector<double>(n));

    BootstrapResult out;
    constexpr int kMaxRetries = 100;

    for (std::size_t r = 0; r < resamples; ++r) {
        bool ok = false;
        for (int attempt = 0; attempt < kMaxRetries && !ok; ++attempt) {
            for (std::size_t j = 0; j < n; ++j) idx[j] = rng.next_below(n);
            for (std::size_t j = 0; j < n; ++j) {
                ra[j] = y_a[idx[j]];
                rb[j] = y_b[idx[j]];
                for (std::size_t i = 0; i < k; ++i) rab[i][j] = y_ab[i][idx[j]];
            }
            const double va = population_variance(ra);
            if (!usable_variance(va)) continue;  // degenerate resample: redraw
            const auto et = jansen_total(ra, rab);
            const auto ef = jansen_first(rb, rab, va);
            for (std::size_t i = 0; i < k; ++i) {
                total[i].push_back(et.values[i]);
                first[i].push_back(ef.values[i]);
            }
            ok = true;
        }
        if (!ok) {
            out.degenerate = true;
            break;
        }
    }

    const auto percentile = [](std::vector<double> v, double q) {
        std::sort(v.begin(), v.end());
        const double pos = q * static_cast<double>(v.size() - 1);
        const auto lo = static_cast<std::size_t>(std::floor(pos));
        const auto hi = static_cast<std::size_t>(std::ceil(pos));
        const double w = pos - static_cast<double>(lo);
        return (1.0 - w) * v[lo] + w * v[hi];
    };

    const double q_lo = (1.0 - level) / 2.0;
    const double q_hi = 1.0 - q_lo;
    out.first_lo.resize(k);
    out.first_hi.resize(k);
    out.total_lo.resize(k);
    out.total_hi.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (first[i].empty()) {
            out.degenerate = true;
            break;
        }
        out.first_lo[i] = percentile(first[i], q_lo);
        out.first_hi[i] = percentile(first[i], q_hi);
        out.total_lo[i] = percentile(total[i], q_lo);
        out.total_hi[i] = percentile(total[i], q_hi);
    }
    return out;
}

}  // namespace gsa
