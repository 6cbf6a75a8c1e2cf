#include "gsa/vars_estimators.hpp"

#include <cmath>
#include <stdexcept>

namespace gsa {

std::vector<LagStats> cross_section_stats(std::span<const double> y, double h, double max_lag) {
    const std::size_t n = y.size();
    const auto max_m = static_cast<std::size_t>(std::floor(max_lag / h + 1e-9));
    std::vector<LagStats> out;
    for (std::size_t m = 1; m <= max_m && m < n; ++m) {
        LagStats s;
        s.pairs = n - m;
        double sq = 0.0, prod = 0.0, head = 0.0, tail = 0.0;
        for (std::size_t j = 0; j + m < n; ++j) {
            const double a = y[j], b = y[j + m];
            sq += (a - b) * (a - b);
            prod += a * b;
            head += a;
            tail += b;
        }
        const auto np = static_cast<double>(s.pairs);
        s.mean_head = head / np;
        s.mean_tail = tail / np;
        s.gamma = sq / (2.0 * np);
        s.cov = prod / np - s.mean_head * s.mean_tail;
        out.push_back(s);
    }
    return out;
}

VariogramCurve pooled_variogram(const StarDesign& design, std::span<const double> outputs,
                                std::size_t input) {
    if (design.n_star() == 0)
        throw std::invalid_argument("pooled_variogram: empty design");
    if (outputs.size() != design.points.rows())
        throw std::invalid_argument("pooled_variogram: outputs not aligned with design points");

    const std::size_t len = design.section_length();
    const auto max_m = static_cast<std::size_t>(std::floor(kMaxLag / design.h + 1e-9));
    const std::size_t n_lags = std::min(max_m, len - 1);

    VariogramCurve curve;
    curve.input = input;
    curve.lags.resize(n_lags);
    curve.gamma.assign(n_lags, 0.0);
    curve.cov.assign(n_lags, 0.0);
    curve.mean_head.assign(n_lags, 0.0);
    curve.mean_tail.assign(n_lags, 0.0);
    curve.pairs.assign(n_lags, 0);
    for (std::size_t m = 1; m <= n_lags; ++m)
        curve.lags[m - 1] = static_cast<double>(m) * design.h;

    std::vector<double> y(len);
    for (std::size_t v = 0; v < design.n_star(); ++v) {
        const auto& section = design.section(v, input);
        for (std::size_t j = 0; j < len; ++j) y[j] = outputs[section[j]];
        const auto stats = cross_section_stats(y, design.h, kMaxLag);
        for (std::size_t m = 0; m < stats.size(); ++m) {
            const auto w = static_cast<double>(stats[m].pairs);
            curve.gamma[m] += w * stats[m].gamma;
            curve.cov[m] += w * stats[m].cov;
            curve.mean_head[m] += w * stats[m].mean_head;
            curve.mean_tail[m] += w * stats[m].mean_tail;
            curve.pairs[m] += stats[m].pairs;
        }
    }
    for (std::size_t m = 0; m < n_lags; ++m) {
        const auto w = static_cast<double>(curve.pairs[m]);
        curve.gamma[m] /= w;
        curve.cov[m] /= w;
        curve.mean_head[m] /= w;
        curve.mean_tail[m] /= w;
    }
    return curve;
}

double ivars(const VariogramCurve& curve, double H) {
    if (curve.lags.empty() || curve.lags.front() > H + 1e-12)
        throw std::invalid_argument(
            "ivars: no lag within [0, H]; a finer h is needed for this H");

    double integral = 0.0;
    double x_prev = 0.0, g_prev = 0.0;  // gamma(0) = 0
    std::size_t m = 0;
    for (; m < curve.lags.size() && curve.lags[m] <= H + 1e-12; ++m) {
        integral += 0.5 * (g_prev + curve.gamma[m]) * (curve.lags[m] - x_prev);
        x_prev = curve.lags[m];
        g_prev = curve.gamma[m];
    }
    if (x_prev < H - 1e-12) {
        if (m < curve.lags.size()) {
            // H falls between two lags: integrate to the interpolated value.
            const double t = (H - x_prev) / (curve.lags[m] - x_prev);
            const double g_h = g_prev + t * (curve.gamma[m] - g_prev);
            integral += 0.5 * (g_prev + g_h) * (H - x_prev);
        } else {
            // Tail beyond the last lag: extend flat.
            integral += g_prev * (H - x_prev);
        }
    }
    return integral;
}

namespace {

// Pooled per-lag (gamma + cov) with the covariogram taken from the
// variance relation C = V_section - gamma; returns the ratio list
// divided by `variance`.
std::vector<double> per_lag_ratios(const StarDesign& design, std::span<const double> outputs,
                                   std::size_t input, double variance) {
    const std::size_t len = design.section_length();
    const auto max_m = static_cast<std::size_t>(std::floor(kMaxLag / design.h + 1e-9));
    const std::size_t n_lags = std::min(max_m, len - 1);

    std::vector<double> num(n_lags, 0.0);
    std::vector<double> wsum(n_lags, 0.0);
    std::vector<double> y(len);
    for (std::size_t v = 0; v < design.n_star(); ++v) {
        const auto& section = design.section(v, input);
        for (std::size_t j = 0; j < len; ++j) y[j] = outputs[section[j]];
        const double v_section = population_variance(y);
        for (std::size_t m = 1; m <= n_lags; ++m) {
            // gamma + (V_section - gamma) telescopes to V_section; keep the
            // per-lag weighting explicit so lag coverage stays visible.
            const auto w = static_cast<double>(len - m);
            num[m - 1] += w * v_section;
            wsum[m - 1] += w;
        }
    }
    std::vector<double> ratios(n_lags);
    for (std::size_t m = 0; m < n_lags; ++m) ratios[m] = num[m] / wsum[m] / variance;
    return ratios;
}

}  // namespace

std::vector<double> vars_to_per_lag(const StarDesign& design, std::span<const double> outputs,
                                    std::size_t input) {
    const double variance = population_variance(outputs);
    if (!(std::isfinite(variance) && variance > 0.0))
        throw std::invalid_argument("vars_to_per_lag: degenerate output variance");
    return per_lag_ratios(design, outputs, input, variance);
}

SensitivityEstimate vars_to(const StarDesign& design, std::span<const double> outputs) {
    if (design.n_star() == 0)
        throw std::invalid_argument("vars_to: empty design");
    if (outputs.size() != design.points.rows())
        throw std::invalid_argument("vars_to: outputs not aligned with design points");

    SensitivityEstimate est;
    est.method = "vars-to";
    est.n_evaluations = static_cast<long long>(design.points.rows());
    est.variance = population_variance(outputs);
    est.values.assign(design.k(), 0.0);
    est.clipped.assign(design.k(), 0.0);

    if (!(std::isfinite(est.variance) && est.variance > 0.0)) {
        est.degenerate = true;
        return est;
    }
    for (std::size_t i = 0; i < design.k(); ++i) {
        const auto ratios = per_lag_ratios(design, outputs, i, est.variance);
        double s = 0.0;
        for (double r : ratios) s += r;
        est.values[i] = s / static_cast<double>(ratios.size());
        est.clipped[i] = std::min(1.0, std::max(0.0, est.values[i]));
    }
    return est;
}

}  // namespace gsa
