#include "gsa/bench.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gsa/distributions.hpp"
#include "gsa/metrics.hpp"
#include "gsa/parallel.hpp"
#include "gsa/rng.hpp"
#include "gsa/vars_estimators.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gsa::bench {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::uint64_t hash_row_params(const BenchmarkRow& row, std::uint64_t master_seed) {
    // delta only selects the scoring measure; keeping it out of the seed
    // means rows differing only in delta share their sample draws.
    std::uint64_t h = derive_seed(master_seed, "bench-row");
    h = derive_seed(h, static_cast<std::uint64_t>(row.n_star));
    h = derive_seed(h, static_cast<std::uint64_t>(std::llround(row.h * 1000.0)));
    h = derive_seed(h, static_cast<std::uint64_t>(row.k));
    h = derive_seed(h, static_cast<std::uint64_t>(row.eps));
    h = derive_seed(h, static_cast<std::uint64_t>(row.tau));
    h = derive_seed(h, static_cast<std::uint64_t>(row.phi));
    h = derive_seed(h, static_cast<std::uint64_t>(std::llround(row.k2 * 1000.0)));
    h = derive_seed(h, static_cast<std::uint64_t>(std::llround(row.k3 * 1000.0)));
    return h;
}

int bin_int(double u, int lo, int hi) {  // uniform over {lo..hi}
    const int levels = hi - lo + 1;
    int v = lo + static_cast<int>(u * levels);
    return v > hi ? hi : v;
}

double bin_grid(double u, double lo, double hi, double step) {
    const int levels = static_cast<int>(std::llround((hi - lo) / step)) + 1;
    int v = static_cast<int>(u * levels);
    if (v >= levels) v = levels - 1;
    return lo + step * v;
}

}  // namespace

const std::array<const char*, 9>& parameter_names() {
    static const std::array<const char*, 9> names = {
        "N_star", "h", "k", "eps", "tau", "phi", "k2", "k3", "delta"};
    return names;
}

long long BenchmarkRow::nt_vars() const {
    const auto grid = static_cast<long long>(std::llround(1.0 / h));
    return static_cast<long long>(n_star) * (static_cast<long long>(k) * (grid - 1) + 1);
}

long long BenchmarkRow::jansen_n() const {
    const auto n = std::llround(static_cast<double>(nt_vars()) / (k + 1));
    return n < 2 ? 2 : n;
}

BenchmarkRow row_from_point(std::span<const double> u, std::uint64_t master_seed,
                            const BenchConfig& config) {
    if (u.size() != 9)
        throw std::invalid_argument("row_from_point: expected 9 coordinates");
    BenchmarkRow row;
    row.n_star = bin_int(u[0], 3, 50);
    row.h = config.h_levels[bin_int(u[1], 0, 3)];
    row.k = bin_int(u[2], 3, 50);
    row.eps = bin_int(u[3], 1, 200);
    row.tau = bin_int(u[4], 1, 2);
    row.phi = bin_int(u[5], 1, 8);
    row.k2 = bin_grid(u[6], 0.5, 1.0, 0.05);
    row.k3 = bin_grid(u[7], 0.3, 1.0, 0.05);
    row.delta = bin_int(u[8], 1, 3);
    row.seed = hash_row_params(row, master_seed);
    return row;
}

std::vector<BenchmarkRow> sample_rows(std::size_t n, std::uint64_t master_seed,
                                      const BenchConfig& config) {
    if (n < 1)
        throw std::invalid_argument("sample_rows: n must be >= 1");
    const auto pts = sobol_points(n, 9, derive_seed(master_seed, "bench-rows"));
    std::vector<BenchmarkRow> rows;
    rows.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        rows.push_back(row_from_point(pts.row(r), master_seed, config));
        rows.back().id = static_cast<long long>(r);
    }
    return rows;
}

SampleMatrix sample_points(int tau, std::size_t n, std::size_t d, std::uint64_t seed) {
    if (tau == 1) return random_points(n, d, seed);
    if (tau == 2) return sobol_points(n, d, seed);
    throw std::invalid_argument("sample_points: tau must be 1 or 2");
}

PickFreezeOutputs pick_freeze_outputs(const Metafunction& mf, const SampleMatrix& a_t,
                                      const SampleMatrix& b_t, bool want_y_b) {
    const std::size_t n = a_t.rows();
    const std::size_t k = mf.dimension();

    // Bank values once per matrix entry; AB rows then recombine cached
    // values with a single column swap.
    SampleMatrix phi_a(n, k), phi_b(n, k);
    for (std::size_t r = 0; r < n; ++r) {
        mf.bank_values(a_t.row(r), phi_a.row(r));
        mf.bank_values(b_t.row(r), phi_b.row(r));
    }

    PickFreezeOutputs out;
    out.y_a.resize(n);
    for (std::size_t r = 0; r < n; ++r) out.y_a[r] = mf.eval_from_bank(phi_a.row(r));
    if (want_y_b) {
        out.y_b.resize(n);
        for (std::size_t r = 0; r < n; ++r) out.y_b[r] = mf.eval_from_bank(phi_b.row(r));
    }

    out.y_ab.assign(k, std::vector<double>(n));
    std::vector<double> phi(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t r = 0; r < n; ++r) {
            const auto row = phi_a.row(r);
            std::copy(row.begin(), row.end(), phi.begin());
            phi[i] = phi_b(r, i);
            out.y_ab[i][r] = mf.eval_from_bank(phi);
        }
    return out;
}

std::vector<double> star_outputs(const Metafunction& mf, const StarDesign& design,
                                 const SampleMatrix& transformed_points) {
    const std::size_t k = mf.dimension();
    std::vector<double> y(transformed_points.rows(), kNan);
    std::vector<double> phi_center(k), phi(k);
    for (std::size_t v = 0; v < design.n_star(); ++v) {
        const std::size_t center = design.center_rows[v];
        mf.bank_values(transformed_points.row(center), phi_center);
        y[center] = mf.eval_from_bank(phi_center);
        for (std::size_t i = 0; i < k; ++i) {
            for (const std::size_t r : design.section(v, i)) {
                if (r == center) continue;
                std::copy(phi_center.begin(), phi_center.end(), phi.begin());
                phi[i] = bank_eval(mf.input_functions()[i], transformed_points(r, i));
                y[r] = mf.eval_from_bank(phi);
            }
        }
    }
    return y;
}

RowResult run_row(const BenchmarkRow& row, const BenchConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();

    RowResult res;
    res.id = row.id;
    res.nt_vars = row.nt_vars();
    res.nt_jansen = row.nt_jansen();
    res.r_vars = kNan;
    res.r_jansen = kNan;

    const auto mf = Metafunction::build(static_cast<std::size_t>(row.k),
                                        static_cast<std::uint64_t>(row.eps), row.k2, row.k3);
    const auto dist = resolve_phi(row.phi, static_cast<std::size_t>(row.k),
                                  derive_seed(row.seed, "phi"));
    const auto k = static_cast<std::size_t>(row.k);

    // VARS-TO at the row's design size.
    const auto centers = sample_points(row.tau, static_cast<std::size_t>(row.n_star), k,
                                       derive_seed(row.seed, "centers"));
    const auto stars = build_stars(centers, row.h);
    const auto stars_t = transform_matrix(stars.points, dist, Exec::Serial);
    const auto y_stars = star_outputs(mf, stars, stars_t);
    const auto est_vars = vars_to(stars, y_stars);

    // Jansen total at the matched budget.
    const auto n_jansen = static_cast<std::size_t>(row.jansen_n());
    const auto base = sample_points(row.tau, n_jansen, 2 * k, derive_seed(row.seed, "base"));
    const auto design = build_ab(base);
    const auto a_t = transform_matrix(design.a, dist, Exec::Serial);
    const auto b_t = transform_matrix(design.b, dist, Exec::Serial);
    const auto jansen_out = pick_freeze_outputs(mf, a_t, b_t);
    const auto est_jansen = jansen_total(jansen_out.y_a, jansen_out.y_ab);

    // Shared reference truth: Jansen at the large base size, quasi-random.
    const auto truth_base = sobol_points(config.truth_n, 2 * k, derive_seed(row.seed, "truth"));
    const auto truth_design = build_ab(truth_base);
    const auto ta_t = transform_matrix(truth_design.a, dist, Exec::Serial);
    const auto tb_t = transform_matrix(truth_design.b, dist, Exec::Serial);
    const auto truth_out = pick_freeze_outputs(mf, ta_t, tb_t);
    const auto truth = jansen_total(truth_out.y_a, truth_out.y_ab);

    res.flag_vars = est_vars.degenerate || truth.degenerate;
    res.flag_jansen = est_jansen.degenerate || truth.degenerate;

    if (!res.flag_vars) {
        const auto r = performance_r(row.delta, truth.values, est_vars.values);
        if (r)
            res.r_vars = *r;
        else
            res.flag_vars = true;
    }
    if (!res.flag_jansen) {
        const auto r = performance_r(row.delta, truth.values, est_jansen.values);
        if (r)
            res.r_jansen = *r;
        else
            res.flag_jansen = true;
    }

    res.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return res;
}

std::vector<RowResult> run_all(const std::vector<BenchmarkRow>& rows, const BenchConfig& config,
                               const std::function<void(std::size_t, std::size_t)>& on_progress,
                               const std::function<void(const RowResult&)>& on_row) {
    if (rows.empty())
        throw std::invalid_argument("run_all: row set is empty");
    if (config.workers > 0) set_worker_count(config.workers);

    std::vector<RowResult> results(rows.size());
    const std::size_t chunk = 32;
    for (std::size_t begin = 0; begin < rows.size(); begin += chunk) {
        const std::size_t end = std::min(begin + chunk, rows.size());
        const auto n = static_cast<std::int64_t>(end - begin);
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t j = 0; j < n; ++j) {
            const std::size_t idx = begin + static_cast<std::size_t>(j);
            results[idx] = run_row(rows[idx], config);
        }
        // Flush the finished chunk in row order.
        if (on_row)
            for (std::size_t idx = begin; idx < end; ++idx) on_row(results[idx]);
        if (on_progress) on_progress(end, rows.size());
    }
    return results;
}

MetaResult meta_analysis(std::size_t n_base, std::uint64_t master_seed, const BenchConfig& config,
                         const std::function<void(std::size_t, std::size_t)>& on_progress) {
    if (n_base < 2 || (n_base & (n_base - 1)) != 0)
        throw std::invalid_argument("meta_analysis: n_base must be a power of two");

    const auto base = sobol_points(n_base, 18, derive_seed(master_seed, "meta-base"));
    const auto design = build_ab(base);

    // One evaluation bundle: rows for A, B, then the nine AB designs.
    std::vector<BenchmarkRow> rows;
    rows.reserve(n_base * 11);
    std::vector<double> point(9);
    const auto push_point = [&](std::span<const double> u) {
        rows.push_back(row_from_point(u, master_seed, config));
        rows.back().id = static_cast<long long>(rows.size() - 1);
    };
    for (std::size_t r = 0; r < n_base; ++r) push_point(design.a.row(r));
    for (std::size_t r = 0; r < n_base; ++r) push_point(design.b.row(r));
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t r = 0; r < n_base; ++r) {
            for (std::size_t c = 0; c < 9; ++c) point[c] = design.ab_value(i, r, c);
            push_point(point);
        }

    const auto results = run_all(rows, config, on_progress);

    MetaResult out;
    out.total_rows = rows.size();
    const auto r_of = [&](std::size_t idx) {
        const auto& res = results[idx];
        if (res.flag_vars || !std::isfinite(res.r_vars)) {
            ++out.flagged_rows;
            return 0.0;  // flagged rows carry no recovered signal
        }
        return res.r_vars;
    };

    std::vector<double> y_a(n_base), y_b(n_base);
    std::vector<std::vector<double>> y_ab(9, std::vector<double>(n_base));
    for (std::size_t r = 0; r < n_base; ++r) y_a[r] = r_of(r);
    for (std::size_t r = 0; r < n_base; ++r) y_b[r] = r_of(n_base + r);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t r = 0; r < n_base; ++r) y_ab[i][r] = r_of((2 + i) * n_base + r);

    std::vector<double> pooled(y_a);
    pooled.insert(pooled.end(), y_b.begin(), y_b.end());
    const double variance = population_variance(pooled);

    const auto total = jansen_total(y_a, y_ab);
    const auto first = jansen_first(y_b, y_ab, variance);
    const auto boot = bootstrap_percentile(y_a, y_b, y_ab, 500, 0.95,
                                           derive_seed(master_seed, "meta-boot"));

    for (const char* name : parameter_names()) out.parameter.emplace_back(name);
    out.first = first.values;
    out.total = total.values;
    out.first_lo = boot.first_lo;
    out.first_hi = boot.first_hi;
    out.total_lo = boot.total_lo;
    out.total_hi = boot.total_hi;
    return out;
}

}  // namespace gsa::bench
