// gsa: global sensitivity analysis toolkit CLI.
//
// Subcommands: estimate | benchmark | meta | replicate. Every run is
// reproducible from its flags (or the config file; flags override), and
// the resolved configuration is echoed into the output directory.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gsa/bench.hpp"
#include "gsa/csv.hpp"
#include "gsa/distributions.hpp"
#include "gsa/metrics.hpp"
#include "gsa/models.hpp"
#include "gsa/parallel.hpp"
#include "gsa/replicate.hpp"
#include "gsa/rng.hpp"
#include "gsa/sampling.hpp"
#include "gsa/sobol_estimators.hpp"
#include "gsa/vars_estimators.hpp"

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

struct GlobalOpts {
    std::uint64_t seed = 1;
    std::string out = "out";
    int workers = 0;
};

void prepare_out_dir(const CLI::App& app, const GlobalOpts& g) {
    std::filesystem::create_directories(g.out);
    std::ofstream cfg(g.out + "/config.effective");
    cfg << app.config_to_str(true, true);
}

gsa::Model make_model(const std::string& name, std::size_t k, std::uint64_t eps, double k2,
                      double k3) {
    if (name == "sixdim") return gsa::sixdim_model();
    if (name == "liu") return gsa::liu_model();
    if (name == "metafunction")
        return gsa::Metafunction::build(k, eps, k2, k3).as_model();
    throw CLI::ValidationError("--model", "unknown model: " + name);
}

void write_estimate(gsa::CsvWriter& csv, const gsa::SensitivityEstimate& est,
                    const std::vector<double>& ci_lo = {}, const std::vector<double>& ci_hi = {}) {
    for (std::size_t i = 0; i < est.values.size(); ++i)
        csv.write(est.method, i + 1, est.values[i], est.clipped[i], est.n_evaluations,
                  est.variance, est.degenerate ? 1 : 0,
                  ci_lo.empty() ? kNan : ci_lo[i], ci_hi.empty() ? kNan : ci_hi[i]);
}

void write_variogram(const std::string& path, const std::vector<gsa::VariogramCurve>& curves) {
    gsa::CsvWriter csv(path, {"input", "lag", "gamma", "cov", "pairs"});
    for (const auto& c : curves)
        for (std::size_t m = 0; m < c.lags.size(); ++m)
            csv.write(c.input + 1, c.lags[m], c.gamma[m], c.cov[m], c.pairs[m]);
}

int cmd_estimate(const CLI::App& app, const GlobalOpts& g, const std::string& model_name,
                 const std::string& method, std::size_t n, int n_star, double h,
                 std::size_t grid_n, std::size_t k, std::uint64_t eps, double k2, double k3,
                 int tau, int phi, std::size_t bootstrap_r) {
    prepare_out_dir(app, g);
    const auto model = make_model(model_name, k, eps, k2, k3);
    const bool is_meta = model_name == "metafunction";
    const auto dist = gsa::resolve_phi(is_meta ? phi : 1, model.dimension,
                                       gsa::derive_seed(g.seed, "phi"));

    gsa::CsvWriter csv(g.out + "/estimate.csv",
                       {"method", "input", "value", "clipped", "n_evals", "variance",
                        "degenerate", "ci_lo", "ci_hi"});

    const auto eval_all = [&](const gsa::SampleMatrix& pts) {
        gsa::SampleMatrix t = is_meta ? gsa::transform_matrix(pts, dist) : pts;
        return gsa::evaluate_rows(t, model.evaluator);
    };

    if (method == "jansen") {
        const auto base = gsa::bench::sample_points(tau, n, 2 * model.dimension,
                                                    gsa::derive_seed(g.seed, "base"));
        const auto design = gsa::build_ab(base);
        const auto a_t = is_meta ? gsa::transform_matrix(design.a, dist) : design.a;
        const auto b_t = is_meta ? gsa::transform_matrix(design.b, dist) : design.b;
        const auto y_a = gsa::evaluate_rows(a_t, model.evaluator);
        const auto y_b = gsa::evaluate_rows(b_t, model.evaluator);
        std::vector<std::vector<double>> y_ab(model.dimension);
        std::vector<double> point(model.dimension);
        for (std::size_t i = 0; i < model.dimension; ++i) {
            y_ab[i].resize(n);
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < model.dimension; ++c)
                    point[c] = c == i ? b_t(r, c) : a_t(r, c);
                y_ab[i][r] = model(point);
            }
        }
        const auto total = gsa::jansen_total(y_a, y_ab);
        std::vector<double> pooled(y_a);
        pooled.insert(pooled.end(), y_b.begin(), y_b.end());
        const auto first = gsa::jansen_first(y_b, y_ab, gsa::population_variance(pooled));
        if (bootstrap_r > 0) {
            const auto boot = gsa::bootstrap_percentile(y_a, y_b, y_ab, bootstrap_r, 0.95,
                                                        gsa::derive_seed(g.seed, "boot"));
            write_estimate(csv, total, boot.total_lo, boot.total_hi);
            write_estimate(csv, first, boot.first_lo, boot.first_hi);
        } else {
            write_estimate(csv, total);
            write_estimate(csv, first);
        }
        return 0;
    }

    if (method == "vars-to" || method == "ivars") {
        const auto centers = gsa::bench::sample_points(
            tau, static_cast<std::size_t>(n_star), model.dimension,
            gsa::derive_seed(g.seed, "centers"));
        const auto stars = gsa::build_stars(centers, h);
        const auto y = eval_all(stars.points);

        std::vector<gsa::VariogramCurve> curves;
        for (std::size_t i = 0; i < model.dimension; ++i)
            curves.push_back(gsa::pooled_variogram(stars, y, i));
        write_variogram(g.out + "/variogram.csv", curves);

        if (method == "vars-to") {
            write_estimate(csv, gsa::vars_to(stars, y));
            return 0;
        }
        for (const double H : {0.1, 0.3, 0.5}) {
            gsa::SensitivityEstimate est;
            est.method = "ivars" + std::to_string(static_cast<int>(std::llround(H * 100)));
            est.variance = gsa::population_variance(y);
            est.n_evaluations = static_cast<long long>(stars.points.rows());
            for (const auto& c : curves) est.values.push_back(gsa::ivars(c, H));
            est.clipped = est.values;
            write_estimate(csv, est);
        }
        return 0;
    }

    if (method == "single-trajectory") {
        double variance;
        if (model_name == "sixdim") {
            variance = gsa::sixdim_analytic().total_variance;
        } else {
            const auto sample = gsa::sobol_points(4096, model.dimension,
                                                  gsa::derive_seed(g.seed, "variance"));
            variance = gsa::population_variance(eval_all(sample));
        }
        const std::vector<double> anchor(model.dimension, 0.5);
        gsa::SensitivityEstimate est;
        est.method = "single-trajectory";
        est.variance = variance;
        est.n_evaluations = static_cast<long long>(grid_n * model.dimension);
        for (std::size_t i = 0; i < model.dimension; ++i)
            est.values.push_back(
                gsa::single_trajectory_first(model, i, anchor, grid_n, variance));
        est.clipped.resize(est.values.size());
        for (std::size_t i = 0; i < est.values.size(); ++i)
            est.clipped[i] = std::min(1.0, std::max(0.0, est.values[i]));
        write_estimate(csv, est);
        return 0;
    }

    throw CLI::ValidationError("--method", "unknown method: " + method);
}

int cmd_benchmark(const CLI::App& app, const GlobalOpts& g, std::size_t rows_n,
                  std::size_t truth_n, bool sm_h_levels) {
    prepare_out_dir(app, g);
    gsa::bench::BenchConfig config;
    config.truth_n = truth_n;
    config.workers = g.workers;
    if (sm_h_levels) config.h_levels = {0.02, 0.05, 0.1, 0.2};

    const auto rows = gsa::bench::sample_rows(rows_n, g.seed, config);

    gsa::CsvWriter csv(g.out + "/results.csv",
                       {"row", "N_star", "h", "k", "eps", "tau", "phi", "k2", "k3", "delta",
                        "Nt_vars", "Nt_jansen", "r_vars", "r_jansen", "flag_vars",
                        "flag_jansen"});
    gsa::CsvWriter times(g.out + "/timings.csv", {"row", "wall_ms"});

    std::size_t flagged = 0;
    const auto results = gsa::bench::run_all(
        rows, config,
        [&](std::size_t done, std::size_t total) {
            std::cerr << "rows " << done << "/" << total << "\n";
            csv.flush();
        },
        [&](const gsa::bench::RowResult& res) {
            const auto& row = rows[res.id];
            csv.write(res.id, row.n_star, row.h, row.k, row.eps, row.tau, row.phi, row.k2,
                      row.k3, row.delta, res.nt_vars, res.nt_jansen, res.r_vars, res.r_jansen,
                      res.flag_vars ? 1 : 0, res.flag_jansen ? 1 : 0);
            times.write(res.id, res.wall_ms);
            if (res.flag_vars || res.flag_jansen) ++flagged;
        });

    if (flagged > 0)
        std::cerr << "warning: " << flagged << " of " << results.size()
                  << " rows carry degenerate flags\n";
    return results.empty() ? 1 : 0;
}

int cmd_meta(const CLI::App& app, const GlobalOpts& g, std::size_t n_base, std::size_t truth_n,
             bool sm_h_levels) {
    prepare_out_dir(app, g);
    gsa::bench::BenchConfig config;
    config.truth_n = truth_n;
    config.workers = g.workers;
    if (sm_h_levels) config.h_levels = {0.02, 0.05, 0.1, 0.2};

    const auto meta = gsa::bench::meta_analysis(
        n_base, g.seed, config,
        [](std::size_t done, std::size_t total) {
            if (done % 1024 == 0 || done == total)
                std::cerr << "rows " << done << "/" << total << "\n";
        });

    gsa::CsvWriter csv(g.out + "/meta.csv",
                       {"parameter", "Si", "Si_lo", "Si_hi", "Ti", "Ti_lo", "Ti_hi"});
    for (std::size_t i = 0; i < meta.parameter.size(); ++i)
        csv.write(meta.parameter[i], meta.first[i], meta.first_lo[i], meta.first_hi[i],
                  meta.total[i], meta.total_lo[i], meta.total_hi[i]);
    std::cerr << meta.flagged_rows << " of " << meta.total_rows << " rows flagged\n";
    return 0;
}

int cmd_replicate(const CLI::App& app, const GlobalOpts& g, const std::string& figure,
                  std::size_t replicates, std::size_t p, std::size_t rows_n,
                  std::size_t truth_n) {
    prepare_out_dir(app, g);
    if (figure == "fig4a") {
        const auto table = gsa::replicate::fig4a_pf({8, 16, 32, 64, 128}, replicates, g.seed);
        gsa::CsvWriter csv(g.out + "/fig4a.csv", {"traj_points", "Nt", "pf", "mean_vhat"});
        for (const auto& row : table)
            csv.write(row.traj_points, row.n_t, row.pf, row.mean_sample_variance);
        return 0;
    }
    if (figure == "fig4b") {
        const auto table = gsa::replicate::fig4b_mae({16, 32, 64, 128, 256}, p, g.seed);
        gsa::CsvWriter csv(g.out + "/fig4b.csv",
                           {"traj_points", "Nt_single", "Nt_vars", "N_star", "mae_single",
                            "mae_vars"});
        for (const auto& row : table)
            csv.write(row.traj_points, row.n_t_single, row.n_t_vars, row.n_star,
                      row.mae_single, row.mae_vars);
        return 0;
    }
    if (figure == "fig5" || figure == "fig6") {
        // Scatter/histogram source: a benchmark sweep at the requested size.
        return cmd_benchmark(app, g, rows_n, truth_n, false);
    }
    throw CLI::ValidationError("--figure", "unknown figure tag: " + figure);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Variogram- and variance-based global sensitivity analysis toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a config file");

    GlobalOpts g;
    app.add_option("--seed", g.seed, "Master seed")->capture_default_str();
    app.add_option("--out", g.out, "Output directory")->capture_default_str();
    app.add_option("--workers", g.workers, "Worker threads (0 = all)")->capture_default_str();

    // estimate
    auto* est = app.add_subcommand("estimate", "Estimate sensitivity indices on a model");
    std::string model_name = "sixdim", method = "jansen";
    std::size_t n = 1024, grid_n = 10000, k = 10, bootstrap_r = 0;
    std::uint64_t eps = 1;
    double k2 = 0.5, k3 = 0.3, h = 0.1;
    int n_star = 50, tau = 2, phi = 1;
    est->add_option("--model", model_name, "sixdim | liu | metafunction")->capture_default_str();
    est->add_option("--method", method, "jansen | vars-to | single-trajectory | ivars")
        ->capture_default_str();
    est->add_option("--n", n, "Base rows for jansen")->capture_default_str();
    est->add_option("--nstar", n_star, "Star centers for vars-to/ivars")->capture_default_str();
    est->add_option("--h", h, "Cross-section spacing")->capture_default_str();
    est->add_option("--grid", grid_n, "Trajectory grid points")->capture_default_str();
    est->add_option("--k", k, "Metafunction dimension")->capture_default_str();
    est->add_option("--eps", eps, "Metafunction seed")->capture_default_str();
    est->add_option("--k2", k2, "Active pairwise fraction")->capture_default_str();
    est->add_option("--k3", k3, "Active three-wise fraction")->capture_default_str();
    est->add_option("--tau", tau, "Sampler: 1 random, 2 quasi-random")->capture_default_str();
    est->add_option("--phi", phi, "Distribution code (metafunction only)")->capture_default_str();
    est->add_option("--bootstrap", bootstrap_r, "Bootstrap resamples for CIs (jansen)")
        ->capture_default_str();

    // benchmark
    auto* ben = app.add_subcommand("benchmark", "Run the randomized estimator comparison");
    std::size_t rows_n = 128, truth_n = 4096;
    bool sm_h = false;
    ben->add_option("--rows", rows_n, "Benchmark rows")->check(CLI::PositiveNumber)
        ->capture_default_str();
    ben->add_option("--truth-n", truth_n, "Reference-truth base rows")->capture_default_str();
    ben->add_flag("--sm-h-levels", sm_h, "Use the {0.02,0.05,0.1,0.2} h set");

    // meta
    auto* met = app.add_subcommand("meta", "Sobol' meta-analysis of the benchmark parameters");
    std::size_t n_base = 1024, meta_truth_n = 4096;
    bool meta_sm_h = false;
    met->add_option("--base", n_base, "Pick-freeze base rows (power of two)")
        ->capture_default_str();
    met->add_option("--truth-n", meta_truth_n, "Reference-truth base rows")
        ->capture_default_str();
    met->add_flag("--sm-h-levels", meta_sm_h, "Use the {0.02,0.05,0.1,0.2} h set");

    // replicate
    auto* rep = app.add_subcommand("replicate", "Reproduce plot-source tables");
    std::string figure = "fig4a";
    std::size_t replicates = 500, p = 50, rep_rows = 128, rep_truth = 4096;
    rep->add_option("--figure", figure, "fig4a | fig4b | fig5 | fig6")->required();
    rep->add_option("--replicates", replicates, "Replicates for fig4a")->capture_default_str();
    rep->add_option("--p", p, "Replicates for fig4b")->capture_default_str();
    rep->add_option("--rows", rep_rows, "Rows for fig5/fig6")->capture_default_str();
    rep->add_option("--truth-n", rep_truth, "Reference-truth base rows for fig5/fig6")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    gsa::set_worker_count(g.workers);

    try {
        if (est->parsed())
            return cmd_estimate(app, g, model_name, method, n, n_star, h, grid_n, k, eps, k2,
                                k3, tau, phi, bootstrap_r);
        if (ben->parsed()) return cmd_benchmark(app, g, rows_n, truth_n, sm_h);
        if (met->parsed()) return cmd_meta(app, g, n_base, meta_truth_n, meta_sm_h);
        if (rep->parsed())
            return cmd_replicate(app, g, figure, replicates, p, rep_rows, rep_truth);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
