#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gsa/models.hpp"
#include "gsa/sampling.hpp"
#include "gsa/sobol_estimators.hpp"

namespace gsa::bench {

// One sampled point of the 9-parameter benchmark space. The seed is
// derived from the parameter values (plus the master seed), never from
// the row position: the whole row result must be a pure function of the
// parameters so that pick-freeze designs over them stay meaningful.
struct BenchmarkRow {
    long long id = 0;
    int n_star = 0;      // DU(3, 50)
    double h = 0.0;      // DU over the four-level set
    int k = 0;           // DU(3, 50)
    int eps = 0;         // DU(1, 200), metafunction seed
    int tau = 0;         // 1 random numbers, 2 quasi-random
    int phi = 0;         // distribution code 1..8
    double k2 = 0.0;     // DU on the 0.05 grid in [0.5, 1]
    double k3 = 0.0;     // DU on the 0.05 grid in [0.3, 1]
    int delta = 0;       // performance measure 1..3
    std::uint64_t seed = 0;

    long long nt_vars() const;
    long long jansen_n() const;  // max(2, round(nt_vars / (k+1)))
    long long nt_jansen() const { return jansen_n() * (k + 1); }
};

struct RowResult {
    long long id = 0;
    long long nt_vars = 0;
    long long nt_jansen = 0;
    double r_vars = 0.0;     // NaN when flagged
    double r_jansen = 0.0;   // NaN when flagged
    bool flag_vars = false;
    bool flag_jansen = false;
    double wall_ms = 0.0;
};

struct BenchConfig {
    std::array<double, 4> h_levels{0.01, 0.05, 0.1, 0.2};  // SM variant: 0.02 first
    std::size_t truth_n = 1 << 12;  // base rows for the reference Jansen truth
    int workers = 0;                // 0 = all available
};

// Map one 9-coordinate unit-cube point to a BenchmarkRow by uniform
// binning onto the parameter levels.
BenchmarkRow row_from_point(std::span<const double> u, std::uint64_t master_seed,
                            const BenchConfig& config);

// Rows from a scrambled 9-column Sobol' point set.
std::vector<BenchmarkRow> sample_rows(std::size_t n, std::uint64_t master_seed,
                                      const BenchConfig& config = {});

// Run one benchmark row: build the metafunction, sample matched-budget
// VARS and Jansen designs with sampler tau, transform through phi,
// estimate both total-order indices, score each against the shared
// Jansen reference truth with the row's delta measure.
RowResult run_row(const BenchmarkRow& row, const BenchConfig& config = {});

// Row-parallel sweep; results come back in row order regardless of the
// worker count. on_progress (if set) is called after each flushed chunk
// with (rows done, rows total).
std::vector<RowResult> run_all(const std::vector<BenchmarkRow>& rows,
                               const BenchConfig& config = {},
                               const std::function<void(std::size_t, std::size_t)>& on_progress = {},
                               const std::function<void(const RowResult&)>& on_row = {});

// Sobol' indices of the 9 benchmark parameters with respect to the
// r_vars output, over an (n_base, 9) pick-freeze design: first and
// total order with percentile-bootstrap confidence intervals (R = 500,
// 95%). Flagged rows enter the analysis with r = 0.
struct MetaResult {
    std::vector<std::string> parameter;  // 9 names
    std::vector<double> first, first_lo, first_hi;
    std::vector<double> total, total_lo, total_hi;
    std::size_t flagged_rows = 0;
    std::size_t total_rows = 0;  // n_base * (9 + 2)
};

MetaResult meta_analysis(std::size_t n_base, std::uint64_t master_seed,
                         const BenchConfig& config = {},
                         const std::function<void(std::size_t, std::size_t)>& on_progress = {});

// Shared helpers -----------------------------------------------------------

// tau = 1: counter-based uniform; tau = 2: digitally shifted Sobol'.
SampleMatrix sample_points(int tau, std::size_t n, std::size_t d, std::uint64_t seed);

// y(A) and the k y(AB_i) vectors for a transformed pick-freeze design,
// reusing per-input bank values so each AB evaluation costs no extra
// transcendentals.
struct PickFreezeOutputs {
    std::vector<double> y_a;
    std::vector<double> y_b;
    std::vector<std::vector<double>> y_ab;
};

PickFreezeOutputs pick_freeze_outputs(const Metafunction& mf, const SampleMatrix& a_t,
                                      const SampleMatrix& b_t, bool want_y_b = false);

// Metafunction outputs over star-design points, exploiting the fact
// that section points differ from their star center in one coordinate.
std::vector<double> star_outputs(const Metafunction& mf, const StarDesign& design,
                                 const SampleMatrix& transformed_points);

const std::array<const char*, 9>& parameter_names();

}  // namespace gsa::bench
