#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace gsa {

// A deterministic scalar-valued test model on (a transform of) the unit
// hypercube.
struct Model {
    std::size_t dimension = 0;
    std::string label;
    std::function<double(std::span<const double>)> evaluator;

    double operator()(std::span<const double> x) const { return evaluator(x); }
};

// ---------------------------------------------------------------------------
// Figure-style univariate display functions (three families).

enum class Fig1 { A, B, C };

// fn_id is 1-based within the figure. Domains: family A is [-1, 1],
// families B and C are [0, 1].
double fig1_eval(Fig1 figure, int fn_id, double x);

// ---------------------------------------------------------------------------
// Six-dimensional additive response surface y = g1(x1) + ... + g6(x6),
// every g of the form a*sin(b(x+e)) + c*sin(d x) + f on [0, 1].

struct SinTerm {
    double a, b, e, c, d, f;

    double operator()(double x) const;

    // Closed-form mean and variance over x ~ U[0, 1].
    double mean() const;
    double variance() const;
};

const std::array<SinTerm, 6>& sixdim_terms();

double sixdim_eval(std::span<const double> x);

Model sixdim_model();

struct SixDimAnalytic {
    std::array<double, 6> variances;   // V(g_i)
    std::array<double, 6> shares;      // S_i = V_i / sum V
    double total_variance;             // V(y) = sum V_i (additive model)
};

SixDimAnalytic sixdim_analytic();

// ---------------------------------------------------------------------------
// Liu's skewed ratio y = x1/x2 with x1 ~ chi2(10), x2 ~ chi2(13.978),
// mapped from the unit square through inverse chi-square CDFs.

Model liu_model();

// ---------------------------------------------------------------------------
// Randomized metafunction: per-input functions from a 10-element bank,
// plus seeded pairwise and three-wise product interactions.

enum class BankFn : int {
    Linear = 0,
    Quadratic,
    Cubic,
    Exponential,
    Periodic,
    Discontinuous,
    NonMonotonic,
    Inverse,
    Trigonometric,
    NoEffect,
};

inline constexpr int kBankSize = 10;

const char* bank_fn_name(BankFn f);
double bank_eval(BankFn f, double x);

class Metafunction {
public:
    // Draw per-input functions, first-order coefficients and interaction
    // terms from the seed stream. Pools P2/P3 have size min(k, C(k, 2))
    // and min(k, C(k, 3)); fractions k2 and k3 select how many pool
    // entries are active (rounded to nearest). Rebuilding from the same
    // (k, seed, k2, k3) reproduces the function exactly.
    static Metafunction build(std::size_t k, std::uint64_t seed, double k2, double k3);

    // Assemble a metafunction from explicit parts (no seeded drawing).
    static Metafunction from_parts(std::vector<BankFn> fns, std::vector<double> alphas,
                                   std::vector<std::array<std::size_t, 2>> pairs,
                                   std::vector<double> betas,
                                   std::vector<std::array<std::size_t, 3>> triples = {},
                                   std::vector<double> gammas = {});

    std::size_t dimension() const { return k_; }
    std::uint64_t seed() const { return seed_; }
    double k2() const { return k2_; }
    double k3() const { return k3_; }

    const std::vector<BankFn>& input_functions() const { return fn_; }
    const std::vector<double>& alphas() const { return alpha_; }
    const std::vector<std::array<std::size_t, 2>>& pairs() const { return pairs_; }
    const std::vector<double>& betas() const { return beta_; }
    const std::vector<std::array<std::size_t, 3>>& triples() const { return triples_; }
    const std::vector<double>& gammas() const { return gamma_; }

    // Per-input bank values phi_i = f_{id(i)}(x_i); interactions multiply
    // these transformed effects, so callers can cache them per coordinate.
    void bank_values(std::span<const double> x, std::span<double> phi) const;
    double eval_from_bank(std::span<const double> phi) const;

    // Change in the output when phi[i] is replaced by phi_new and all
    // other bank values stay put. Only the terms touching input i are
    // visited, which makes pick-freeze and cross-section sweeps cheap.
    double swap_delta(std::span<const double> phi, std::size_t i, double phi_new) const;

    double operator()(std::span<const double> x) const;

    Model as_model() const;

private:
    std::size_t k_ = 0;
    std::uint64_t seed_ = 0;
    double k2_ = 0, k3_ = 0;
    std::vector<BankFn> fn_;
    std::vector<double> alpha_;
    std::vector<std::array<std::size_t, 2>> pairs_;
    std::vector<double> beta_;
    std::vector<std::array<std::size_t, 3>> triples_;
    std::vector<double> gamma_;
};

}  // namespace gsa
