#include "gsa/models.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gsa/rng.hpp"
#include "gsa/special.hpp"

namespace gsa {

namespace {

constexpr double kPi = std::numbers::pi;

double real_mod(double x, double m) { return x - std::floor(x / m) * m; }

}  // namespace

double fig1_eval(Fig1 figure, int fn_id, double x) {
    switch (figure) {
        case Fig1::A:
            switch (fn_id) {
                case 1: return x * x;
                case 2: return std::abs(x);
                // Bimodal: -(x+1)^2 left of zero, -(x-1)^2 from zero on.
                case 3: return x < 0.0 ? -(x + 1.0) * (x + 1.0) : -(x - 1.0) * (x - 1.0);
            }
            break;
        case Fig1::B:
            switch (fn_id) {
                case 1: return 1.11 * x * x;
                case 2: return 2.0 - 0.2 * std::cos(7.0 * kPi * x);
            }
            break;
        case Fig1::C:
            switch (fn_id) {
                case 1: return x;
                case 2: {
                    const double sign = std::fmod(std::floor(4.0 * x), 2.0) == 0.0 ? 1.0 : -1.0;
                    return sign * (0.125 - real_mod(x, 0.25)) + 0.125;
                }
                case 3: {
                    const double sign = std::fmod(std::floor(32.0 * x), 2.0) == 0.0 ? 1.0 : -1.0;
                    return sign * (0.0325 - real_mod(x, 0.0325)) + 0.0325;
                }
            }
            break;
    }
    throw std::invalid_argument("fig1_eval: unknown function id");
}

// ---------------------------------------------------------------------------

double SinTerm::operator()(double x) const {
    return a * std::sin(b * (x + e)) + c * std::sin(d * x) + f;
}

double SinTerm::mean() const {
    // integral of sin(b(x+e)) over [0,1] = (cos(be) - cos(b(1+e)))/b
    double m = f;
    if (a != 0.0) m += a * (std::cos(b * e) - std::cos(b * (1.0 + e))) / b;
    if (c != 0.0) m += c * (1.0 - std::cos(d)) / d;
    return m;
}

double SinTerm::variance() const {
    const double a1 = a != 0.0 ? (std::cos(b * e) - std::cos(b * (1.0 + e))) / b : 0.0;
    const double c1 = c != 0.0 ? (1.0 - std::cos(d)) / d : 0.0;
    double m2 = f * f;
    if (a != 0.0) {
        const double a2 = 0.5 - (std::sin(2.0 * b * (1.0 + e)) - std::sin(2.0 * b * e)) / (4.0 * b);
        m2 += a * a * a2 + 2.0 * a * f * a1;
    }
    if (c != 0.0) {
        const double c2 = 0.5 - std::sin(2.0 * d) / (4.0 * d);
        m2 += c * c * c2 + 2.0 * c * f * c1;
    }
    if (a != 0.0 && c != 0.0) {
        // integral of sin(b(x+e))sin(dx) via product-to-sum; b != d here.
        const double be = b * e;
        const double ac = 0.5 * ((std::sin(b - d + be) - std::sin(be)) / (b - d) -
                                 (std::sin(b + d + be) - std::sin(be)) / (b + d));
        m2 += 2.0 * a * c * ac;
    }
    const double m1 = mean();
    return m2 - m1 * m1;
}

const std::array<SinTerm, 6>& sixdim_terms() {
    static const std::array<SinTerm, 6> terms = {{
        {-1.0, kPi, 0.0, -0.3, 3.33 * kPi, 0.0},
        {-0.76, kPi, -0.2, 0.0, 1.0, -0.315},
        {-0.12, 1.05 * kPi, -0.2, -0.02, 95.24 * kPi, -0.96},
        {-0.12, 1.05 * kPi, -0.2, 0.0, 1.0, -0.96},
        {-0.05, kPi, -0.2, 0.0, 1.0, -1.02},
        {0.0, 1.0, 0.0, 0.0, 1.0, -1.08},
    }};
    return terms;
}

double sixdim_eval(std::span<const double> x) {
    if (x.size() != 6)
        throw std::invalid_argument("sixdim_eval: expected 6 coordinates");
    const auto& terms = sixdim_terms();
    double y = 0.0;
    for (std::size_t i = 0; i < 6; ++i) y += terms[i](x[i]);
    return y;
}

Model sixdim_model() {
    return {6, "sixdim", [](std::span<const double> x) { return sixdim_eval(x); }};
}

SixDimAnalytic sixdim_analytic() {
    SixDimAnalytic out{};
    const auto& terms = sixdim_terms();
    double total = 0.0;
    for (std::size_t i = 0; i < 6; ++i) {
        out.variances[i] = terms[i].variance();
        total += out.variances[i];
    }
    out.total_variance = total;
    for (std::size_t i = 0; i < 6; ++i) out.shares[i] = out.variances[i] / total;
    return out;
}

// ---------------------------------------------------------------------------

Model liu_model() {
    return {2, "liu", [](std::span<const double> x) {
                const double x1 = special::chisq_inv(x[0], 10.0);
                double x2 = special::chisq_inv(x[1], 13.978);
                if (x2 < 1e-12) x2 = 1e-12;  // division guard
                return x1 / x2;
            }};
}

// ---------------------------------------------------------------------------

const char* bank_fn_name(BankFn f) {
    switch (f) {
        case BankFn::Linear: return "linear";
        case BankFn::Quadratic: return "quadratic";
        case BankFn::Cubic: return "cubic";
        case BankFn::Exponential: return "exponential";
        case BankFn::Periodic: return "periodic";
        case BankFn::Discontinuous: return "discontinuous";
        case BankFn::NonMonotonic: return "non-monotonic";
        case BankFn::Inverse: return "inverse";
        case BankFn::Trigonometric: return "trigonometric";
        case BankFn::NoEffect: return "no-effect";
    }
    return "?";
}

double bank_eval(BankFn f, double x) {
    switch (f) {
        case BankFn::Linear: return x;
        case BankFn::Quadratic: return x * x;
        case BankFn::Cubic: return x * x * x;
        case BankFn::Exponential: return (std::exp(x) - 1.0) / (std::exp(1.0) - 1.0);
        case BankFn::Periodic: return std::sin(2.0 * kPi * x);
        case BankFn::Discontinuous: return x > 0.5 ? 1.0 : 0.0;
        case BankFn::NonMonotonic: return 4.0 * x * (1.0 - x);
        case BankFn::Inverse: {
            // Transformed inputs can stray below -0.1; keep the pole out of
            // reach so products with other effects stay finite.
            double den = x + 0.1;
            if (std::abs(den) < 1e-8) den = den < 0.0 ? -1e-8 : 1e-8;
            return 0.1 / den;
        }
        case BankFn::Trigonometric: return std::cos(kPi * x);
        case BankFn::NoEffect: return 0.0;
    }
    throw std::invalid_argument("bank_eval: unknown bank function");
}

Metafunction Metafunction::build(std::size_t k, std::uint64_t seed, double k2, double k3) {
    if (k < 3)
        throw std::invalid_argument("Metafunction::build: k must be >= 3");
    if (k2 < 0.0 || k2 > 1.0 || k3 < 0.0 || k3 > 1.0)
        throw std::invalid_argument("Metafunction::build: k2 and k3 must lie in [0, 1]");

    Metafunction mf;
    mf.k_ = k;
    mf.seed_ = seed;
    mf.k2_ = k2;
    mf.k3_ = k3;

    CounterRng rng(derive_seed(seed, "metafunction"));

    mf.fn_.resize(k);
    for (auto& f : mf.fn_) f = static_cast<BankFn>(rng.next_below(kBankSize));

    mf.alpha_.resize(k);
    for (auto& a : mf.alpha_) a = special::norm_inv(rng.next_double());

    // Candidate pools drawn without replacement from all index pairs /
    // triples; the k2/k3 fractions then activate a rounded share of each
    // pool (pool size min(k, C(k,2)) and min(k, C(k,3))).
    const auto draw_pool = [&rng](std::vector<std::size_t>& indices, std::size_t want) {
        for (std::size_t i = 0; i < want; ++i) {
            const std::size_t j = i + rng.next_below(indices.size() - i);
            std::swap(indices[i], indices[j]);
        }
        indices.resize(want);
    };

    {
        std::vector<std::size_t> idx(k * (k - 1) / 2);
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        const std::size_t pool = std::min(k, idx.size());
        draw_pool(idx, pool);
        const auto active = static_cast<std::size_t>(std::llround(k2 * static_cast<double>(pool)));
        for (std::size_t t = 0; t < active; ++t) {
            // Unrank pair index into (u, v), u < v.
            std::size_t r = idx[t], u = 0;
            std::size_t row = k - 1;
            while (r >= row) {
                r -= row;
                --row;
                ++u;
            }
            mf.pairs_.push_back({u, u + 1 + r});
            mf.beta_.push_back(0.5 * special::norm_inv(rng.next_double()));
        }
    }

    {
        const std::size_t n_triples = k * (k - 1) * (k - 2) / 6;
        std::vector<std::size_t> idx(n_triples);
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        const std::size_t pool = std::min(k, n_triples);
        draw_pool(idx, pool);
        const auto active = static_cast<std::size_t>(std::llround(k3 * static_cast<double>(pool)));
        for (std::size_t t = 0; t < active; ++t) {
            // Unrank triple index into (u, v, w), u < v < w.
            std::size_t r = idx[t], u = 0;
            while (true) {
                const std::size_t rest = (k - 1 - u) * (k - 2 - u) / 2;
                if (r < rest) break;
                r -= rest;
                ++u;
            }
            std::size_t v = u + 1;
            while (r >= k - 1 - v) {
                r -= k - 1 - v;
                ++v;
            }
            mf.triples_.push_back({u, v, v + 1 + r});
            mf.gamma_.push_back(0.5 * special::norm_inv(rng.next_double()));
        }
    }

    return mf;
}

Metafunction Metafunction::from_parts(std::vector<BankFn> fns, std::vector<double> alphas,
                                      std::vector<std::array<std::size_t, 2>> pairs,
                                      std::vector<double> betas,
                                      std::vector<std::array<std::size_t, 3>> triples,
                                      std::vector<double> gammas) {
    if (fns.size() != alphas.size() || pairs.size() != betas.size() ||
        triples.size() != gammas.size())
        throw std::invalid_argument("Metafunction::from_parts: size mismatch");
    Metafunction mf;
    mf.k_ = fns.size();
    mf.fn_ = std::move(fns);
    mf.alpha_ = std::move(alphas);
    mf.pairs_ = std::move(pairs);
    mf.beta_ = std::move(betas);
    mf.triples_ = std::move(triples);
    mf.gamma_ = std::move(gammas);
    return mf;
}

void Metafunction::bank_values(std::span<const double> x, std::span<double> phi) const {
    for (std::size_t i = 0; i < k_; ++i) phi[i] = bank_eval(fn_[i], x[i]);
}

double Metafunction::eval_from_bank(std::span<const double> phi) const {
    double y = 0.0;
    for (std::size_t i = 0; i < k_; ++i) y += alpha_[i] * phi[i];
    for (std::size_t t = 0; t < pairs_.size(); ++t)
        y += beta_[t] * phi[pairs_[t][0]] * phi[pairs_[t][1]];
    for (std::size_t t = 0; t < triples_.size(); ++t)
        y += gamma_[t] * phi[triples_[t][0]] * phi[triples_[t][1]] * phi[triples_[t][2]];
    return y;
}

double Metafunction::operator()(std::span<const double> x) const {
    if (x.size() != k_)
        throw std::invalid_argument("Metafunction: dimension mismatch");
    std::vector<double> phi(k_);
    bank_values(x, phi);
    return eval_from_bank(phi);
}

Model Metafunction::as_model() const {
    auto self = *this;
    return {k_, "metafunction", [self = std::move(self)](std::span<const double> x) { return self(x); }};
}

}  // namespace gsa
