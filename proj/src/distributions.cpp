#include "gsa/distributions.hpp"

#include <cmath>
#include <stdexcept>

#include "gsa/rng.hpp"
#include "gsa/special.hpp"

namespace gsa {

namespace {

constexpr double kLogitNormalSigma = 3.16;

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::Uniform01: return "uniform01";
        case Family::Normal: return "normal(0.5,0.2)";
        case Family::Beta8_2: return "beta(8,2)";
        case Family::Beta2_8: return "beta(2,8)";
        case Family::Beta2_05: return "beta(2,0.5)";
        case Family::Beta05_2: return "beta(0.5,2)";
        case Family::LogitNormal: return "logitnormal(0,3.16)";
    }
    return "?";
}

DistributionSpec resolve_phi(int phi, std::size_t k, std::uint64_t seed) {
    if (phi < 1 || phi > 8)
        throw std::invalid_argument("resolve_phi: phi code must lie in 1..8");
    DistributionSpec spec;
    spec.phi = phi;
    spec.per_input.resize(k);
    if (phi <= 7) {
        for (auto& f : spec.per_input) f = static_cast<Family>(phi);
        return spec;
    }
    CounterRng rng(derive_seed(seed, "phi-mixed"));
    for (auto& f : spec.per_input)
        f = static_cast<Family>(1 + static_cast<int>(rng.next_below(7)));
    return spec;
}

double inv_cdf(double u, Family f) {
    if (u < kClampLo) u = kClampLo;
    if (u > kClampHi) u = kClampHi;
    switch (f) {
        case Family::Uniform01:
            return u;
        case Family::Normal:
            return 0.5 + 0.2 * special::norm_inv(u);
        case Family::Beta8_2:
            return special::beta_inc_inv(8.0, 2.0, u);
        case Family::Beta2_8:
            return special::beta_inc_inv(2.0, 8.0, u);
        case Family::Beta2_05:
            return special::beta_inc_inv(2.0, 0.5, u);
        case Family::Beta05_2:
            return special::beta_inc_inv(0.5, 2.0, u);
        case Family::LogitNormal: {
            const double z = special::norm_inv(u);
            return 1.0 / (1.0 + std::exp(-kLogitNormalSigma * z));
        }
    }
    throw std::invalid_argument("inv_cdf: unknown family");
}

double cdf(double x, Family f) {
    switch (f) {
        case Family::Uniform01:
            return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x);
        case Family::Normal:
            return special::norm_cdf((x - 0.5) / 0.2);
        case Family::Beta8_2:
            return special::beta_inc(8.0, 2.0, x);
        case Family::Beta2_8:
            return special::beta_inc(2.0, 8.0, x);
        case Family::Beta2_05:
            return special::beta_inc(2.0, 0.5, x);
        case Family::Beta05_2:
            return special::beta_inc(0.5, 2.0, x);
        case Family::LogitNormal: {
            if (x <= 0.0) return 0.0;
            if (x >= 1.0) return 1.0;
            const double logit = std::log(x / (1.0 - x));
            return special::norm_cdf(logit / kLogitNormalSigma);
        }
    }
    throw std::invalid_argument("cdf: unknown family");
}

}  // namespace gsa
