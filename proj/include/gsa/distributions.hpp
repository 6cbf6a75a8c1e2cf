#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gsa {

// The eight model-input distribution families of the benchmark,
// addressed by phi codes 1..8. Code 8 (Mixed) resolves each input to a
// seeded draw from families 1..7.
enum class Family : int {
    Uniform01 = 1,
    Normal = 2,        // N(0.5, 0.2)
    Beta8_2 = 3,
    Beta2_8 = 4,
    Beta2_05 = 5,      // Beta(2, 0.5)
    Beta05_2 = 6,      // Beta(0.5, 2)
    LogitNormal = 7,   // Logitnormal(0, 3.16)
};

const char* family_name(Family f);

struct DistributionSpec {
    int phi = 1;                      // code 1..8 as sampled
    std::vector<Family> per_input;    // resolved family per input

    Family family(std::size_t i) const { return per_input[i]; }
    std::size_t size() const { return per_input.size(); }
};

// Resolve a phi code to per-input families; the seed only matters for
// phi = 8. Throws on codes outside 1..8.
DistributionSpec resolve_phi(int phi, std::size_t k, std::uint64_t seed);

// Inverse CDF of one family. Inputs are clamped into [0.001, 0.999]
// before transformation, which keeps every family finite at the sample
// domain boundaries.
double inv_cdf(double u, Family f);

// Forward CDF, for round-trip checks and diagnostics.
double cdf(double x, Family f);

inline constexpr double kClampLo = 0.001;
inline constexpr double kClampHi = 0.999;

}  // namespace gsa
