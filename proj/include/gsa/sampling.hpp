#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gsa/matrix.hpp"

namespace gsa {

// Pick-freeze design for Sobol' index estimation. AB(i) is not stored:
// it equals A with column i replaced by column i of B, and ab_value()
// reads it that way.
struct DesignAB {
    SampleMatrix a;
    SampleMatrix b;

    std::size_t n() const { return a.rows(); }
    std::size_t k() const { return a.cols(); }

    // Entry (r, c) of the AB(i) matrix.
    double ab_value(std::size_t i, std::size_t r, std::size_t c) const {
        return c == i ? b(r, c) : a(r, c);
    }

    // Total model evaluations for a total-order run: y(A) plus y(AB(i)).
    std::size_t total_order_cost() const { return n() * (k() + 1); }
};

// STAR-VARS design: star centers plus, for each (star, input), a cross
// section of 1/h equally spaced points through the center along that
// input's axis. The center row is shared by the k sections of its star,
// so the point count is N_star * [k(1/h - 1) + 1].
struct StarDesign {
    SampleMatrix centers;                       // (N_star, k)
    double h = 0;                               // lag spacing, 1/h integer
    SampleMatrix points;                        // deduplicated evaluation points
    std::vector<std::size_t> center_rows;       // row of each star's center in points
    std::vector<std::vector<std::size_t>> sections;  // (star*k + input) -> point rows, grid order

    std::size_t n_star() const { return centers.rows(); }
    std::size_t k() const { return centers.cols(); }
    std::size_t section_length() const { return sections.empty() ? 0 : sections.front().size(); }

    const std::vector<std::size_t>& section(std::size_t star, std::size_t input) const {
        return sections[star * k() + input];
    }
};

// i.i.d.-uniform values in [0,1) from the counter-based generator;
// byte-identical for equal (n, d, seed).
SampleMatrix random_points(std::size_t n, std::size_t d, std::uint64_t seed);

// Sobol' sequence points; see SobolSequence for the skip and scramble
// conventions. Throws if d exceeds the direction-number table.
SampleMatrix sobol_points(std::size_t n, std::size_t d,
                          std::optional<std::uint64_t> scramble_seed = std::nullopt);

// Split a (N, 2k) base matrix into A (first k columns) and B (last k).
DesignAB build_ab(const SampleMatrix& base);

// Build cross sections of spacing h through each center. Grids are
// anchored at (center mod h) so every section holds exactly 1/h points
// including the center itself.
StarDesign build_stars(const SampleMatrix& centers, double h);

}  // namespace gsa
