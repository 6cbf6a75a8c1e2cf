#include "gsa/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "gsa/rng.hpp"
#include "gsa/sobol.hpp"

namespace gsa {

SampleMatrix random_points(std::size_t n, std::size_t d, std::uint64_t seed) {
    if (n < 1 || d < 1)
        throw std::invalid_argument("random_points: n and d must be >= 1");
    SampleMatrix m(n, d);
    CounterRng rng(derive_seed(seed, "random-points"));
    for (std::size_t i = 0; i < n * d; ++i)
        m.values()[i] = rng.at_double(i);
    return m;
}

SampleMatrix sobol_points(std::size_t n, std::size_t d,
                          std::optional<std::uint64_t> scramble_seed) {
    if (n < 1 || d < 1)
        throw std::invalid_argument("sobol_points: n and d must be >= 1");
    SobolSequence seq(d);
    if (scramble_seed)
        seq.set_digital_shift(*scramble_seed);
    SampleMatrix m(n, d);
    for (std::size_t r = 0; r < n; ++r)
        seq.next(&m.values()[r * d]);
    return m;
}

DesignAB build_ab(const SampleMatrix& base) {
    if (base.cols() % 2 != 0)
        throw std::invalid_argument("build_ab: base matrix must have an even column count");
    const std::size_t k = base.cols() / 2;
    const std::size_t n = base.rows();
    DesignAB design{SampleMatrix(n, k), SampleMatrix(n, k)};
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < k; ++c) {
            design.a(r, c) = base(r, c);
            design.b(r, c) = base(r, k + c);
        }
    return design;
}

StarDesign build_stars(const SampleMatrix& centers, double h) {
    const double inv = 1.0 / h;
    const auto grid_n = static_cast<std::size_t>(std::llround(inv));
    if (!(h > 0.0) || std::abs(inv - static_cast<double>(grid_n)) > 1e-9)
        throw std::invalid_argument("build_stars: 1/h must be an integer");

    const std::size_t n_star = centers.rows();
    const std::size_t k = centers.cols();

    StarDesign design;
    design.centers = centers;
    design.h = h;
    design.sections.assign(n_star * k, {});

    // N_star * [k(1/h - 1) + 1] points: one shared center per star.
    SampleMatrix points(n_star * (k * (grid_n - 1) + 1), k);
    std::size_t next_row = 0;

    design.center_rows.reserve(n_star);
    for (std::size_t v = 0; v < n_star; ++v) {
        const std::size_t center_row = next_row;
        design.center_rows.push_back(center_row);
        for (std::size_t c = 0; c < k; ++c)
            points(center_row, c) = centers(v, c);
        ++next_row;

        for (std::size_t i = 0; i < k; ++i) {
            const double ci = centers(v, i);
            // Index of the center on its own anchored grid.
            const auto jc = static_cast<std::size_t>(std::floor(ci * inv));
            auto& section = design.sections[v * k + i];
            section.reserve(grid_n);
            for (std::size_t j = 0; j < grid_n; ++j) {
                if (j == jc) {
                    section.push_back(center_row);
                    continue;
                }
                // Anchoring at the center keeps it on the grid exactly.
                double x = ci + (static_cast<double>(j) - static_cast<double>(jc)) * h;
                if (x >= 1.0) x = std::nextafter(1.0, 0.0);
                if (x < 0.0) x = 0.0;
                for (std::size_t c = 0; c < k; ++c)
                    points(next_row, c) = centers(v, c);
                points(next_row, i) = x;
                section.push_back(next_row);
                ++next_row;
            }
        }
    }

    design.points = std::move(points);
    return design;
}

}  // namespace gsa
