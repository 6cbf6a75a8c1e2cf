#include "gsa/parallel.hpp"

#include <cstdint>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gsa {

int worker_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_worker_count(int workers) {
#ifdef _OPENMP
    if (workers > 0) omp_set_num_threads(workers);
#else
    (void)workers;
#endif
}

SampleMatrix transform_matrix(const SampleMatrix& m, const DistributionSpec& spec,
                              Exec exec) {
    if (spec.size() != m.cols())
        throw std::invalid_argument("transform_matrix: spec does not match column count");
    SampleMatrix out(m.rows(), m.cols());
    const auto n = static_cast<std::int64_t>(m.rows());
    const auto k = m.cols();

    if (exec == Exec::Serial) {
        for (std::int64_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < k; ++c)
                out(r, c) = inv_cdf(m(r, c), spec.family(c));
        return out;
    }
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < k; ++c)
            out(r, c) = inv_cdf(m(r, c), spec.family(c));
    return out;
}

std::vector<double> evaluate_rows(const SampleMatrix& m,
                                  const std::function<double(std::span<const double>)>& fn,
                                  Exec exec) {
    std::vector<double> y(m.rows());
    const auto n = static_cast<std::int64_t>(m.rows());

    if (exec == Exec::Serial) {
        for (std::int64_t r = 0; r < n; ++r) y[r] = fn(m.row(r));
        return y;
    }
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < n; ++r) y[r] = fn(m.row(r));
    return y;
}

}  // namespace gsa
