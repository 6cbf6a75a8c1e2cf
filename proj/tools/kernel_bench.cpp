// Timing comparison of the serial reference kernels against the OpenMP
// ones, on workloads shaped like the benchmark's hot paths.

#include <cstdio>
#include <chrono>

#include "gsa/distributions.hpp"
#include "gsa/models.hpp"
#include "gsa/parallel.hpp"
#include "gsa/sampling.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = Clock::now();
        f();
        const double t = seconds_since(t0);
        if (t < best) best = t;
    }
    return best;
}

}  // namespace

int main() {
    const std::size_t n = 20000, k = 50;
    const auto pts = gsa::random_points(n, k, 7);
    const auto dist = gsa::resolve_phi(8, k, 11);  // mixed: exercises every family
    const auto mf = gsa::Metafunction::build(k, 42, 0.8, 0.5);
    const auto model = mf.as_model();

    std::printf("workers available: %d\n", gsa::worker_count());
    std::printf("%-28s %12s %12s %8s\n", "kernel", "serial [s]", "openmp [s]", "speedup");

    {
        const double ts = time_best_of(3, [&] {
            volatile auto r = gsa::transform_matrix(pts, dist, gsa::Exec::Serial).rows();
            (void)r;
        });
        const double tp = time_best_of(3, [&] {
            volatile auto r = gsa::transform_matrix(pts, dist, gsa::Exec::OpenMp).rows();
            (void)r;
        });
        std::printf("%-28s %12.4f %12.4f %7.2fx\n", "transform_matrix 20k x 50", ts, tp, ts / tp);
    }
    {
        const auto t = gsa::transform_matrix(pts, dist, gsa::Exec::Serial);
        const double ts = time_best_of(3, [&] {
            volatile auto r = gsa::evaluate_rows(t, model.evaluator, gsa::Exec::Serial).size();
            (void)r;
        });
        const double tp = time_best_of(3, [&] {
            volatile auto r = gsa::evaluate_rows(t, model.evaluator, gsa::Exec::OpenMp).size();
            (void)r;
        });
        std::printf("%-28s %12.4f %12.4f %7.2fx\n", "evaluate_rows metafunction", ts, tp,
                    ts / tp);
    }
    return 0;
}
