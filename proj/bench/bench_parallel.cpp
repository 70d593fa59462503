// Serial reference vs OpenMP path for the data-parallel kernels.
// Usage: bench_parallel [repetitions]
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <vector>

#include "casimir_rect/casimir.hpp"
#include "casimir_rect/effspin.hpp"
#include "casimir_rect/parallel.hpp"
#include "casimir_rect/sigma.hpp"
#include "casimir_rect/weights.hpp"

using namespace casimir_rect;

namespace {

// Median wall time of `reps` runs; `reset` runs untimed before each one.
double median_seconds(int reps, const std::function<double()>& work, const std::function<void()>& reset,
                      double& checksum)
{
    std::vector<double> times;
    for (int r = 0; r < reps; ++r) {
        reset();
        const auto start = std::chrono::steady_clock::now();
        checksum = work();
        times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

void compare(const char* name, int reps, const std::function<double(Exec)>& kernel,
             const std::function<void()>& reset = [] {})
{
    double serial_sum = 0.0, parallel_sum = 0.0;
    const double ts = median_seconds(reps, [&] { return kernel(Exec::serial); }, reset, serial_sum);
    const double tp = median_seconds(reps, [&] { return kernel(Exec::parallel); }, reset, parallel_sum);
    std::printf("%-28s serial %9.4f s  parallel %9.4f s  speedup %5.2fx  %s\n", name, ts, tp, ts / tp,
                serial_sum == parallel_sum ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv)
{
    configure_threads_from_env();
    const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
    std::printf("threads: %d, repetitions: %d\n", max_threads(), reps);

    compare("spectrum (x=-2.5, 256 modes)", reps, [](Exec e) {
        const auto s = build_spectrum(-2.5, 256, e);
        double sum = 0.0;
        for (const auto& w : s->weights) sum += w.log_v;
        return sum;
    });

    compare(
        "subset terms (x=0.7, N=24)", reps,
        [](Exec e) {
            double sum = 0.0;
            for (const auto& t : series_terms(0.7, 24, e)) sum += t.log_a;
            return sum;
        },
        [] { clear_spectrum_cache(); });

    const EffectiveModel model = build_model(0.4, 24);
    compare("effective spins (n=24)", reps, [&](Exec e) { return enumerate_partition(model, 0.6, e); });

    compare("potential grid (64 points)", reps,
            [](Exec e) {
                const auto values = map_indexed<double>(64, [](std::size_t i) {
                    return theta_total(-8.0 + 0.25 * static_cast<double>(i) + 0.125, 1.0);
                }, e);
                double sum = 0.0;
                for (double v : values) sum += v;
                return sum;
            },
            [] {
                clear_casimir_caches();
                clear_spectrum_cache();
            });
    return 0;
}
