// Benchmark: OpenMP trial runner vs the serial reference on one capacity
// grid point. Asserts the two runners agree exactly before reporting times.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "asmlab/entropy.hpp"
#include "asmlab/experiment.hpp"

using namespace asmlab;

int main(int argc, char** argv) {
    ExperimentConfig cfg;
    cfg.G = argc > 1 ? std::atoll(argv[1]) : 10000;
    cfg.seed = 20240817;
    cfg.algo = AlgoId::Greedy;
    const long long trials = argc > 2 ? std::atoll(argv[2]) : 40;
    const long long L = 27; // lbar = 2 at G = 10^4
    const long long N =
        (13 * ncov_estimate(0.1, static_cast<double>(cfg.G), static_cast<double>(L))) / 10;

    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    const long long serial = run_trials_serial(cfg, L, N, trials, 7);
    const auto t1 = clock::now();
    const long long parallel = run_trials(cfg, L, N, trials, 7);
    const auto t2 = clock::now();

    if (serial != parallel) {
        std::fprintf(stderr, "FAIL: serial %lld != parallel %lld successes\n", serial, parallel);
        return 1;
    }
    const double ts = std::chrono::duration<double>(t1 - t0).count();
    const double tp = std::chrono::duration<double>(t2 - t1).count();
    std::printf("G=%lld L=%lld N=%lld trials=%lld successes=%lld\n", cfg.G, L, N, trials, serial);
    std::printf("serial   %.3f s  (%.1f ms/trial)\n", ts, 1e3 * ts / trials);
    std::printf("parallel %.3f s  (%.1f ms/trial)  speedup %.2fx\n", tp, 1e3 * tp / trials,
                ts / tp);
#if !defined(_OPENMP)
    std::printf("note: built without OpenMP; parallel path ran serially\n");
#endif
    return 0;
}
