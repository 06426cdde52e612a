// Benchmark: serial reference vs OpenMP variation DP over subset masks.
// Prints one row per ground size and checks the kernels agree bit-for-bit.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nonadd/variation.hpp"

using namespace nonadd;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<double> random_values(int k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 4.0);
    std::vector<double> v(1ULL << k);
    v[0] = 0.0;
    for (std::size_t i = 1; i < v.size(); ++i) v[i] = dist(rng);
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    int max_k = argc > 1 ? std::atoi(argv[1]) : 18;
    int reps = argc > 2 ? std::atoi(argv[2]) : 3;
    std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 42;
#ifdef _OPENMP
    std::printf("# OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("# OpenMP not enabled: parallel kernel runs serially\n");
#endif
    std::printf("%4s %12s %12s %9s %8s\n", "k", "serial_ms", "parallel_ms", "speedup", "match");
    for (int k = 12; k <= max_k; k += 2) {
        auto values = random_values(k, seed + static_cast<std::uint64_t>(k));
        double best_s = 1e100, best_p = 1e100;
        bool match = true;
        for (int r = 0; r < reps; ++r) {
            auto t0 = Clock::now();
            auto vs = variation_dp_serial(values);
            double s_ms = ms_since(t0);
            t0 = Clock::now();
            auto vp = variation_dp_parallel(values);
            double p_ms = ms_since(t0);
            best_s = std::min(best_s, s_ms);
            best_p = std::min(best_p, p_ms);
            match = match && vs == vp;
        }
        std::printf("%4d %12.2f %12.2f %9.2f %8s\n", k, best_s, best_p, best_s / best_p,
                    match ? "yes" : "NO");
        if (!match) return 1;
    }

    // exact-rational lane: smaller masks, same comparison
    {
        std::mt19937_64 rng(seed);
        int k = 12;
        std::vector<Rat> values(1ULL << k);
        values[0] = Rat(0);
        for (std::size_t i = 1; i < values.size(); ++i) {
            values[i] = Rat(static_cast<std::int64_t>(rng() % 40),
                            1 + static_cast<std::int64_t>(rng() % 8));
        }
        auto t0 = Clock::now();
        auto vs = variation_dp_serial(values);
        double s_ms = ms_since(t0);
        t0 = Clock::now();
        auto vp = variation_dp_parallel(values);
        double p_ms = ms_since(t0);
        std::printf("%3dq %12.2f %12.2f %9.2f %8s\n", k, s_ms, p_ms, s_ms / p_ms,
                    vs == vp ? "yes" : "NO");
        if (!(vs == vp)) return 1;
    }
    return 0;
}
