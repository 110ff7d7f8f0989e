// Benchmark: serial reference enumeration vs the OpenMP split over
// first-column prefixes.  Counts must agree; the timing ratio is the payoff.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tropbn/chain.hpp"
#include "tropbn/enumerate.hpp"

using namespace tropbn;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

}  // namespace

int main(int argc, char** argv) {
    long long g = argc > 1 ? std::atoll(argv[1]) : 18;
    long long k = argc > 2 ? std::atoll(argv[2]) : 4;
    int cols = argc > 3 ? std::atoi(argv[3]) : 4;
    int rows = argc > 4 ? std::atoi(argv[4]) : 4;

    ChainOfCycles chain = k_gonal_chain(g, k);
    auto profile = chain.torsion_profile();
    std::printf("enumerating %dx%d displacement tableaux, g=%lld, k=%lld\n", cols, rows, g, k);
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: not available, parallel path runs serially\n");
#endif

    auto t0 = std::chrono::steady_clock::now();
    EnumOptions serial;
    unsigned long long count_serial = count_tableaux(g, profile, cols, rows, serial);
    auto t1 = std::chrono::steady_clock::now();

    EnumOptions par;
    par.parallel = true;
    unsigned long long count_parallel = count_tableaux(g, profile, cols, rows, par);
    auto t2 = std::chrono::steady_clock::now();

    double ts = seconds(t0, t1), tp = seconds(t1, t2);
    std::printf("serial   : %llu tableaux in %.3f s\n", count_serial, ts);
    std::printf("parallel : %llu tableaux in %.3f s\n", count_parallel, tp);
    if (count_serial != count_parallel) {
        std::printf("MISMATCH between serial and parallel counts\n");
        return 1;
    }
    if (tp > 0) std::printf("speedup  : %.2fx\n", ts / tp);
    return 0;
}
