// Compares the serial reference kernels against the OpenMP ones and reports
// wall times. The two must agree exactly; a mismatch aborts.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cubemagic/enumerate.hpp"
#include "cubemagic/oracle.hpp"

using namespace cubemagic;

namespace {

template <class F>
double timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void report(const std::string& name, double serial, double parallel) {
    std::cout << name << ": serial " << serial << " s, parallel " << parallel << " s, speedup "
              << (parallel > 0 ? serial / parallel : 0.0) << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
    Label distinct_sum = 50;
    Label oracle_sum = 40;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--sum" && i + 1 < argc) distinct_sum = std::atoll(argv[++i]);
        else if (arg == "--oracle-sum" && i + 1 < argc) oracle_sum = std::atoll(argv[++i]);
        else {
            std::cerr << "usage: cubemagic-bench [--sum R] [--oracle-sum R]\n";
            return 2;
        }
    }

#ifdef _OPENMP
    std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without OpenMP; parallel kernels fall back to serial\n";
#endif

    std::cout << "labellings scanned at sum " << distinct_sum << ": "
              << count_by_type(distinct_sum).str() << "\n";

    BigInt raw_serial, raw_parallel;
    const double t_ds = timed([&] { raw_serial = count_distinct_serial(distinct_sum, DistinctMode::raw); });
    const double t_dp = timed([&] { raw_parallel = count_distinct(distinct_sum, DistinctMode::raw); });
    if (raw_serial != raw_parallel) {
        std::cerr << "MISMATCH: distinct counts " << raw_serial.str() << " vs "
                  << raw_parallel.str() << "\n";
        return 1;
    }
    std::cout << "distinct labellings at sum " << distinct_sum << ": " << raw_serial.str() << "\n";
    report("distinct count", t_ds, t_dp);

    std::uint64_t n_serial = 0, n_parallel = 0;
    const double t_os = timed([&] { n_serial = brute_force_count_serial(oracle_sum); });
    const double t_op = timed([&] { n_parallel = brute_force_count(oracle_sum); });
    if (n_serial != n_parallel) {
        std::cerr << "MISMATCH: oracle counts " << n_serial << " vs " << n_parallel << "\n";
        return 1;
    }
    std::cout << "magic labellings at sum " << oracle_sum << ": " << n_serial << "\n";
    report("brute-force count", t_os, t_op);

    return 0;
}
