#include "cubemagic/oracle.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cubemagic {

std::vector<EdgeLabelling> brute_force_enumerate(Label r) {
    std::vector<EdgeLabelling> out;
    for_each_magic_brute_force(r, [&](const EdgeLabelling& l) { out.push_back(l); });
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t brute_force_count_serial(Label r) {
    std::uint64_t n = 0;
    for_each_magic_brute_force(r, [&](const EdgeLabelling&) { ++n; });
    return n;
}

std::uint64_t brute_force_count(Label r) {
#ifdef _OPENMP
    std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (Label x1 = 0; x1 <= r; ++x1) {
        std::uint64_t n = 0;
        for_each_magic_brute_force(r, x1, x1, [&](const EdgeLabelling&) { ++n; });
        total += n;
    }
    return total;
#else
    return brute_force_count_serial(r);
#endif
}

}  // namespace cubemagic
