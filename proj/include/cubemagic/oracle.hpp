#pragma once

#include <cstdint>
#include <vector>

#include "cubemagic/labelling.hpp"

namespace cubemagic {

// Brute-force enumeration of all magic labellings with magic sum r, derived
// directly from the eight vertex equations and nothing else. Five labels are
// free (x1..x5); the rest propagate:
//   x9 = r-x1-x2   x10 = r-x1-x3   x12 = r-x2-x4   x11 = r-x3-x4
//   x6 = x1+x2-x5  x7  = x1+x3-x5  x8  = x4+x5-x1
// Kept independent of the cone/type machinery so it can serve as an oracle
// for it.
//
// The x1 range can be restricted so callers may split the outer loop into
// disjoint sub-ranges and process them concurrently.
template <class Visitor>
void for_each_magic_brute_force(Label r, Label x1_lo, Label x1_hi, Visitor&& visit) {
    if (r < 0) return;
    if (x1_lo < 0) x1_lo = 0;
    if (x1_hi > r) x1_hi = r;
    EdgeLabelling l;
    for (Label x1 = x1_lo; x1 <= x1_hi; ++x1) {
        for (Label x2 = 0; x2 <= r - x1; ++x2) {
            const Label x9 = r - x1 - x2;
            for (Label x3 = 0; x3 <= r - x1; ++x3) {
                const Label x10 = r - x1 - x3;
                const Label x4_max = r - (x2 > x3 ? x2 : x3);  // keeps x11, x12 >= 0
                for (Label x4 = 0; x4 <= x4_max; ++x4) {
                    const Label x12 = r - x2 - x4;
                    const Label x11 = r - x3 - x4;
                    const Label x5_lo = x1 - x4 > 0 ? x1 - x4 : 0;          // x8 >= 0
                    const Label x5_hi = x1 + (x2 < x3 ? x2 : x3);           // x6, x7 >= 0
                    for (Label x5 = x5_lo; x5 <= x5_hi; ++x5) {
                        l.a = {x1,          x2, x3, x4, x5,
                               x1 + x2 - x5, x1 + x3 - x5, x4 + x5 - x1,
                               x9, x10, x11, x12};
                        if (magic_sum_of(l) == r) visit(static_cast<const EdgeLabelling&>(l));
                    }
                }
            }
        }
    }
}

template <class Visitor>
void for_each_magic_brute_force(Label r, Visitor&& visit) {
    for_each_magic_brute_force(r, 0, r, visit);
}

// Materializing variant, sorted, for set-equality tests.
std::vector<EdgeLabelling> brute_force_enumerate(Label r);

std::uint64_t brute_force_count_serial(Label r);
// Same count, outer x1 loop split across threads when OpenMP is available.
std::uint64_t brute_force_count(Label r);

}  // namespace cubemagic
