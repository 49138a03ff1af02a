#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubemagic {

// All counts and series coefficients are exact; labels themselves stay
// machine-width (see labelling.hpp).
using BigInt = boost::multiprecision::cpp_int;

// Binomial coefficient C(n, k), zero when n < k or either side is negative.
inline BigInt binom(std::int64_t n, int k) {
    if (k < 0 || n < 0 || n < k) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return r;
}

}  // namespace cubemagic
