#pragma once

#include "relpib/ring.hpp"

#include <random>
#include <vector>

namespace relpib::testing {

inline std::mt19937_64 rng(std::uint64_t seed = 0x5eedULL) {
    return std::mt19937_64(seed);
}

inline Integer random_int(std::mt19937_64& gen, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return Integer(dist(gen));
}

inline QInt random_qint(std::mt19937_64& gen, RingSpec ring, long mag = 100) {
    return QInt(ring, random_int(gen, -mag, mag), random_int(gen, -mag, mag));
}

inline QInt random_nonzero_qint(std::mt19937_64& gen, RingSpec ring, long mag = 100) {
    for (;;) {
        QInt x = random_qint(gen, ring, mag);
        if (!x.is_zero()) {
            return x;
        }
    }
}

inline const std::vector<unsigned>& test_ds() {
    static const std::vector<unsigned> ds{1, 2, 3, 5, 7, 11, 15, 163};
    return ds;
}

// Naive box enumeration used as the oracle for enumerate_norm_le: scan a
// coordinate box wide enough to contain every element of norm <= bound.
inline std::vector<QInt> naive_norm_le(RingSpec ring, const Integer& bound) {
    std::vector<QInt> out;
    long box = 2 + static_cast<long>(isqrt_floor(4 * bound).convert_to<long>());
    for (long b = -box; b <= box; ++b) {
        for (long a = -box; a <= box; ++a) {
            QInt x(ring, a, b);
            if (x.norm() <= bound) {
                out.push_back(x);
            }
        }
    }
    return out;
}

}  // namespace relpib::testing
