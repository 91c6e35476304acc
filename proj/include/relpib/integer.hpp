#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>

namespace relpib {

using Integer = boost::multiprecision::cpp_int;

// Floor of the square root of a nonnegative integer.
inline Integer isqrt_floor(const Integer& n) {
    if (n < 0) {
        throw std::domain_error("isqrt_floor: negative argument");
    }
    return boost::multiprecision::sqrt(n);
}

// Exact square root, or empty when n is negative or not a perfect square.
inline std::optional<Integer> isqrt_exact(const Integer& n) {
    if (n < 0) {
        return std::nullopt;
    }
    Integer r = boost::multiprecision::sqrt(n);
    if (r * r != n) {
        return std::nullopt;
    }
    return r;
}

// Quotient rounded toward negative infinity (den > 0).
inline Integer floor_div(const Integer& num, const Integer& den) {
    Integer q = num / den;
    if (num % den != 0 && (num < 0) != (den < 0)) {
        --q;
    }
    return q;
}

// Quotient rounded toward positive infinity (den > 0).
inline Integer ceil_div(const Integer& num, const Integer& den) {
    Integer q = num / den;
    if (num % den != 0 && (num < 0) == (den < 0)) {
        ++q;
    }
    return q;
}

// Trial division; every caller passes small values.
inline bool is_squarefree(unsigned long n) {
    if (n == 0) {
        return false;
    }
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) {
            return false;
        }
    }
    return true;
}

}  // namespace relpib
