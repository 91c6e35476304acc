#pragma once

#include "relpib/integer.hpp"
#include "relpib/ring.hpp"

#include <boost/multiprecision/cpp_complex.hpp>

#include <array>
#include <vector>

namespace relpib {

// Raised when the numeric root path cannot certify its approximations even
// at the top of the precision ladder; candidates are never dropped silently.
class precision_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

template <unsigned Digits>
using Cplx = boost::multiprecision::cpp_complex<Digits>;

inline unsigned bit_length(const Integer& n) {
    if (n == 0) {
        return 0;
    }
    return static_cast<unsigned>(boost::multiprecision::msb(boost::multiprecision::abs(n))) + 1;
}

template <unsigned Digits>
Cplx<Digits> embed(const QInt& x) {
    using C = Cplx<Digits>;
    using R = typename C::value_type;
    R a = x.a().template convert_to<R>();
    R b = x.b().template convert_to<R>();
    R sqrt_d = sqrt(R(x.ring().d()));
    if (x.ring().mode() == BasisMode::Sqrt) {
        return C(a, b * sqrt_d);
    }
    return C(a + b / 2, b * sqrt_d / 2);
}

// One Weierstrass (Durand-Kerner) run on the monic quartic
// z^4 + c3 z^3 + c2 z^2 + c1 z + c0. Every root of the polynomial lies in
// the union of disks around the iterates with radius 4*|correction|, so a
// small final correction certifies that no root escapes the rounding
// neighborhood searched by the caller.
template <unsigned Digits>
struct WeierstrassResult {
    std::array<Cplx<Digits>, 4> roots;
    double max_correction;
};

template <unsigned Digits>
WeierstrassResult<Digits> weierstrass_quartic(const std::array<Cplx<Digits>, 4>& c) {
    using C = Cplx<Digits>;
    using R = typename C::value_type;

    R radius(1);
    for (const C& ci : c) {
        R m = abs(ci);
        if (m > radius) {
            radius = m;
        }
    }
    radius += 1;

    // pairwise distinct, non-real starting points
    const C seed(R("0.4"), R("0.9"));
    std::array<C, 4> r;
    C acc = seed;
    for (auto& ri : r) {
        ri = acc * radius;
        acc = acc * seed;
    }

    auto eval = [&](const C& z) {
        return (((z + c[0]) * z + c[1]) * z + c[2]) * z + c[3];
    };

    R max_w(0);
    for (int iter = 0; iter < 400; ++iter) {
        max_w = R(0);
        for (int i = 0; i < 4; ++i) {
            C den(R(1), R(0));
            for (int j = 0; j < 4; ++j) {
                if (j != i) {
                    den *= r[i] - r[j];
                }
            }
            if (abs(den) == 0) {
                r[i] += C(R("0.5"), R("0.25"));  // break the tie, keep iterating
                max_w = R(1);
                continue;
            }
            C w = eval(r[i]) / den;
            r[i] -= w;
            R aw = abs(w);
            if (aw > max_w) {
                max_w = aw;
            }
        }
        if (max_w < R("1e-12")) {
            break;
        }
    }
    return {r, max_w.template convert_to<double>()};
}

// Coordinates of the lattice point nearest to z in the basis {1, w}.
template <unsigned Digits>
std::pair<Integer, Integer> nearest_coordinates(RingSpec ring, const Cplx<Digits>& z) {
    using R = typename Cplx<Digits>::value_type;
    R sqrt_d = sqrt(R(ring.d()));
    R re = real(z), im = imag(z);
    if (ring.mode() == BasisMode::Sqrt) {
        R b = im / sqrt_d;
        return {round(re).template convert_to<Integer>(),
                round(b).template convert_to<Integer>()};
    }
    R b = 2 * im / sqrt_d;
    R br = round(b);
    R a = re - br / 2;
    return {round(a).template convert_to<Integer>(), br.template convert_to<Integer>()};
}

template <unsigned Digits>
bool quartic_lattice_candidates_at(RingSpec ring, const std::array<QInt, 4>& coeffs,
                                   std::vector<std::pair<Integer, Integer>>& out) {
    std::array<Cplx<Digits>, 4> c{embed<Digits>(coeffs[0]), embed<Digits>(coeffs[1]),
                                  embed<Digits>(coeffs[2]), embed<Digits>(coeffs[3])};
    auto res = weierstrass_quartic<Digits>(c);
    if (!(res.max_correction <= 0.02)) {
        return false;
    }
    for (const auto& root : res.roots) {
        out.push_back(nearest_coordinates<Digits>(ring, root));
    }
    return true;
}

/**
 * Rounded lattice coordinates near the four complex roots of the monic
 * quartic z^4 + c3 z^3 + c2 z^2 + c1 z + c0 with coefficients in Z_M. The
 * working precision starts at >= 4x the coefficient bit length plus slack
 * and doubles until the iteration certifies itself; with the final
 * correction below 0.02 every true root lies within 0.08 of a reported
 * point, so a radius-3 neighborhood scan around each cannot miss a root.
 */
inline std::vector<std::pair<Integer, Integer>> quartic_lattice_candidates(
    RingSpec ring, const std::array<QInt, 4>& coeffs) {
    unsigned maxbits = 1;
    for (const QInt& c : coeffs) {
        maxbits = std::max({maxbits, bit_length(c.a()), bit_length(c.b())});
    }
    const unsigned required = 4 * maxbits + 64;

    std::vector<std::pair<Integer, Integer>> out;
    if (required <= 168 && quartic_lattice_candidates_at<50>(ring, coeffs, out)) {
        return out;
    }
    out.clear();
    if (required <= 336 && quartic_lattice_candidates_at<100>(ring, coeffs, out)) {
        return out;
    }
    out.clear();
    if (required <= 672 && quartic_lattice_candidates_at<200>(ring, coeffs, out)) {
        return out;
    }
    throw precision_error("quartic root isolation failed at 200 digits (coefficient bits: " +
                          std::to_string(maxbits) + ")");
}

}  // namespace detail
}  // namespace relpib
