#pragma once

#include "relpib/ring.hpp"
#include "relpib/sympoly.hpp"

#include <concepts>
#include <vector>

namespace relpib {

// Coefficient ring for the form machinery: QInt for concrete parameters,
// FormalPoly for identities in the parameter T.
template <typename R>
concept RingElement = requires(const R& x, const R& y) {
    { x + y } -> std::same_as<R>;
    { x - y } -> std::same_as<R>;
    { x * y } -> std::same_as<R>;
    { -x } -> std::same_as<R>;
    { x * 2L } -> std::same_as<R>;
    { x.one() } -> std::same_as<R>;
    { x.zero() } -> std::same_as<R>;
    { x.is_zero() } -> std::convertible_to<bool>;
    { x == y } -> std::convertible_to<bool>;
};

// Coefficients of the relative minimal polynomial
// f(x) = x^4 + a1 x^3 + a2 x^2 + a3 x + a4 over Z_M.
template <RingElement R>
struct RelQuartic {
    R a1, a2, a3, a4;
};

// Denominator/index data of the extension; this artifact always works in the
// equation order O = Z_M[xi], so d = i0 = 1 and [M:Q] = 2 throughout.
struct ExtensionContext {
    int d = 1;
    int i0 = 1;
    int m = 2;

    Integer target_norm() const {
        Integer num = 1;
        for (int i = 0; i < 6 * m; ++i) {
            num *= d;
        }
        return num / i0;
    }
};

// Binary cubic resolvent form F(u, v).
template <RingElement R>
struct CubicResolventForm {
    R c30, c21, c12, c03;

    R eval(const R& u, const R& v) const {
        return ((c30 * u + c21 * v) * u + c12 * v * v) * u + c03 * v * v * v;
    }
};

// Ternary quadratic form on (x, y, z).
template <RingElement R>
struct TernaryQuadraticForm {
    R cxx, cxy, cyy, cxz, cyz, czz;

    R eval(const R& x, const R& y, const R& z) const {
        return cxx * x * x + cxy * x * y + cyy * y * y + cxz * x * z + cyz * y * z +
               czz * z * z;
    }
};

// Coefficients of a candidate generator alpha = x*xi + y*xi^2 + z*xi^3.
// The constant term is dropped: no form depends on it.
template <RingElement R>
struct GeneratorTriple {
    R x, y, z;

    bool all_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
};

template <RingElement R>
struct QuarticForms {
    CubicResolventForm<R> resolvent;
    TernaryQuadraticForm<R> q1, q2;
};

// Quartic Thue form c40 p^4 + c31 p^3 q + c22 p^2 q^2 + c13 p q^3 + c04 q^4;
// c40 = c04 = 1 in every family here.
template <RingElement R>
struct BinaryQuarticForm {
    R c40, c31, c22, c13, c04;

    R eval(const R& p, const R& q) const {
        return (((c40 * p + c31 * q) * p + c22 * q * q) * p + c13 * q * q * q) * p +
               c04 * q * q * q * q;
    }

    bool biquadratic() const { return c31.is_zero() && c13.is_zero(); }
};

/**
 * The resolvent and quadratic forms attached to f:
 *
 *   F  = u^3 - a2 u^2 v + (a1 a3 - 4 a4) u v^2 + (4 a2 a4 - a3^2 - a1^2 a4) v^3
 *   Q1 = x^2 - a1 xy + a2 y^2 + (a1^2 - 2a2) xz + (a3 - a1 a2) yz
 *        + (-a1 a3 + a2^2 + a4) z^2
 *   Q2 = y^2 - xz - a1 yz + a2 z^2
 */
template <RingElement R>
QuarticForms<R> build_forms(const RelQuartic<R>& f) {
    const R one = f.a1.one();
    const R zero = f.a1.zero();
    CubicResolventForm<R> F{
        one,
        -f.a2,
        f.a1 * f.a3 - f.a4 * 4,
        f.a2 * f.a4 * 4 - f.a3 * f.a3 - f.a1 * f.a1 * f.a4,
    };
    TernaryQuadraticForm<R> q1{
        one,
        -f.a1,
        f.a2,
        f.a1 * f.a1 - f.a2 * 2,
        f.a3 - f.a1 * f.a2,
        f.a2 * f.a2 + f.a4 - f.a1 * f.a3,
    };
    TernaryQuadraticForm<R> q2{zero, zero, one, -one, -f.a1, f.a2};
    return {F, q1, q2};
}

template <RingElement R>
R eval_resolvent(const CubicResolventForm<R>& F, const R& u, const R& v) {
    return F.eval(u, v);
}

template <RingElement R>
R eval_ternary(const TernaryQuadraticForm<R>& q, const GeneratorTriple<R>& g) {
    return q.eval(g.x, g.y, g.z);
}

// F(Q1(x,y,z), Q2(x,y,z)); the relative index of alpha is 1 exactly when
// this value has norm 1 (d = i0 = 1 throughout).
template <RingElement R>
R index_form_value(const QuarticForms<R>& forms, const GeneratorTriple<R>& g) {
    if (g.all_zero()) {
        throw std::invalid_argument("index_form_value: zero triple");
    }
    return forms.resolvent.eval(eval_ternary(forms.q1, g), eval_ternary(forms.q2, g));
}

inline bool is_relative_index_one(const QuarticForms<QInt>& forms, const ExtensionContext& ctx,
                                  const GeneratorTriple<QInt>& g) {
    return index_form_value(forms, g).norm() == ctx.target_norm();
}

inline bool is_relative_index_one(const QuarticForms<QInt>& forms,
                                  const GeneratorTriple<QInt>& g) {
    return is_relative_index_one(forms, ExtensionContext{}, g);
}

/**
 * Exhaustive scan of the box norm(u), norm(v) <= box_bound for pairs with
 * norm(F(u,v)) = 1. Used to sanity-check that unit values of the resolvent
 * force v = 0 at sample parameters.
 */
inline std::vector<std::pair<QInt, QInt>> resolvent_unit_scan(const CubicResolventForm<QInt>& F,
                                                              RingSpec ring,
                                                              const Integer& box_bound) {
    if (box_bound < 1) {
        throw std::invalid_argument("resolvent_unit_scan: box bound must be >= 1");
    }
    std::vector<std::pair<QInt, QInt>> hits;
    auto box = enumerate_norm_le(ring, box_bound);
    for (const QInt& u : box) {
        for (const QInt& v : box) {
            if (F.eval(u, v).norm() == 1) {
                hits.emplace_back(u, v);
            }
        }
    }
    return hits;
}

}  // namespace relpib
