#pragma once

#include "relpib/forms.hpp"
#include "relpib/ring.hpp"
#include "relpib/sympoly.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace relpib {

/**
 * The three parametric families of relative quartic extensions K = M(xi):
 *
 *   I:   xi^4 - t^2 xi^2 + 1,                  any imaginary quadratic M
 *   II:  xi^4 - 4t xi^3 + (6t+2) xi^2 + 4t xi + 1, any imaginary quadratic M
 *   III: xi^4 - i*t xi^2 + 1,                  M = Q(i) only
 */
enum class FamilyId { I = 1, II = 2, III = 3 };

inline const char* family_name(FamilyId f) {
    switch (f) {
        case FamilyId::I: return "I";
        case FamilyId::II: return "II";
        case FamilyId::III: return "III";
    }
    throw std::invalid_argument("family_name: bad id");
}

inline FamilyId family_from_int(int n) {
    if (n < 1 || n > 3) {
        throw std::invalid_argument("family id must be 1, 2 or 3");
    }
    return static_cast<FamilyId>(n);
}

inline void check_family_ring(FamilyId family, RingSpec ring) {
    if (family == FamilyId::III && ring.d() != 1) {
        throw std::domain_error("family III requires D = 1");
    }
}

inline RelQuartic<QInt> minpoly(FamilyId family, const QInt& t) {
    check_family_ring(family, t.ring());
    const QInt zero = t.zero();
    const QInt one = t.one();
    switch (family) {
        case FamilyId::I:
            return {zero, -(t * t), zero, one};
        case FamilyId::II:
            return {t * -4, t * 6 + 2, t * 4, one};
        case FamilyId::III:
            return {zero, -(t.omega() * t), zero, one};
    }
    throw std::invalid_argument("minpoly: bad family");
}

// Same coefficients with the parameter left formal (variable T).
inline RelQuartic<FormalPoly> minpoly_formal(FamilyId family, RingSpec ring) {
    check_family_ring(family, ring);
    const FormalPoly t = FormalPoly::variable(ring, Var::T);
    const FormalPoly zero(ring);
    const FormalPoly one = FormalPoly::from_int(ring, 1);
    switch (family) {
        case FamilyId::I:
            return {zero, -(t * t), zero, one};
        case FamilyId::II:
            return {t * -4, t * 6 + one * 2, t * 4, one};
        case FamilyId::III:
            return {zero, -(t * QInt(ring, 0, 1)), zero, one};
    }
    throw std::invalid_argument("minpoly_formal: bad family");
}

inline BinaryQuarticForm<QInt> thue_form(FamilyId family, const QInt& t) {
    check_family_ring(family, t.ring());
    const QInt zero = t.zero();
    const QInt one = t.one();
    switch (family) {
        case FamilyId::I:
            return {one, zero, -(t * t), zero, one};
        case FamilyId::II:
            return {one, t * -4, t * 6 + 2, t * 4, one};
        case FamilyId::III:
            return {one, zero, -(t.omega() * t), zero, one};
    }
    throw std::invalid_argument("thue_form: bad family");
}

inline BinaryQuarticForm<FormalPoly> thue_form_formal(FamilyId family, RingSpec ring) {
    RelQuartic<FormalPoly> f = minpoly_formal(family, ring);
    // In all three families the Thue form has the same middle coefficients as f.
    return {f.a4, f.a1, f.a2, f.a3, f.a4};
}

/**
 * The recovery map (kx, ky, kz) in terms of a Thue solution (p, q), with the
 * unit k fixed to 1; the class of the output is independent of that choice
 * because any two k-values differ by a unit factor of the whole triple.
 */
inline GeneratorTriple<FormalPoly> recovery_map_formal(FamilyId family, RingSpec ring) {
    check_family_ring(family, ring);
    const FormalPoly t = FormalPoly::variable(ring, Var::T);
    const FormalPoly p = FormalPoly::variable(ring, Var::P);
    const FormalPoly q = FormalPoly::variable(ring, Var::Q);
    switch (family) {
        case FamilyId::I:
            return {p * p - t * t * q * q, p * q, q * q};
        case FamilyId::II:
            return {p * p - t * p * q * 4 + (t * 6 + FormalPoly::from_int(ring, 2)) * q * q,
                    p * q - t * q * q * 4, q * q};
        case FamilyId::III:
            return {p * p - (t * QInt(ring, 0, 1)) * q * q, p * q, q * q};
    }
    throw std::invalid_argument("recovery_map_formal: bad family");
}

inline GeneratorTriple<QInt> recover_xyz(FamilyId family, const QInt& t, const QInt& p,
                                         const QInt& q) {
    check_family_ring(family, t.ring());
    if (p.is_zero() && q.is_zero()) {
        throw std::invalid_argument("recover_xyz: zero pair");
    }
    GeneratorTriple<QInt> raw{t.zero(), t.zero(), t.zero()};
    switch (family) {
        case FamilyId::I:
            raw = {p * p - t * t * q * q, p * q, q * q};
            break;
        case FamilyId::II:
            raw = {p * p - t * p * q * 4 + (t * 6 + 2) * q * q, p * q - t * q * q * 4, q * q};
            break;
        case FamilyId::III:
            raw = {p * p - t.omega() * t * q * q, p * q, q * q};
            break;
    }
    auto canon = canonical_associate({raw.x, raw.y, raw.z});
    return {canon[0], canon[1], canon[2]};
}

// Base solution (x0, y0, z0) of the conic Q2 = 0 used by the parametrization.
inline GeneratorTriple<FormalPoly> conic_base_solution(FamilyId family, RingSpec ring) {
    check_family_ring(family, ring);
    const FormalPoly t = FormalPoly::variable(ring, Var::T);
    const FormalPoly zero(ring);
    const FormalPoly one = FormalPoly::from_int(ring, 1);
    switch (family) {
        case FamilyId::I:
            return {-(t * t), zero, one};
        case FamilyId::II:
            return {t * 6 + one * 2, zero, one};
        case FamilyId::III:
            return {one, zero, zero};
    }
    throw std::invalid_argument("conic_base_solution: bad family");
}

// The line through the base solution: (x, y, z) as polynomials in P, Q, R.
inline GeneratorTriple<FormalPoly> conic_line_parametrization(FamilyId family, RingSpec ring) {
    check_family_ring(family, ring);
    const FormalPoly t = FormalPoly::variable(ring, Var::T);
    const FormalPoly p = FormalPoly::variable(ring, Var::P);
    const FormalPoly q = FormalPoly::variable(ring, Var::Q);
    const FormalPoly r = FormalPoly::variable(ring, Var::R);
    switch (family) {
        case FamilyId::I:
            return {-(t * t) * r + p, q, r};
        case FamilyId::II:
            return {(t * 6 + FormalPoly::from_int(ring, 2)) * r + p, q, r};
        case FamilyId::III:
            return {r, p, q};
    }
    throw std::invalid_argument("conic_line_parametrization: bad family");
}

// What Q2 collapses to on that line; setting it to zero is the relation the
// recovery map substitutes back in (rp = q^2 and so on).
inline FormalPoly conic_line_residual(FamilyId family, RingSpec ring) {
    check_family_ring(family, ring);
    const FormalPoly t = FormalPoly::variable(ring, Var::T);
    const FormalPoly p = FormalPoly::variable(ring, Var::P);
    const FormalPoly q = FormalPoly::variable(ring, Var::Q);
    const FormalPoly r = FormalPoly::variable(ring, Var::R);
    switch (family) {
        case FamilyId::I:
            return q * q - r * p;
        case FamilyId::II:
            return q * q - r * (p - t * q * 4);
        case FamilyId::III:
            return p * p - r * q - (t * QInt(ring, 0, 1)) * q * q;
    }
    throw std::invalid_argument("conic_line_residual: bad family");
}

// One linear factor cu*U + cv*V of the resolvent form.
struct ResolventFactor {
    FormalPoly cu, cv;
};

/**
 * The three linear factors of F for the family, verified on construction:
 * the formal product must reproduce F built from the minimal polynomial.
 */
inline std::array<ResolventFactor, 3> resolvent_factorization(FamilyId family, RingSpec ring) {
    check_family_ring(family, ring);
    const FormalPoly t = FormalPoly::variable(ring, Var::T);
    const FormalPoly one = FormalPoly::from_int(ring, 1);
    const FormalPoly two = FormalPoly::from_int(ring, 2);
    auto factors = [&]() -> std::array<ResolventFactor, 3> {
        switch (family) {
            case FamilyId::I:
                return {{{one, -two}, {one, two}, {one, t * t}}};
            case FamilyId::II:
                return {{{one, two}, {one, t * 2 - two}, {one, -(t * 8 + two)}}};
            case FamilyId::III:
                return {{{one, t * QInt(ring, 0, 1)}, {one, -two}, {one, two}}};
        }
        throw std::invalid_argument("resolvent_factorization: bad family");
    }();

    const FormalPoly u = FormalPoly::variable(ring, Var::U);
    const FormalPoly v = FormalPoly::variable(ring, Var::V);
    FormalPoly product = one;
    for (const auto& f : factors) {
        product = product * (f.cu * u + f.cv * v);
    }
    auto forms = build_forms(minpoly_formal(family, ring));
    FormalPoly direct = forms.resolvent.eval(u, v);
    if (!(product - direct).is_zero()) {
        throw std::logic_error("resolvent_factorization: identity failure");
    }
    return factors;
}

namespace detail {

// Reducibility of a biquadratic x^4 + A x^2 + B over the field M: either the
// resolvent discriminant A^2 - 4B is a square in Z_M, or B = s^2 with one of
// +-2s - A a square (the (x^2+bx+c)(x^2-bx+c) split).
inline bool biquadratic_reducible(const QInt& A, const QInt& B) {
    if (sqrt_exact(A * A - B * 4)) {
        return true;
    }
    if (auto s = sqrt_exact(B)) {
        if (sqrt_exact(*s * 2 - A) || sqrt_exact(-(*s * 2) - A)) {
            return true;
        }
    }
    return false;
}

// Reducibility of a monic quartic with unit constant term over M. Monic
// factors of monic polynomials have coefficients in Z_M, so a linear factor
// means a unit root, and in a quadratic split (x^2+bx+c)(x^2+ex+g) the
// constant terms c, g are units with cg = a4; b and e are then pinned by
// b+e = a1, be = a2-c-g, leaving bg+ce = a3 to check.
inline bool unit_tail_quartic_reducible(const RelQuartic<QInt>& f) {
    if (!f.a4.is_unit()) {
        throw std::domain_error("irreducibility screen requires unit constant term");
    }
    const RingSpec ring = f.a4.ring();
    const auto us = units(ring);
    for (const QInt& r : us) {
        QInt value = ((((r + f.a1) * r + f.a2) * r) + f.a3) * r + f.a4;
        if (value.is_zero()) {
            return true;
        }
    }
    for (const QInt& c : us) {
        QInt g = f.a4 * c.unit_inverse();
        QInt s = f.a2 - c - g;
        auto disc = sqrt_exact(f.a1 * f.a1 - s * 4);
        if (!disc) {
            continue;
        }
        for (const QInt& delta : {*disc, -*disc}) {
            auto b = (f.a1 + delta).div_exact(2);
            if (!b) {
                continue;
            }
            QInt e = f.a1 - *b;
            if (*b * g + c * e == f.a3) {
                return true;
            }
        }
    }
    return false;
}

}  // namespace detail

/**
 * True when the family's minimal polynomial at t is irreducible over M.
 * Families I and III use the biquadratic criterion; family II tests all
 * monic factorizations, which is finite because the constant term is a unit.
 */
inline bool irreducibility_screen(FamilyId family, const QInt& t) {
    RelQuartic<QInt> f = minpoly(family, t);
    if (family == FamilyId::II) {
        return !detail::unit_tail_quartic_reducible(f);
    }
    return !detail::biquadratic_reducible(f.a2, f.a4);
}

/**
 * The three formal facts the reduction rests on:
 *   (a) Q2(recovery map) = 0,
 *   (b) Q1(recovery map) = Thue form in (P, Q),
 *   (c) Q2(line through the base point) = the stated conic relation.
 */
inline bool parametrization_identity_check(FamilyId family, RingSpec ring) {
    check_family_ring(family, ring);
    auto forms = build_forms(minpoly_formal(family, ring));
    auto rec = recovery_map_formal(family, ring);

    FormalPoly q2_of_rec = eval_ternary(forms.q2, rec);
    if (!q2_of_rec.is_zero()) {
        return false;
    }

    FormalPoly q1_of_rec = eval_ternary(forms.q1, rec);
    auto thue = thue_form_formal(family, ring);
    FormalPoly thue_pq = thue.eval(FormalPoly::variable(ring, Var::P),
                                   FormalPoly::variable(ring, Var::Q));
    if (!(q1_of_rec - thue_pq).is_zero()) {
        return false;
    }

    auto line = conic_line_parametrization(family, ring);
    FormalPoly q2_of_line = eval_ternary(forms.q2, line);
    if (!(q2_of_line - conic_line_residual(family, ring)).is_zero()) {
        return false;
    }
    return true;
}

}  // namespace relpib
