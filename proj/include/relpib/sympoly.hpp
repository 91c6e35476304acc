#pragma once

#include "relpib/ring.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>

namespace relpib {

// Fixed variable universe for the formal identities of the pipeline.
enum class Var : std::uint8_t { T = 0, P, Q, R, U, V, X, Y, Z };

inline constexpr std::size_t kVarCount = 9;
inline constexpr unsigned kDegreeGuard = 8;

inline const char* var_name(Var v) {
    static constexpr const char* names[kVarCount] = {"T", "P", "Q", "R", "U", "V", "X", "Y", "Z"};
    return names[static_cast<std::size_t>(v)];
}

using Monomial = std::array<std::uint8_t, kVarCount>;

/**
 * Sparse multivariate polynomial over Z_M in the variables above. Terms with
 * zero coefficient are never stored, so equality of polynomials is equality
 * of term maps. The degree in each variable is capped at kDegreeGuard; the
 * identities verified here are all tiny, anything past the cap is a bug.
 */
class FormalPoly {
public:
    explicit FormalPoly(RingSpec ring) : ring_(ring) {}

    static FormalPoly constant(const QInt& c) {
        FormalPoly p(c.ring());
        p.add_term(Monomial{}, c);
        return p;
    }

    static FormalPoly from_int(RingSpec ring, long n) {
        return constant(QInt(ring, n, 0));
    }

    static FormalPoly variable(RingSpec ring, Var v, unsigned degree = 1) {
        if (degree > kDegreeGuard) {
            throw std::domain_error("FormalPoly: degree guard exceeded");
        }
        FormalPoly p(ring);
        Monomial m{};
        m[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(degree);
        p.add_term(m, QInt(ring, 1, 0));
        return p;
    }

    RingSpec ring() const noexcept { return ring_; }
    const std::map<Monomial, QInt>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    FormalPoly zero() const { return FormalPoly(ring_); }
    FormalPoly one() const { return from_int(ring_, 1); }

    friend FormalPoly operator+(const FormalPoly& x, const FormalPoly& y) {
        check_same_ring(x, y);
        FormalPoly out = x;
        for (const auto& [m, c] : y.terms_) {
            out.add_term(m, c);
        }
        return out;
    }

    friend FormalPoly operator-(const FormalPoly& x, const FormalPoly& y) {
        check_same_ring(x, y);
        FormalPoly out = x;
        for (const auto& [m, c] : y.terms_) {
            out.add_term(m, -c);
        }
        return out;
    }

    FormalPoly operator-() const {
        FormalPoly out(ring_);
        for (const auto& [m, c] : terms_) {
            out.terms_.emplace(m, -c);
        }
        return out;
    }

    friend FormalPoly operator*(const FormalPoly& x, const FormalPoly& y) {
        check_same_ring(x, y);
        FormalPoly out(x.ring_);
        for (const auto& [mx, cx] : x.terms_) {
            for (const auto& [my, cy] : y.terms_) {
                out.add_term(mul_monomials(mx, my), cx * cy);
            }
        }
        return out;
    }

    FormalPoly operator*(const QInt& c) const {
        FormalPoly out(ring_);
        if (c.is_zero()) {
            return out;
        }
        for (const auto& [m, k] : terms_) {
            out.add_term(m, k * c);
        }
        return out;
    }

    FormalPoly operator*(long n) const { return *this * QInt(ring_, n, 0); }

    friend bool operator==(const FormalPoly& x, const FormalPoly& y) {
        return x.ring_ == y.ring_ && x.terms_ == y.terms_;
    }

    FormalPoly pow(unsigned e) const {
        FormalPoly r = one();
        for (unsigned i = 0; i < e; ++i) {
            r = r * *this;
        }
        return r;
    }

    // Exact composition; bindings must cover every variable appearing here.
    FormalPoly substitute(const std::map<Var, FormalPoly>& bindings) const {
        FormalPoly out(ring_);
        for (const auto& [m, c] : terms_) {
            FormalPoly term = constant(c);
            for (std::size_t i = 0; i < kVarCount; ++i) {
                if (m[i] == 0) {
                    continue;
                }
                auto it = bindings.find(static_cast<Var>(i));
                if (it == bindings.end()) {
                    throw std::invalid_argument(std::string("substitute: missing binding for ") +
                                                var_name(static_cast<Var>(i)));
                }
                term = term * it->second.pow(m[i]);
            }
            out = out + term;
        }
        return out;
    }

    // Exact evaluation at a ring point; must bind every variable appearing here.
    QInt eval(const std::map<Var, QInt>& point) const {
        QInt acc(ring_, 0, 0);
        for (const auto& [m, c] : terms_) {
            QInt term = c;
            for (std::size_t i = 0; i < kVarCount; ++i) {
                if (m[i] == 0) {
                    continue;
                }
                auto it = point.find(static_cast<Var>(i));
                if (it == point.end()) {
                    throw std::invalid_argument(std::string("eval: missing binding for ") +
                                                var_name(static_cast<Var>(i)));
                }
                term = term * it->second.pow(m[i]);
            }
            acc = acc + term;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) {
                out += " + ";
            }
            out += "(" + c.str() + ")";
            for (std::size_t i = 0; i < kVarCount; ++i) {
                if (m[i] == 0) {
                    continue;
                }
                out += "*";
                out += var_name(static_cast<Var>(i));
                if (m[i] > 1) {
                    out += "^" + std::to_string(m[i]);
                }
            }
        }
        return out;
    }

private:
    static void check_same_ring(const FormalPoly& x, const FormalPoly& y) {
        if (!(x.ring_ == y.ring_)) {
            throw std::invalid_argument("FormalPoly: mixed-ring operands");
        }
    }

    static Monomial mul_monomials(const Monomial& x, const Monomial& y) {
        Monomial out{};
        for (std::size_t i = 0; i < kVarCount; ++i) {
            unsigned e = static_cast<unsigned>(x[i]) + static_cast<unsigned>(y[i]);
            if (e > kDegreeGuard) {
                throw std::domain_error("FormalPoly: degree guard exceeded");
            }
            out[i] = static_cast<std::uint8_t>(e);
        }
        return out;
    }

    void add_term(const Monomial& m, const QInt& c) {
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            QInt sum = it->second + c;
            if (sum.is_zero()) {
                terms_.erase(it);
            } else {
                it->second = sum;
            }
        }
    }

    RingSpec ring_;
    std::map<Monomial, QInt> terms_;
};

inline bool is_zero(const FormalPoly& p) { return p.is_zero(); }

}  // namespace relpib
