#pragma once

#include "relpib/integer.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace relpib {

enum class BasisMode { Sqrt, Half };

/**
 * The ring of integers Z_M of M = Q(sqrt(-D)), D > 0 squarefree, with
 * integral basis {1, w} where
 *
 *   w = sqrt(-D)          when D != 3 (mod 4)   (Sqrt mode)
 *   w = (1 + sqrt(-D))/2  when D == 3 (mod 4)   (Half mode)
 */
class RingSpec {
public:
    explicit RingSpec(unsigned d) : d_(d) {
        if (d == 0 || !is_squarefree(d)) {
            throw std::invalid_argument("RingSpec: D must be a positive squarefree integer");
        }
        mode_ = (d % 4 == 3) ? BasisMode::Half : BasisMode::Sqrt;
    }

    unsigned d() const noexcept { return d_; }
    BasisMode mode() const noexcept { return mode_; }

    // In Half mode w^2 = w - (1+D)/4.
    unsigned half_c() const noexcept { return (1 + d_) / 4; }

    friend bool operator==(const RingSpec&, const RingSpec&) = default;

private:
    unsigned d_;
    BasisMode mode_;
};

// Thrown by QInt::parse; position() is the byte offset of the offending input.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t pos)
        : std::runtime_error("parse error at " + std::to_string(pos) + ": " + what), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

/**
 * An element a + b*w of Z_M, with arbitrary-precision coordinates relative
 * to the integral basis {1, w}. Values are immutable after construction and
 * all operations are pure; mixed-ring operands are rejected.
 */
class QInt {
public:
    QInt(RingSpec ring, Integer a, Integer b)
        : ring_(ring), a_(std::move(a)), b_(std::move(b)) {}

    static QInt from_int(RingSpec ring, Integer n) { return QInt(ring, std::move(n), 0); }

    const RingSpec& ring() const noexcept { return ring_; }
    const Integer& a() const noexcept { return a_; }
    const Integer& b() const noexcept { return b_; }

    QInt zero() const { return QInt(ring_, 0, 0); }
    QInt one() const { return QInt(ring_, 1, 0); }
    QInt omega() const { return QInt(ring_, 0, 1); }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    Integer norm() const {
        if (ring_.mode() == BasisMode::Sqrt) {
            return a_ * a_ + Integer(ring_.d()) * b_ * b_;
        }
        return a_ * a_ + a_ * b_ + Integer(ring_.half_c()) * b_ * b_;
    }

    bool is_unit() const { return norm() == 1; }

    // Complex conjugate; stays in the ring in both basis modes.
    QInt conj() const {
        if (ring_.mode() == BasisMode::Sqrt) {
            return QInt(ring_, a_, -b_);
        }
        return QInt(ring_, a_ + b_, -b_);
    }

    // For units the inverse is the conjugate (x * conj(x) = norm(x) = 1).
    QInt unit_inverse() const {
        if (!is_unit()) {
            throw std::domain_error("QInt::unit_inverse: not a unit");
        }
        return conj();
    }

    friend QInt operator+(const QInt& x, const QInt& y) {
        check_same_ring(x, y);
        return QInt(x.ring_, x.a_ + y.a_, x.b_ + y.b_);
    }

    friend QInt operator-(const QInt& x, const QInt& y) {
        check_same_ring(x, y);
        return QInt(x.ring_, x.a_ - y.a_, x.b_ - y.b_);
    }

    QInt operator-() const { return QInt(ring_, -a_, -b_); }

    friend QInt operator*(const QInt& x, const QInt& y) {
        check_same_ring(x, y);
        if (x.ring_.mode() == BasisMode::Sqrt) {
            // w^2 = -D
            return QInt(x.ring_,
                        x.a_ * y.a_ - Integer(x.ring_.d()) * x.b_ * y.b_,
                        x.a_ * y.b_ + x.b_ * y.a_);
        }
        // w^2 = w - (1+D)/4
        return QInt(x.ring_,
                    x.a_ * y.a_ - Integer(x.ring_.half_c()) * x.b_ * y.b_,
                    x.a_ * y.b_ + x.b_ * y.a_ + x.b_ * y.b_);
    }

    QInt operator*(const Integer& k) const { return QInt(ring_, a_ * k, b_ * k); }
    QInt operator*(long k) const { return *this * Integer(k); }
    QInt operator+(long k) const { return QInt(ring_, a_ + k, b_); }
    QInt operator-(long k) const { return QInt(ring_, a_ - k, b_); }

    friend bool operator==(const QInt& x, const QInt& y) {
        return x.ring_ == y.ring_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    QInt pow(unsigned e) const {
        QInt r = one();
        for (unsigned i = 0; i < e; ++i) {
            r = r * *this;
        }
        return r;
    }

    // Exact division by a rational integer, or empty when not divisible.
    std::optional<QInt> div_exact(const Integer& k) const {
        if (k == 0) {
            throw std::domain_error("QInt::div_exact: division by zero");
        }
        if (a_ % k != 0 || b_ % k != 0) {
            return std::nullopt;
        }
        return QInt(ring_, a_ / k, b_ / k);
    }

    // Element grammar: "<a>", "<a>(+|-)<|b|>*w", or "<b>*w".
    std::string str() const {
        std::string out;
        if (b_ == 0) {
            return a_.str();
        }
        if (a_ != 0) {
            out += a_.str();
            out += (b_ < 0) ? '-' : '+';
            out += Integer(boost::multiprecision::abs(b_)).str();
        } else {
            out += b_.str();
        }
        out += "*w";
        return out;
    }

    static QInt parse(RingSpec ring, std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const QInt& x) { return os << x.str(); }

private:
    static void check_same_ring(const QInt& x, const QInt& y) {
        if (!(x.ring_ == y.ring_)) {
            throw std::invalid_argument("QInt: mixed-ring operands");
        }
    }

    RingSpec ring_;
    Integer a_, b_;
};

inline QInt QInt::parse(RingSpec ring, std::string_view text) {
    std::size_t pos = 0;
    auto peek = [&]() -> int { return pos < text.size() ? text[pos] : -1; };
    auto read_int = [&]() -> Integer {
        std::size_t start = pos;
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
            neg = (text[pos] == '-');
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (peek() == 'w') {
                throw parse_error("coefficient required before 'w' (write 1*w)", pos);
            }
            throw parse_error("expected integer", start);
        }
        std::size_t dstart = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        Integer v(std::string(text.substr(dstart, pos - dstart)));
        return neg ? Integer(-v) : v;
    };
    auto expect_w = [&]() {
        if (peek() != '*') {
            throw parse_error("expected '*w'", pos);
        }
        ++pos;
        if (peek() != 'w') {
            throw parse_error("expected 'w' after '*'", pos);
        }
        ++pos;
    };

    if (text.empty()) {
        throw parse_error("empty input", 0);
    }

    Integer first = read_int();
    if (pos == text.size()) {
        return QInt(ring, first, 0);
    }
    if (peek() == '*') {
        expect_w();
        if (pos != text.size()) {
            throw parse_error("trailing input", pos);
        }
        return QInt(ring, 0, first);
    }
    if (peek() == '+' || peek() == '-') {
        Integer second = read_int();
        expect_w();
        if (pos != text.size()) {
            throw parse_error("trailing input", pos);
        }
        return QInt(ring, first, second);
    }
    throw parse_error("expected '+', '-' or '*w'", pos);
}

// Exactly the elements of norm 1, in a fixed order:
//   {1, -1, w, -w}           for D = 1
//   {1, -1, w, -w, w-1, 1-w} for D = 3
//   {1, -1}                  otherwise
inline std::vector<QInt> units(RingSpec ring) {
    QInt one(ring, 1, 0);
    QInt w(ring, 0, 1);
    std::vector<QInt> us{one, -one};
    if (ring.d() == 1) {
        us.push_back(w);
        us.push_back(-w);
    } else if (ring.d() == 3) {
        QInt wm1(ring, -1, 1);
        us.push_back(w);
        us.push_back(-w);
        us.push_back(wm1);
        us.push_back(-wm1);
    }
    return us;
}

/**
 * Total order used to pick orbit representatives: smaller norm first, then
 * less w-content (|b|), smaller |a|, and nonnegative coordinates preferred.
 * Within a unit orbit the norm never discriminates, so the later components
 * do the work. Returns <0, 0 or >0.
 */
inline int canonical_cmp(const QInt& x, const QInt& y) {
    using boost::multiprecision::abs;
    Integer nx = x.norm(), ny = y.norm();
    if (nx != ny) return nx < ny ? -1 : 1;
    Integer abx = abs(x.b()), aby = abs(y.b());
    if (abx != aby) return abx < aby ? -1 : 1;
    Integer aax = abs(x.a()), aay = abs(y.a());
    if (aax != aay) return aax < aay ? -1 : 1;
    int sx = x.a() < 0, sy = y.a() < 0;
    if (sx != sy) return sx < sy ? -1 : 1;
    sx = x.b() < 0, sy = y.b() < 0;
    if (sx != sy) return sx < sy ? -1 : 1;
    return 0;
}

inline int canonical_cmp(std::span<const QInt> x, std::span<const QInt> y) {
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (int c = canonical_cmp(x[i], y[i]); c != 0) {
            return c;
        }
    }
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    return 0;
}

inline bool canonical_less(const QInt& x, const QInt& y) { return canonical_cmp(x, y) < 0; }

/**
 * Representative of the orbit {eps * v : eps a unit}: the minimum under the
 * coordinatewise canonical order. Constant on orbits and idempotent; rejects
 * the all-zero vector.
 */
inline std::vector<QInt> canonical_associate(const std::vector<QInt>& v) {
    if (v.empty()) {
        throw std::invalid_argument("canonical_associate: empty vector");
    }
    bool all_zero = true;
    for (const QInt& x : v) {
        if (!(x.ring() == v.front().ring())) {
            throw std::invalid_argument("canonical_associate: mixed-ring coordinates");
        }
        all_zero = all_zero && x.is_zero();
    }
    if (all_zero) {
        throw std::invalid_argument("canonical_associate: all-zero vector");
    }
    std::vector<QInt> best;
    for (const QInt& eps : units(v.front().ring())) {
        std::vector<QInt> cand;
        cand.reserve(v.size());
        for (const QInt& x : v) {
            cand.push_back(eps * x);
        }
        if (best.empty() || canonical_cmp(cand, best) < 0) {
            best = std::move(cand);
        }
    }
    return best;
}

/**
 * Exact square root: r with r*r = x if one exists in the ring, as the
 * canonical representative of {r, -r}; empty otherwise. Works entirely in
 * integer arithmetic: the norm pins |r|^2, the real part of the square pins
 * the coordinates up to sign, and every candidate is verified by squaring.
 */
inline std::optional<QInt> sqrt_exact(const QInt& x) {
    const RingSpec ring = x.ring();
    if (x.is_zero()) {
        return x;
    }
    const Integer d(ring.d());
    std::optional<QInt> root;
    auto try_root = [&](const Integer& ra, const Integer& rb) {
        QInt r(ring, ra, rb);
        if (r * r == x) {
            root = r;
        }
    };
    if (ring.mode() == BasisMode::Sqrt) {
        // r = c + e*sqrt(-D): c^2 + D e^2 = sqrt(norm x), c^2 - D e^2 = a.
        auto s = isqrt_exact(x.norm());
        if (!s) {
            return std::nullopt;
        }
        Integer two_c2 = *s + x.a();
        Integer two_de2 = *s - x.a();
        if (two_c2 % 2 != 0 || two_de2 % 2 != 0) {
            return std::nullopt;
        }
        Integer de2 = two_de2 / 2;
        if (de2 % d != 0) {
            return std::nullopt;
        }
        auto c = isqrt_exact(two_c2 / 2);
        auto e = isqrt_exact(de2 / d);
        if (!c || !e) {
            return std::nullopt;
        }
        for (int sc : {1, -1}) {
            for (int se : {1, -1}) {
                try_root(*c * sc, *e * se);
            }
        }
    } else {
        // Doubled coordinates over sqrt(-D): x = (g + h*sqrt(-D))/2 and
        // r = (e + f*sqrt(-D))/2 with e == f (mod 2); then
        // e^2 + D f^2 = 2*sqrt(g^2 + D h^2), e^2 - D f^2 = 2g, e*f = h.
        Integer g = 2 * x.a() + x.b();
        Integer h = x.b();
        auto s0 = isqrt_exact(g * g + d * h * h);
        if (!s0) {
            return std::nullopt;
        }
        Integer e2 = *s0 + g;
        Integer df2 = *s0 - g;
        if (df2 % d != 0) {
            return std::nullopt;
        }
        auto e = isqrt_exact(e2);
        auto f = isqrt_exact(df2 / d);
        if (!e || !f) {
            return std::nullopt;
        }
        for (int se : {1, -1}) {
            for (int sf : {1, -1}) {
                Integer ee = *e * se, ff = *f * sf;
                if ((ee - ff) % 2 != 0) {
                    continue;
                }
                try_root((ee - ff) / 2, ff);
            }
        }
    }
    if (!root) {
        return std::nullopt;
    }
    QInt neg = -*root;
    return canonical_cmp(*root, neg) <= 0 ? *root : neg;
}

/**
 * All elements with norm <= bound, each exactly once, ordered by (b, a)
 * ascending. The count grows linearly in the bound.
 */
inline std::vector<QInt> enumerate_norm_le(RingSpec ring, const Integer& bound) {
    if (bound < 0) {
        throw std::invalid_argument("enumerate_norm_le: negative bound");
    }
    std::vector<QInt> out;
    const Integer d(ring.d());
    if (ring.mode() == BasisMode::Sqrt) {
        Integer bmax = isqrt_floor(bound / d);
        for (Integer b = -bmax; b <= bmax; ++b) {
            Integer amax = isqrt_floor(bound - d * b * b);
            for (Integer a = -amax; a <= amax; ++a) {
                out.emplace_back(ring, a, b);
            }
        }
    } else {
        // norm = ((2a+b)^2 + D b^2) / 4, so (2a+b)^2 <= 4*bound - D b^2.
        Integer bmax = isqrt_floor(4 * bound / d);
        for (Integer b = -bmax; b <= bmax; ++b) {
            Integer rest = 4 * bound - d * b * b;
            if (rest < 0) {
                continue;
            }
            Integer r = isqrt_floor(rest);
            Integer lo = ceil_div(-b - r, 2);
            Integer hi = floor_div(-b + r, 2);
            for (Integer a = lo; a <= hi; ++a) {
                out.emplace_back(ring, a, b);
            }
        }
    }
    return out;
}

}  // namespace relpib
