#pragma once

#include "relpib/forms.hpp"
#include "relpib/ring.hpp"
#include "relpib/roots.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <vector>

namespace relpib {

/**
 * A solution of form(p, q) = rhs with rhs a unit, stored as the canonical
 * representative of the orbit {(eps p, eps q)}; rhs is the value achieved by
 * that representative (scaling by eps multiplies the value by eps^4).
 */
struct ThueSolution {
    QInt p, q, rhs;
};

struct SolveOptions {
    unsigned shards = 1;
};

template <RingElement R>
R eval_form(const BinaryQuarticForm<R>& form, const R& p, const R& q) {
    return form.eval(p, q);
}

namespace detail {

inline std::array<Integer, 4> pair_key(const QInt& p, const QInt& q) {
    return {p.a(), p.b(), q.a(), q.b()};
}

struct RawSolution {
    QInt p, q, rhs;
};

// All p with form(p, q) = rhs for one fixed q != 0, biquadratic case:
// solve the quadratic in p^2 exactly, then take exact square roots.
inline void biquadratic_p_for_q(const BinaryQuarticForm<QInt>& form, const QInt& q,
                                const QInt& rhs, std::vector<RawSolution>& out) {
    const QInt q2 = q * q;
    const QInt q4 = q2 * q2;
    const QInt mid = form.c22 * q2;
    const QInt disc = mid * mid - (form.c04 * q4 - rhs) * 4;
    auto s = sqrt_exact(disc);
    if (!s) {
        return;
    }
    for (const QInt& delta : {*s, -*s}) {
        auto p2 = (-mid + delta).div_exact(2);
        if (!p2) {
            continue;
        }
        auto p = sqrt_exact(*p2);
        if (!p) {
            continue;
        }
        for (const QInt& cand : {*p, -*p}) {
            if (form.eval(cand, q) == rhs) {
                out.push_back({cand, q, rhs});
            }
        }
    }
}

// General case: locate the four complex roots in p at certified precision,
// then accept only lattice neighbors that satisfy the equation exactly.
inline void general_p_for_q(const BinaryQuarticForm<QInt>& form, const QInt& q, const QInt& rhs,
                            std::vector<RawSolution>& out) {
    const RingSpec ring = q.ring();
    const QInt q2 = q * q;
    std::array<QInt, 4> coeffs{form.c31 * q, form.c22 * q2, form.c13 * q2 * q,
                               form.c04 * q2 * q2 - rhs};
    for (const auto& [a0, b0] : quartic_lattice_candidates(ring, coeffs)) {
        for (long da = -3; da <= 3; ++da) {
            for (long db = -3; db <= 3; ++db) {
                QInt cand(ring, a0 + da, b0 + db);
                if (form.eval(cand, q) == rhs) {
                    out.push_back({cand, q, rhs});
                }
            }
        }
    }
}

}  // namespace detail

// One representative per orbit {(eps p, eps q) : eps a unit}, in the
// canonical order, with rhs recomputed at the representative.
inline std::vector<ThueSolution> dedup_associates(const std::vector<ThueSolution>& sols,
                                                  const BinaryQuarticForm<QInt>& form) {
    std::map<std::array<Integer, 4>, ThueSolution> classes;
    for (const ThueSolution& s : sols) {
        auto canon = canonical_associate({s.p, s.q});
        QInt value = form.eval(canon[0], canon[1]);
        classes.emplace(detail::pair_key(canon[0], canon[1]),
                        ThueSolution{canon[0], canon[1], value});
    }
    std::vector<ThueSolution> out;
    out.reserve(classes.size());
    for (auto& [key, sol] : classes) {
        out.push_back(std::move(sol));
    }
    std::sort(out.begin(), out.end(), [](const ThueSolution& l, const ThueSolution& r) {
        std::array<QInt, 2> lv{l.p, l.q}, rv{r.p, r.q};
        return canonical_cmp(std::span<const QInt>(lv), std::span<const QInt>(rv)) < 0;
    });
    return out;
}

/**
 * Every associate class of (p, q) with norm(q) <= qnorm_bound whose form
 * value is one of rhs_units, by exact search: the biquadratic case goes
 * through the quadratic formula and exact square roots, the general case
 * through certified complex roots with exact verification. q = 0 forces p
 * to be a unit and is handled in closed form. The output is independent of
 * the shard count.
 */
inline std::vector<ThueSolution> solve_bounded(const BinaryQuarticForm<QInt>& form,
                                               RingSpec ring, const Integer& qnorm_bound,
                                               const std::vector<QInt>& rhs_units,
                                               SolveOptions opts = {}) {
    if (qnorm_bound < 0) {
        throw std::invalid_argument("solve_bounded: negative bound");
    }
    if (rhs_units.empty()) {
        throw std::invalid_argument("solve_bounded: empty right-hand-side list");
    }
    for (const QInt& rho : rhs_units) {
        if (!(rho.ring() == ring) || !rho.is_unit()) {
            throw std::invalid_argument("solve_bounded: right-hand sides must be units of the ring");
        }
    }
    if (!(form.c40 == QInt(ring, 1, 0))) {
        throw std::domain_error("solve_bounded: form must be monic in p");
    }

    std::vector<detail::RawSolution> raw;

    // q = 0: c40 p^4 = rhs forces p to be a unit.
    const QInt zero(ring, 0, 0);
    for (const QInt& p : units(ring)) {
        QInt value = form.eval(p, zero);
        for (const QInt& rho : rhs_units) {
            if (value == rho) {
                raw.push_back({p, zero, rho});
            }
        }
    }

    std::vector<QInt> qs = enumerate_norm_le(ring, qnorm_bound);
    std::erase_if(qs, [](const QInt& q) { return q.is_zero(); });

    const unsigned shards = std::max(1u, opts.shards);
    auto process = [&](const QInt& q, std::vector<detail::RawSolution>& sink) {
        for (const QInt& rho : rhs_units) {
            if (form.biquadratic()) {
                detail::biquadratic_p_for_q(form, q, rho, sink);
            } else {
                detail::general_p_for_q(form, q, rho, sink);
            }
        }
    };

    if (shards == 1) {
        for (const QInt& q : qs) {
            process(q, raw);
        }
    } else {
        std::vector<std::vector<detail::RawSolution>> buckets(shards);
        std::vector<std::thread> pool;
        pool.reserve(shards);
        for (unsigned s = 0; s < shards; ++s) {
            pool.emplace_back([&, s] {
                for (std::size_t i = s; i < qs.size(); i += shards) {
                    process(qs[i], buckets[s]);
                }
            });
        }
        for (auto& th : pool) {
            th.join();
        }
        for (auto& bucket : buckets) {
            raw.insert(raw.end(), bucket.begin(), bucket.end());
        }
    }

    std::vector<ThueSolution> sols;
    sols.reserve(raw.size());
    for (const auto& r : raw) {
        sols.push_back({r.p, r.q, r.rhs});
    }
    auto classes = dedup_associates(sols, form);

    for (const ThueSolution& s : classes) {  // soundness re-check
        if (!(form.eval(s.p, s.q) == s.rhs) || !s.rhs.is_unit()) {
            throw std::logic_error("solve_bounded: post-hoc verification failed");
        }
    }
    return classes;
}

}  // namespace relpib
