#pragma once

// The tropicalized crystal on Z^6: statistics wt_i/eps_i, the operator
// updates Xi_1..Xi_5 and Psi_0..Psi_5 (hand max-expressions and the
// auto-derived tropicalizations of the geometric multipliers), the bijection
// Omega to B_infinity, the case classification driving e0, and exhaustive
// box verification that Omega is an isomorphism of crystals.

#include "gcrystal/d43.hpp"
#include "gcrystal/geometric.hpp"
#include "gcrystal/tropical.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace gcrystal {
namespace ud {

using std::int64_t;

using UDPoint = std::array<int64_t, 6>;

struct GreekVector {
    int64_t alpha, beta, gamma, delta, eps, phi, psi, xi;
    std::array<int64_t, 8> as_array() const {
        return {alpha, beta, gamma, delta, eps, phi, psi, xi};
    }
};

inline GreekVector greek(const UDPoint& x) {
    GreekVector g;
    g.alpha = 2 * x[0] + 3 * x[2] + x[3];
    g.beta = x[1] + 3 * x[2] + 2 * x[3] + x[5];
    g.gamma = x[0] + x[1] + 3 * x[3];
    g.delta = x[0] + x[1] + x[2] + 2 * x[3] + x[4];
    g.eps = x[0] + x[1] + 2 * x[2] + x[3] + 2 * x[4];
    g.phi = x[0] + 3 * x[2] + 2 * x[3];
    g.psi = x[0] + x[1] + 3 * x[2] + 3 * x[4];
    g.xi = x[0] + x[1] + 3 * x[2] + x[3] + x[5];
    // delta and eps are convex combinations of gamma and psi
    if (3 * g.delta != 2 * g.gamma + g.psi || 3 * g.eps != g.gamma + 2 * g.psi)
        throw std::logic_error("greek: interpolation identities violated");
    return g;
}

inline int64_t max8(const GreekVector& g) {
    auto a = g.as_array();
    return *std::max_element(a.begin(), a.end());
}

inline int64_t ud_wt(size_t i, const UDPoint& x) {
    switch (i) {
        case 0: return 2 * x[0] - x[1] - x[3] - x[5];
        case 1: return 2 * (x[1] + x[3] + x[5]) - x[0] - 3 * x[2] - 3 * x[4];
        case 2: return 2 * (x[2] + x[4]) - x[1] - x[3] - x[5];
    }
    throw std::invalid_argument("ud_wt: index must be 0, 1 or 2");
}

inline int64_t ud_eps(size_t i, const UDPoint& x) {
    switch (i) {
        case 0: return max8(greek(x)) - (3 * x[0] + 3 * x[2] + x[3]);
        case 1:
            return std::max({x[0] - x[1], x[0] + 3 * x[2] - 2 * x[1] - x[3],
                             x[0] + 3 * x[2] + 3 * x[4] - 2 * x[1] - 2 * x[3] - x[5]});
        case 2: return std::max(x[1] - x[2], x[1] + x[3] - 2 * x[2] - x[4]);
    }
    throw std::invalid_argument("ud_eps: index must be 0, 1 or 2");
}

// phi is not displayed for the tropical side; the crystal axiom defines it.
inline int64_t ud_phi(size_t i, const UDPoint& x) { return ud_eps(i, x) + ud_wt(i, x); }

// ---------------------------------------------------------------------------
// Hand-coded operator updates
// ---------------------------------------------------------------------------

namespace detail {

struct Xi1Branches {
    int64_t A, B, C;
};
inline Xi1Branches xi1_branches(const UDPoint& x) {
    return {x[0] - x[1], x[0] + 3 * x[2] - 2 * x[1] - x[3],
            x[0] + 3 * x[2] + 3 * x[4] - 2 * x[1] - 2 * x[3] - x[5]};
}

}  // namespace detail

// Xi_j with the tropical parameter value substituted (+1 for e, -1 for f).
inline int64_t xi_hand(size_t j, int64_t c, const UDPoint& x) {
    auto [A, B, C] = detail::xi1_branches(x);
    int64_t L = x[1] - x[2], M = x[1] + x[3] - 2 * x[2] - x[4];
    switch (j) {
        case 1: return std::max({c + A, B, C}) - std::max({A, B, C});
        case 3: return std::max({c + A, c + B, C}) - std::max({c + A, B, C});
        case 5: return std::max({c + A, c + B, c + C}) - std::max({c + A, c + B, C});
        case 2: return std::max(c + L, M) - std::max(L, M);
        case 4: return std::max(c + L, c + M) - std::max(c + L, M);
    }
    throw std::invalid_argument("xi_hand: j must be 1..5");
}

namespace detail {

// The four tropicalized e0 polynomials at c = 1, as maxima over the
// greek forms with the displayed shifts.
inline int64_t D1(const GreekVector& g) {
    return std::max({2 + g.alpha, g.beta, 1 + g.gamma, 1 + g.delta, 1 + g.eps, 1 + g.phi,
                     1 + g.psi, 1 + g.xi});
}
inline int64_t F1(const GreekVector& g) {
    return std::max({1 + g.alpha, g.beta, 1 + g.gamma, 1 + g.delta, 1 + g.eps, g.phi,
                     1 + g.psi, 1 + g.xi});
}
inline int64_t G1(const GreekVector& g) {
    return std::max({1 + g.alpha, g.beta, g.gamma, 1 + g.delta, 1 + g.eps, g.phi, 1 + g.psi,
                     1 + g.xi});
}
inline int64_t H1(const GreekVector& g) {
    return std::max({1 + g.alpha, g.beta, g.gamma, g.delta, g.eps, g.phi, g.psi, 1 + g.xi});
}

}  // namespace detail

// Psi_j as printed (j = 3 included verbatim even though its display is
// self-cancelling; see psi_hand below for the authoritative variant).
inline int64_t psi_hand_printed(size_t j, const UDPoint& x) {
    GreekVector g = greek(x);
    int64_t m = max8(g);
    switch (j) {
        case 0: return detail::D1(g) - m - 1;
        case 1: return detail::F1(g) - m - 1;
        case 2: return detail::G1(g) - m - 1;
        case 3: return detail::D1(g) + detail::H1(g) - detail::H1(g) - detail::G1(g) - 2;
        case 4: return detail::D1(g) - detail::G1(g) - 1;
        case 5: return detail::D1(g) - detail::H1(g) - 1;
    }
    throw std::invalid_argument("psi_hand_printed: j must be 0..5");
}

// Authoritative Psi_j: identical to the printed display except j = 3, which
// is the tropicalization of the x3-multiplier D*H/(c^2*E*F) at c = 1.
inline int64_t psi_hand(size_t j, const UDPoint& x) {
    if (j != 3) return psi_hand_printed(j, x);
    GreekVector g = greek(x);
    return detail::D1(g) + detail::H1(g) - max8(g) - detail::F1(g) - 2;
}

// ---------------------------------------------------------------------------
// Auto-derivation from the symbolic geometric crystal
// ---------------------------------------------------------------------------

struct DerivedUpdates {
    // update[k] = UD of the x_k multiplier of e_i^c; c is a live variable.
    std::array<PLFunction, 6> update;
};

inline const DerivedUpdates& auto_derive(size_t i) {
    static const auto build = [](size_t idx) {
        DerivedUpdates d;
        const GeomSymbolic& g = geom_symbolic(idx);
        for (size_t k = 0; k < 6; ++k) d.update[k] = ultra_discretize(g.multiplier[k]);
        return d;
    };
    static const DerivedUpdates d0 = build(0);
    static const DerivedUpdates d1 = build(1);
    static const DerivedUpdates d2 = build(2);
    if (i > 2) throw std::invalid_argument("auto_derive: index must be 0, 1 or 2");
    return i == 0 ? d0 : i == 1 ? d1 : d2;
}

namespace detail {

struct CompiledUpdates {
    std::array<CompiledPL, 6> update;
};

inline const CompiledUpdates& compiled_updates(size_t i, int64_t c) {
    static const auto build = [](size_t idx, int64_t cval) {
        CompiledUpdates cu;
        const DerivedUpdates& d = auto_derive(idx);
        for (size_t k = 0; k < 6; ++k)
            cu.update[k] = CompiledPL(d.update[k].substituted("c", cval), geom_variables());
        return cu;
    };
    static const std::array<CompiledUpdates, 3> plus = {build(0, 1), build(1, 1), build(2, 1)};
    static const std::array<CompiledUpdates, 3> minus = {build(0, -1), build(1, -1), build(2, -1)};
    if (i > 2) throw std::invalid_argument("compiled_updates: index must be 0, 1 or 2");
    return c > 0 ? plus[i] : minus[i];
}

}  // namespace detail

// The derived operator: x_k += UD(multiplier_k)|_{c=cval}(x).
inline UDPoint ud_apply_derived(size_t i, int64_t cval, const UDPoint& x) {
    const auto& cu = detail::compiled_updates(i, cval);
    UDPoint out;
    for (size_t k = 0; k < 6; ++k) out[k] = x[k] + cu.update[k].eval(x.data());
    return out;
}

inline UDPoint ud_e(size_t i, const UDPoint& x) {
    UDPoint r = x;
    if (i == 1) {
        r[1] += xi_hand(1, 1, x);
        r[3] += xi_hand(3, 1, x);
        r[5] += xi_hand(5, 1, x);
    } else if (i == 2) {
        r[2] += xi_hand(2, 1, x);
        r[4] += xi_hand(4, 1, x);
    } else if (i == 0) {
        for (size_t k = 0; k < 6; ++k) r[k] += psi_hand(k, x);
    } else {
        throw std::invalid_argument("ud_e: index must be 0, 1 or 2");
    }
    return r;
}

inline UDPoint ud_f(size_t i, const UDPoint& x) {
    UDPoint r = x;
    if (i == 1) {
        r[1] += xi_hand(1, -1, x);
        r[3] += xi_hand(3, -1, x);
        r[5] += xi_hand(5, -1, x);
    } else if (i == 2) {
        r[2] += xi_hand(2, -1, x);
        r[4] += xi_hand(4, -1, x);
    } else if (i == 0) {
        // no printed display for f0: the derived tropicalization at c = -1
        r = ud_apply_derived(0, -1, x);
    } else {
        throw std::invalid_argument("ud_f: index must be 0, 1 or 2");
    }
    return r;
}

// ---------------------------------------------------------------------------
// Omega
// ---------------------------------------------------------------------------

inline d43::Elem omega(const UDPoint& x) {
    return {x[5], x[4] - x[5], x[3] - 2 * x[4], 2 * x[2] - x[3], x[1] - x[2], x[0] - x[1]};
}

inline UDPoint omega_inv(const d43::Elem& b) {
    d43::require_parity(b);
    int64_t h = (b[2] + b[3]) / 2;
    return {b[0] + b[1] + h + b[4] + b[5],
            b[0] + b[1] + h + b[4],
            b[0] + b[1] + h,
            2 * b[0] + 2 * b[1] + b[2],
            b[0] + b[1],
            b[0]};
}

// ---------------------------------------------------------------------------
// Case classification for e0
// ---------------------------------------------------------------------------

struct CaseResult {
    int tag;                      // 1..6, the (e-tag)
    std::array<int64_t, 6> psi;   // the Psi vector the case implies
};

inline CaseResult case_classify(const UDPoint& x) {
    GreekVector g = greek(x);
    int64_t a = g.alpha, b = g.beta, c = g.gamma, d = g.delta, e = g.eps, f = g.phi, p = g.psi,
            q = g.xi;
    bool cond[6] = {
        b > a && b > c && b > d && b > e && b > f && b > p && b > q,
        f >= b && f > a && f > c && f > d && f > e && f > p && f > q,
        c >= b && c >= f && c > a && c > d && c > e && c > p && c > q,
        p >= b && p >= c && p >= d && p >= e && p >= f && p > a && p > q,
        q >= b && q >= c && q >= d && q >= e && q >= f && q >= p && q > a,
        a >= b && a >= c && a >= d && a >= e && a >= f && a >= p && a >= q,
    };
    static const std::array<std::array<int64_t, 6>, 6> table = {{
        {-1, -1, -1, -2, -1, -1},
        {0, -1, -1, -1, 0, 0},
        {0, 0, -1, -2, 0, 0},
        {0, 0, 0, -2, -1, 0},
        {0, 0, 0, -1, -1, -1},
        {1, 0, 0, 0, 0, 0},
    }};
    int found = -1;
    for (int k = 0; k < 6; ++k) {
        if (!cond[k]) continue;
        if (found >= 0) throw std::logic_error("case_classify: conditions overlap");
        found = k;
    }
    if (found < 0) throw std::logic_error("case_classify: no condition fires");
    return {found + 1, table[found]};
}

// ---------------------------------------------------------------------------
// Exhaustive verification on boxes
// ---------------------------------------------------------------------------

struct IsoCounterexample {
    UDPoint x{};
    size_t index = 0;
    std::string check;  // "e-commute" | "f-commute" | "eps" | "wt"
};

struct IsoReport {
    bool verified = true;
    std::uint64_t points = 0;
    std::uint64_t checks = 0;
    int64_t box = 0;
    std::vector<size_t> ops;
    std::optional<IsoCounterexample> counterexample;
};

namespace detail {

inline std::optional<IsoCounterexample> check_point(const UDPoint& x,
                                                    const std::vector<size_t>& ops) {
    d43::Ctx inf = d43::Ctx::infinity();
    d43::Elem b = omega(x);
    for (size_t i : ops) {
        auto be = d43::e_tilde(i, b, inf);
        if (!be || omega(ud_e(i, x)) != *be) return IsoCounterexample{x, i, "e-commute"};
        auto bf = d43::f_tilde(i, b, inf);
        if (!bf || omega(ud_f(i, x)) != *bf) return IsoCounterexample{x, i, "f-commute"};
        if (d43::eps(i, b, inf) != ud_eps(i, x)) return IsoCounterexample{x, i, "eps"};
        if (d43::phi(i, b, inf) - d43::eps(i, b, inf) != ud_wt(i, x))
            return IsoCounterexample{x, i, "wt"};
    }
    return std::nullopt;
}

struct SliceResult {
    std::uint64_t points = 0;
    std::optional<IsoCounterexample> counterexample;
};

inline SliceResult scan_slice(int64_t x0_lo, int64_t x0_hi, int64_t stride, int64_t B,
                              const std::vector<size_t>& ops) {
    SliceResult res;
    for (int64_t x0 = x0_lo; x0 <= x0_hi; x0 += stride) {
        UDPoint x;
        x[0] = x0;
        for (x[1] = -B; x[1] <= B; ++x[1])
            for (x[2] = -B; x[2] <= B; ++x[2])
                for (x[3] = -B; x[3] <= B; ++x[3])
                    for (x[4] = -B; x[4] <= B; ++x[4])
                        for (x[5] = -B; x[5] <= B; ++x[5]) {
                            ++res.points;
                            auto bad = check_point(x, ops);
                            if (bad) {
                                res.counterexample = bad;
                                return res;
                            }
                        }
    }
    return res;
}

}  // namespace detail

inline IsoReport verify_iso(int64_t B, const std::vector<size_t>& ops = {0, 1, 2},
                            unsigned jobs = 1, std::uint64_t cap = kDefaultBoxCap) {
    if (B < 1) throw std::invalid_argument("verify_iso: box radius must be >= 1");
    std::uint64_t side = static_cast<std::uint64_t>(2 * B + 1);
    std::uint64_t total = 1;
    for (int k = 0; k < 6; ++k) {
        if (total > cap / side) throw std::invalid_argument("verify_iso: box exceeds point cap");
        total *= side;
    }
    for (size_t i : ops)
        if (i > 2) throw std::invalid_argument("verify_iso: operator index out of range");

    IsoReport rep;
    rep.box = B;
    rep.ops = ops;

    unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(side)));
    std::vector<detail::SliceResult> results(n);
    if (n == 1) {
        results[0] = detail::scan_slice(-B, B, 1, B, ops);
    } else {
        std::vector<std::thread> threads;
        for (unsigned s = 0; s < n; ++s)
            threads.emplace_back([&, s]() {
                results[s] = detail::scan_slice(-B + static_cast<int64_t>(s), B,
                                                static_cast<int64_t>(n), B, ops);
            });
        for (auto& t : threads) t.join();
    }

    for (const auto& r : results) rep.points += r.points;
    const IsoCounterexample* best = nullptr;
    for (const auto& r : results) {
        if (!r.counterexample) continue;
        if (!best || r.counterexample->x < best->x) best = &*r.counterexample;
    }
    if (best) {
        rep.verified = false;
        rep.counterexample = *best;
    }
    rep.checks = rep.points * ops.size() * 4;
    return rep;
}

// ---------------------------------------------------------------------------
// Convexity facts: the 8-term max collapses to 6 terms, and the general
// interpolation lemma behind it.
// ---------------------------------------------------------------------------

struct ConvexityReport {
    bool eight_equals_six = true;
    std::optional<UDPoint> counterexample;
    std::uint64_t points = 0;
    bool lemma_holds = true;
    int lemma_samples = 0;
    std::string lemma_counterexample;
};

inline ConvexityReport convexity_check(int64_t B, int lemma_samples, std::uint64_t seed) {
    ConvexityReport rep;
    UDPoint x;
    for (x[0] = -B; x[0] <= B; ++x[0])
        for (x[1] = -B; x[1] <= B; ++x[1])
            for (x[2] = -B; x[2] <= B; ++x[2])
                for (x[3] = -B; x[3] <= B; ++x[3])
                    for (x[4] = -B; x[4] <= B; ++x[4])
                        for (x[5] = -B; x[5] <= B; ++x[5]) {
                            ++rep.points;
                            GreekVector g = greek(x);
                            int64_t six = std::max(
                                {g.alpha, g.beta, g.gamma, g.phi, g.psi, g.xi});
                            if (max8(g) != six) {
                                rep.eight_equals_six = false;
                                if (!rep.counterexample) rep.counterexample = x;
                            }
                        }

    // max(m_1..m_k, sum t_i m_i) = max(m_1..m_k) for t_i >= 0, sum t_i = 1.
    std::mt19937_64 rng(seed);
    rep.lemma_samples = lemma_samples;
    for (int s = 0; s < lemma_samples; ++s) {
        size_t k = 2 + rng() % 5;
        std::vector<Rational> m;
        for (size_t t = 0; t < k; ++t) {
            long num = static_cast<long>(rng() % 41) - 20;
            long den = static_cast<long>(1 + rng() % 9);
            m.emplace_back(num, den);
        }
        std::vector<long> w;
        long wsum = 0;
        for (size_t t = 0; t < k; ++t) {
            w.push_back(static_cast<long>(rng() % 10));
            wsum += w.back();
        }
        if (wsum == 0) {
            w[0] = 1;
            wsum = 1;
        }
        Rational mix(0);
        Rational mx = m[0];
        for (size_t t = 0; t < k; ++t) {
            mix += Rational(w[t], wsum) * m[t];
            if (m[t] > mx) mx = m[t];
        }
        Rational with_mix = mix > mx ? mix : mx;
        if (!(with_mix == mx)) {
            rep.lemma_holds = false;
            rep.lemma_counterexample = "sample " + std::to_string(s);
            break;
        }
    }
    return rep;
}

}  // namespace ud
}  // namespace gcrystal
