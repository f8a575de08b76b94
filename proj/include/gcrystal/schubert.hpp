#pragma once

// Generic Schubert-cell geometric crystal formulas for a word i_1..i_k:
// the one-parameter action e_i^c on the torus coordinates, and the rational
// functions epsilon_i and gamma_i. Also the Verma-relation checker that
// exercises these actions numerically at random positive rational points.

#include "gcrystal/cartan.hpp"
#include "gcrystal/expr.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gcrystal {

inline std::vector<std::string> default_position_names(size_t k) {
    std::vector<std::string> names;
    for (size_t m = 1; m <= k; ++m) names.push_back("c" + std::to_string(m));
    return names;
}

namespace detail {

// 1 / (c_1^{a_{i_1,i}} ... c_{m-1}^{a_{i_{m-1},i}} c_m), position m is 0-based.
inline PosRatExpr schubert_partial(const CartanData& cartan, const Word& word, size_t i, size_t m,
                                   const std::vector<std::string>& names) {
    Monomial mono;
    mono.coeff = Rational(1);
    for (size_t t = 0; t < m; ++t) {
        int a = cartan.a(word.at(t), i);
        if (a != 0) mono.exps[names[t]] -= a;
    }
    mono.exps[names[m]] -= 1;
    for (auto it = mono.exps.begin(); it != mono.exps.end();) {
        if (it->second == 0) it = mono.exps.erase(it);
        else ++it;
    }
    return PosRatExpr::monomial(mono);
}

}  // namespace detail

// The tuple (C_1, ..., C_k) of the action e_i^c as rational expressions in
// the parameter and the position variables. Positions whose index differs
// from i keep their coordinate unchanged.
inline std::vector<PosRatExpr> schubert_action(const CartanData& cartan, const Word& word, size_t i,
                                               const std::vector<std::string>& names,
                                               const std::string& cname = "c") {
    if (i >= cartan.rank()) throw std::invalid_argument("schubert_action: index not in I");
    size_t k = word.length();
    std::vector<size_t> matching;
    std::vector<PosRatExpr> partial;
    for (size_t m = 0; m < k; ++m)
        if (word.at(m) == i) {
            matching.push_back(m);
            partial.push_back(detail::schubert_partial(cartan, word, i, m, names));
        }

    PosRatExpr cvar = PosRatExpr::variable(cname);
    std::vector<PosRatExpr> out;
    for (size_t j = 0; j < k; ++j) {
        if (word.at(j) != i) {
            out.push_back(PosRatExpr::variable(names[j]));
            continue;
        }
        // numerator: factor c for m <= j; denominator: factor c for m < j.
        std::optional<PosRatExpr> numer, denom;
        for (size_t t = 0; t < matching.size(); ++t) {
            size_t m = matching[t];
            PosRatExpr n_term = m <= j ? cvar * partial[t] : partial[t];
            PosRatExpr d_term = m < j ? cvar * partial[t] : partial[t];
            numer = numer ? *numer + n_term : n_term;
            denom = denom ? *denom + d_term : d_term;
        }
        out.push_back(PosRatExpr::variable(names[j]) * *numer / *denom);
    }
    return out;
}

inline PosRatExpr schubert_epsilon(const CartanData& cartan, const Word& word, size_t i,
                                   const std::vector<std::string>& names) {
    if (i >= cartan.rank()) throw std::invalid_argument("schubert_epsilon: index not in I");
    std::optional<PosRatExpr> sum;
    for (size_t m = 0; m < word.length(); ++m) {
        if (word.at(m) != i) continue;
        PosRatExpr p = detail::schubert_partial(cartan, word, i, m, names);
        sum = sum ? *sum + p : p;
    }
    if (!sum)
        throw std::domain_error("schubert_epsilon: index " + cartan.labels[i] +
                                " does not occur in the word");
    return *sum;
}

inline PosRatExpr schubert_gamma(const CartanData& cartan, const Word& word, size_t i,
                                 const std::vector<std::string>& names) {
    if (i >= cartan.rank()) throw std::invalid_argument("schubert_gamma: index not in I");
    Monomial mono;
    mono.coeff = Rational(1);
    for (size_t m = 0; m < word.length(); ++m) {
        int a = cartan.a(word.at(m), i);
        if (a != 0) mono.exps[names[m]] += a;
    }
    for (auto it = mono.exps.begin(); it != mono.exps.end();) {
        if (it->second == 0) it = mono.exps.erase(it);
        else ++it;
    }
    return PosRatExpr::monomial(mono);
}

// ---------------------------------------------------------------------------
// Verma relations
// ---------------------------------------------------------------------------

using PointMap = std::map<std::string, Rational>;

// An evaluable family of one-parameter actions e_i^c on named coordinates.
struct VermaAction {
    std::vector<std::string> variables;
    std::function<PointMap(size_t index, const Rational& c, const PointMap& point)> apply;
};

struct VermaFactor {
    bool first_index;  // true: acts with i, false: with j
    int p, q;          // parameter c1^p c2^q
};

struct VermaRelation {
    std::string name;
    std::vector<VermaFactor> lhs, rhs;
};

// The length-6 relation for a_ij = -3, a_ji = -1 as printed in the source
// for this construction (its earlier appearances differ; see legacy below).
inline VermaRelation verma_relation_g2_paper() {
    return {"paper",
            {{true, 1, 0}, {false, 3, 1}, {true, 2, 1}, {false, 3, 2}, {true, 1, 1}, {false, 0, 1}},
            {{false, 0, 1}, {true, 1, 1}, {false, 3, 2}, {true, 2, 1}, {false, 3, 1}, {true, 1, 0}}};
}

// The same exponent pattern with the roles of i and j exchanged, i.e. the
// relation that would be correct if a_ji = -3 instead. Earlier references
// printed the length-6 case this way around.
inline VermaRelation verma_relation_g2_legacy() {
    return {"legacy",
            {{false, 1, 0}, {true, 3, 1}, {false, 2, 1}, {true, 3, 2}, {false, 1, 1}, {true, 0, 1}},
            {{true, 0, 1}, {false, 1, 1}, {true, 3, 2}, {false, 2, 1}, {true, 3, 1}, {false, 1, 0}}};
}

inline VermaRelation verma_relation_for(int aij, int aji) {
    if (aij == 0 && aji == 0)
        return {"commuting", {{true, 1, 0}, {false, 0, 1}}, {{false, 0, 1}, {true, 1, 0}}};
    if (aij == -1 && aji == -1)
        return {"length-3",
                {{true, 1, 0}, {false, 1, 1}, {true, 0, 1}},
                {{false, 0, 1}, {true, 1, 1}, {false, 1, 0}}};
    if (aij == -2 && aji == -1)
        return {"length-4",
                {{true, 1, 0}, {false, 2, 1}, {true, 1, 1}, {false, 0, 1}},
                {{false, 0, 1}, {true, 1, 1}, {false, 2, 1}, {true, 1, 0}}};
    if (aij == -1 && aji == -2) {
        VermaRelation r = verma_relation_for(-2, -1);
        for (auto& f : r.lhs) f.first_index = !f.first_index;
        for (auto& f : r.rhs) f.first_index = !f.first_index;
        return r;
    }
    if (aij == -3 && aji == -1) return verma_relation_g2_paper();
    if (aij == -1 && aji == -3) {
        VermaRelation r = verma_relation_g2_paper();
        for (auto& f : r.lhs) f.first_index = !f.first_index;
        for (auto& f : r.rhs) f.first_index = !f.first_index;
        return r;
    }
    throw std::invalid_argument("verma_check: unsupported (a_ij, a_ji) pair");
}

struct VermaVariantResult {
    std::string name;
    bool holds = true;
    int first_failed_sample = -1;
    std::string counterexample;  // human-readable witness, empty when holds
};

struct VermaReport {
    size_t i = 0, j = 0;
    int aij = 0, aji = 0;
    std::vector<VermaVariantResult> variants;
    bool holds = false;          // the unique applicable relation holds
    std::string variant_used;    // which variant holds (empty if none/ambiguous)
    int samples = 0;
};

namespace detail {

// Deterministic positive rationals with numerator/denominator in [1, 97].
inline Rational random_positive_rational(std::mt19937_64& rng) {
    auto draw = [&]() { return static_cast<long>(1 + rng() % 97); };
    long n = draw(), d = draw();
    return Rational(n, d);
}

inline PointMap apply_verma_side(const VermaAction& action, size_t i, size_t j,
                                 const std::vector<VermaFactor>& side, const Rational& c1,
                                 const Rational& c2, PointMap point) {
    // Operator products act as composition with the rightmost factor first.
    for (auto it = side.rbegin(); it != side.rend(); ++it) {
        Rational c = c1.pow(it->p) * c2.pow(it->q);
        point = action.apply(it->first_index ? i : j, c, point);
    }
    return point;
}

}  // namespace detail

inline VermaVariantResult verma_try_relation(const VermaAction& action, size_t i, size_t j,
                                             const VermaRelation& rel, int samples,
                                             std::uint64_t seed) {
    VermaVariantResult res;
    res.name = rel.name;
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        Rational c1 = detail::random_positive_rational(rng);
        Rational c2 = detail::random_positive_rational(rng);
        PointMap point;
        for (const auto& v : action.variables) point[v] = detail::random_positive_rational(rng);
        PointMap lhs = detail::apply_verma_side(action, i, j, rel.lhs, c1, c2, point);
        PointMap rhs = detail::apply_verma_side(action, i, j, rel.rhs, c1, c2, point);
        if (lhs != rhs) {
            res.holds = false;
            res.first_failed_sample = s;
            std::string w = "c1=" + c1.str() + " c2=" + c2.str();
            for (const auto& [v, val] : point) w += " " + v + "=" + val.str();
            res.counterexample = w;
            return res;
        }
    }
    return res;
}

inline VermaReport verma_check(const CartanData& cartan, size_t i, size_t j,
                               const VermaAction& action, int samples, std::uint64_t seed) {
    if (i >= cartan.rank() || j >= cartan.rank() || i == j)
        throw std::invalid_argument("verma_check: need two distinct indices in I");
    VermaReport rep;
    rep.i = i;
    rep.j = j;
    rep.aij = cartan.a(i, j);
    rep.aji = cartan.a(j, i);
    rep.samples = samples;

    std::vector<VermaRelation> rels{verma_relation_for(rep.aij, rep.aji)};
    if (rep.aij == -3 && rep.aji == -1) {
        rels.push_back(verma_relation_g2_legacy());
    } else if (rep.aij == -1 && rep.aji == -3) {
        VermaRelation r = verma_relation_g2_legacy();
        for (auto& f : r.lhs) f.first_index = !f.first_index;
        for (auto& f : r.rhs) f.first_index = !f.first_index;
        rels.push_back(r);
    }

    int n_holding = 0;
    for (const auto& rel : rels) {
        rep.variants.push_back(verma_try_relation(action, i, j, rel, samples, seed));
        if (rep.variants.back().holds) {
            ++n_holding;
            rep.variant_used = rel.name;
        }
    }
    rep.holds = n_holding == 1 || (rels.size() == 1 && n_holding == 1);
    if (n_holding != 1) rep.variant_used.clear();
    return rep;
}

// Numeric Schubert action on a word: evaluates the symbolic C_j tuple.
inline VermaAction make_schubert_action(const CartanData& cartan, const Word& word,
                                        const std::vector<std::string>& names,
                                        const std::string& cname = "c") {
    // Symbolic actions per index, computed once.
    auto actions = std::make_shared<std::map<size_t, std::vector<PosRatExpr>>>();
    for (size_t i = 0; i < cartan.rank(); ++i)
        (*actions)[i] = schubert_action(cartan, word, i, names, cname);

    VermaAction act;
    act.variables = names;
    act.apply = [actions, names, cname](size_t index, const Rational& c,
                                        const PointMap& point) -> PointMap {
        PointMap bound = point;
        bound[cname] = c;
        PointMap out;
        const auto& cj = actions->at(index);
        for (size_t m = 0; m < names.size(); ++m) out[names[m]] = cj[m].evaluate(bound);
        return out;
    };
    return act;
}

}  // namespace gcrystal
