#pragma once

// Combinatorial crystals B_l and B_infinity of type D4^(3): the Kashiwara
// operators with their case analyses, the statistics eps_i/phi_i/wt, level
// enumeration, minimal elements, perfectness checks, crystal graphs, the
// tensor-product rule (including T_lambda with its -infinity statistics),
// and the coherent-family embedding into B_infinity.

#include "gcrystal/cartan.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcrystal {
namespace d43 {

using std::int64_t;

// (b1, b2, b3, b3bar, b2bar, b1bar)
using Elem = std::array<int64_t, 6>;

struct Ctx {
    bool limit = true;
    int64_t level = 0;
    static Ctx infinity() { return {true, 0}; }
    static Ctx at_level(int64_t l) {
        if (l < 1) throw std::invalid_argument("level must be >= 1");
        return {false, l};
    }
    bool operator==(const Ctx&) const = default;
};

inline bool parity_ok(const Elem& b) { return ((b[2] - b[3]) % 2) == 0; }

inline void require_parity(const Elem& b) {
    if (!parity_ok(b)) throw std::domain_error("parity violation: b3 and b3bar differ mod 2");
}

inline int64_t s_of(const Elem& b) {
    require_parity(b);
    return b[0] + b[1] + (b[2] + b[3]) / 2 + b[4] + b[5];
}

// z1 = b1bar - b1, z2 = b2bar - b3bar, z3 = b3 - b2, z4 = (b3bar - b3)/2
inline std::array<int64_t, 4> z_vec(const Elem& b) {
    require_parity(b);
    return {b[5] - b[0], b[4] - b[3], b[2] - b[1], (b[3] - b[2]) / 2};
}

inline std::array<int64_t, 6> A_list(const Elem& b) {
    auto z = z_vec(b);
    return {0,
            z[0],
            z[0] + z[1],
            z[0] + z[1] + 3 * z[3],
            z[0] + z[1] + z[2] + 3 * z[3],
            2 * z[0] + z[1] + z[2] + 3 * z[3]};
}

inline int64_t max_A(const Elem& b) {
    auto A = A_list(b);
    return *std::max_element(A.begin(), A.end());
}

inline bool in_level_set(const Elem& b, int64_t l) {
    for (int64_t v : b)
        if (v < 0) return false;
    return parity_ok(b) && s_of(b) <= l;
}

inline bool member(const Elem& b, const Ctx& ctx) {
    return ctx.limit ? parity_ok(b) : in_level_set(b, ctx.level);
}

namespace detail {

inline int64_t pos(int64_t x) { return x > 0 ? x : 0; }

// Truncation: in B_l an image outside the set counts as 0; B_infinity is total.
inline std::optional<Elem> clip(Elem b, const Ctx& ctx) {
    if (!ctx.limit && !in_level_set(b, ctx.level)) return std::nullopt;
    return b;
}

// Zero-based case index 0..5 of the conditions selecting the e0 action.
// Exactly one fires for every parity-valid tuple; this is asserted.
inline int e0_case(const Elem& b) {
    auto z = z_vec(b);
    int64_t z1 = z[0], z2 = z[1], z3 = z[2], z4 = z[3];
    bool E[6] = {
        z1 + z2 + z3 + 3 * z4 < 0 && z1 + z2 + 3 * z4 < 0 && z1 + z2 < 0 && z1 < 0,
        z1 + z2 + z3 + 3 * z4 < 0 && z2 + 3 * z4 < 0 && z2 < 0 && z1 >= 0,
        z1 + z3 + 3 * z4 < 0 && z3 + 3 * z4 < 0 && z4 < 0 && z2 >= 0 && z1 + z2 >= 0,
        z1 + z2 + 3 * z4 >= 0 && z2 + 3 * z4 >= 0 && z4 >= 0 && z3 < 0 && z1 + z3 < 0,
        z1 + z2 + z3 + 3 * z4 >= 0 && z3 + 3 * z4 >= 0 && z3 >= 0 && z1 < 0,
        z1 + z2 + z3 + 3 * z4 >= 0 && z1 + z3 + 3 * z4 >= 0 && z1 + z3 >= 0 && z1 >= 0,
    };
    int found = -1;
    for (int k = 0; k < 6; ++k) {
        if (!E[k]) continue;
        if (found >= 0) throw std::logic_error("e0 case conditions overlap");
        found = k;
    }
    if (found < 0) throw std::logic_error("e0 case conditions leave a gap");
    return found;
}

// Same with >= replaced by > and < by <=.
inline int f0_case(const Elem& b) {
    auto z = z_vec(b);
    int64_t z1 = z[0], z2 = z[1], z3 = z[2], z4 = z[3];
    bool F[6] = {
        z1 + z2 + z3 + 3 * z4 <= 0 && z1 + z2 + 3 * z4 <= 0 && z1 + z2 <= 0 && z1 <= 0,
        z1 + z2 + z3 + 3 * z4 <= 0 && z2 + 3 * z4 <= 0 && z2 <= 0 && z1 > 0,
        z1 + z3 + 3 * z4 <= 0 && z3 + 3 * z4 <= 0 && z4 <= 0 && z2 > 0 && z1 + z2 > 0,
        z1 + z2 + 3 * z4 > 0 && z2 + 3 * z4 > 0 && z4 > 0 && z3 <= 0 && z1 + z3 <= 0,
        z1 + z2 + z3 + 3 * z4 > 0 && z3 + 3 * z4 > 0 && z3 > 0 && z1 <= 0,
        z1 + z2 + z3 + 3 * z4 > 0 && z1 + z3 + 3 * z4 > 0 && z1 + z3 > 0 && z1 > 0,
    };
    int found = -1;
    for (int k = 0; k < 6; ++k) {
        if (!F[k]) continue;
        if (found >= 0) throw std::logic_error("f0 case conditions overlap");
        found = k;
    }
    if (found < 0) throw std::logic_error("f0 case conditions leave a gap");
    return found;
}

inline Elem apply_e0_case(Elem b, int k) {
    switch (k) {
        case 0: b[0] -= 1; break;
        case 1: b[2] -= 1; b[3] -= 1; b[5] += 1; break;
        case 2: b[2] -= 2; b[4] += 1; break;
        case 3: b[1] -= 1; b[3] += 2; break;
        case 4: b[0] -= 1; b[2] += 1; b[3] += 1; break;
        case 5: b[5] += 1; break;
    }
    return b;
}

inline Elem apply_f0_case(Elem b, int k) {
    switch (k) {
        case 0: b[0] += 1; break;
        case 1: b[2] += 1; b[3] += 1; b[5] -= 1; break;
        case 2: b[2] += 2; b[4] -= 1; break;
        case 3: b[1] += 1; b[3] -= 2; break;
        case 4: b[0] += 1; b[2] -= 1; b[3] -= 1; break;
        case 5: b[5] -= 1; break;
    }
    return b;
}

}  // namespace detail

inline std::optional<Elem> e_tilde(size_t i, const Elem& b, const Ctx& ctx) {
    require_parity(b);
    Elem r = b;
    if (i == 1) {
        int64_t lhs = b[4] - b[3];
        int64_t rhs = detail::pos(b[1] - b[2]);
        if (lhs >= rhs) {
            r[4] += 1;
            r[5] -= 1;
        } else if (lhs < 0 && 0 <= b[2] - b[1]) {
            r[2] += 1;
            r[3] -= 1;
        } else {
            r[0] += 1;
            r[1] -= 1;
        }
    } else if (i == 2) {
        if (b[3] >= b[2]) {
            r[3] += 2;
            r[4] -= 1;
        } else {
            r[1] += 1;
            r[2] -= 2;
        }
    } else if (i == 0) {
        r = detail::apply_e0_case(b, detail::e0_case(b));
    } else {
        throw std::invalid_argument("e_tilde: index must be 0, 1 or 2");
    }
    return detail::clip(r, ctx);
}

inline std::optional<Elem> f_tilde(size_t i, const Elem& b, const Ctx& ctx) {
    require_parity(b);
    Elem r = b;
    if (i == 1) {
        int64_t d23 = b[1] - b[2];
        int64_t dbar = b[4] - b[3];
        if (detail::pos(dbar) <= d23) {
            r[0] -= 1;
            r[1] += 1;
        } else if (dbar <= 0 && 0 < b[2] - b[1]) {
            r[2] -= 1;
            r[3] += 1;
        } else {
            r[4] -= 1;
            r[5] += 1;
        }
    } else if (i == 2) {
        if (b[3] <= b[2]) {
            r[1] -= 1;
            r[2] += 2;
        } else {
            r[3] -= 2;
            r[4] += 1;
        }
    } else if (i == 0) {
        r = detail::apply_f0_case(b, detail::f0_case(b));
    } else {
        throw std::invalid_argument("f_tilde: index must be 0, 1 or 2");
    }
    return detail::clip(r, ctx);
}

inline int64_t eps(size_t i, const Elem& b, const Ctx& ctx) {
    require_parity(b);
    if (i == 1) return b[5] + detail::pos(b[3] - b[4] + detail::pos(b[1] - b[2]));
    if (i == 2) return b[4] + detail::pos(b[2] - b[3]) / 2;
    if (i == 0) {
        auto z = z_vec(b);
        int64_t base = ctx.limit ? -s_of(b) : ctx.level - s_of(b);
        return base + max_A(b) - (2 * z[0] + z[1] + z[2] + 3 * z[3]);
    }
    throw std::invalid_argument("eps: index must be 0, 1 or 2");
}

inline int64_t phi(size_t i, const Elem& b, const Ctx& ctx) {
    require_parity(b);
    if (i == 1) return b[0] + detail::pos(b[2] - b[1] + detail::pos(b[4] - b[3]));
    if (i == 2) return b[1] + detail::pos(b[3] - b[2]) / 2;
    if (i == 0) {
        int64_t base = ctx.limit ? -s_of(b) : ctx.level - s_of(b);
        return base + max_A(b);
    }
    throw std::invalid_argument("phi: index must be 0, 1 or 2");
}

inline ClassicalWeight wt(const Elem& b, const Ctx& ctx) {
    ClassicalWeight w = ClassicalWeight::zero(3);
    for (size_t i = 0; i < 3; ++i) w.k[i] = static_cast<int>(phi(i, b, ctx) - eps(i, b, ctx));
    return w;
}

inline ClassicalWeight eps_weight(const Elem& b, const Ctx& ctx) {
    ClassicalWeight w = ClassicalWeight::zero(3);
    for (size_t i = 0; i < 3; ++i) w.k[i] = static_cast<int>(eps(i, b, ctx));
    return w;
}

inline ClassicalWeight phi_weight(const Elem& b, const Ctx& ctx) {
    ClassicalWeight w = ClassicalWeight::zero(3);
    for (size_t i = 0; i < 3; ++i) w.k[i] = static_cast<int>(phi(i, b, ctx));
    return w;
}

// All elements of B_l in lexicographic order.
inline std::vector<Elem> enumerate_Bl(int64_t l) {
    if (l < 1) throw std::invalid_argument("enumerate_Bl: level must be >= 1");
    std::vector<Elem> out;
    for (int64_t b1 = 0; b1 <= l; ++b1)
        for (int64_t b2 = 0; b1 + b2 <= l; ++b2)
            for (int64_t b3 = 0; b3 <= 2 * (l - b1 - b2); ++b3)
                for (int64_t b3b = (b3 % 2); b1 + b2 + (b3 + b3b) / 2 <= l; b3b += 2)
                    for (int64_t b2b = 0; b1 + b2 + (b3 + b3b) / 2 + b2b <= l; ++b2b)
                        for (int64_t b1b = 0; b1 + b2 + (b3 + b3b) / 2 + b2b + b1b <= l; ++b1b)
                            out.push_back({b1, b2, b3, b3b, b2b, b1b});
    std::sort(out.begin(), out.end());
    return out;
}

// (B_l)_min in closed form: (a, b, b, b, b, a) with 2a + 3b <= l.
inline std::vector<Elem> minimal_elements_closed_form(int64_t l) {
    std::vector<Elem> out;
    for (int64_t a = 0; 2 * a <= l; ++a)
        for (int64_t b = 0; 2 * a + 3 * b <= l; ++b) out.push_back({a, b, b, b, b, a});
    std::sort(out.begin(), out.end());
    return out;
}

struct MinimalReport {
    std::vector<Elem> by_definition;   // { b : <c, eps(b)> = l }
    std::vector<Elem> closed_form;
    bool match = false;
};

inline MinimalReport minimal_elements(const CartanData& cartan, int64_t l) {
    MinimalReport rep;
    Ctx ctx = Ctx::at_level(l);
    for (const Elem& b : enumerate_Bl(l))
        if (eps_weight(b, ctx).level(cartan) == l) rep.by_definition.push_back(b);
    rep.closed_form = minimal_elements_closed_form(l);
    rep.match = rep.by_definition == rep.closed_form;
    return rep;
}

// ---------------------------------------------------------------------------
// Generic tensor machinery (Theorem 3.2 rule, with T_lambda's -infinity)
// ---------------------------------------------------------------------------

// Integer statistic extended by -infinity.
struct Stat {
    bool finite = true;
    int64_t v = 0;
    static Stat neg_inf() { return {false, 0}; }
    static Stat of(int64_t x) { return {true, x}; }
    bool operator==(const Stat&) const = default;
};
inline bool stat_lt(const Stat& a, const Stat& b) {
    if (!a.finite) return b.finite;  // -inf < finite, not -inf < -inf
    if (!b.finite) return false;
    return a.v < b.v;
}
inline Stat stat_max(const Stat& a, const Stat& b) { return stat_lt(a, b) ? b : a; }
inline Stat stat_add(const Stat& a, int64_t k) { return a.finite ? Stat::of(a.v + k) : a; }

class Crystal;
using CrystalPtr = std::shared_ptr<const Crystal>;

// A crystal element: T_lambda singleton, a B_l / B_infinity element, or a
// tensor of two crystal elements.
class Crystal {
public:
    enum class Kind { TLam, B, Tensor };

    static CrystalPtr t_lambda(ClassicalWeight lambda) {
        auto c = std::make_shared<Crystal>();
        c->kind_ = Kind::TLam;
        c->lambda_ = std::move(lambda);
        return c;
    }
    static CrystalPtr elem(const Elem& b, const Ctx& ctx) {
        require_parity(b);
        auto c = std::make_shared<Crystal>();
        c->kind_ = Kind::B;
        c->b_ = b;
        c->ctx_ = ctx;
        return c;
    }
    static CrystalPtr tensor(CrystalPtr left, CrystalPtr right) {
        auto c = std::make_shared<Crystal>();
        c->kind_ = Kind::Tensor;
        c->left_ = std::move(left);
        c->right_ = std::move(right);
        return c;
    }

    Kind kind() const { return kind_; }
    const Elem& b() const { return b_; }
    const Ctx& ctx() const { return ctx_; }
    const CrystalPtr& left() const { return left_; }
    const CrystalPtr& right() const { return right_; }

    ClassicalWeight weight() const {
        switch (kind_) {
            case Kind::TLam: return lambda_;
            case Kind::B: return wt(b_, ctx_);
            case Kind::Tensor: return left_->weight() + right_->weight();
        }
        throw std::logic_error("unreachable");
    }

    Stat eps_stat(size_t i) const {
        switch (kind_) {
            case Kind::TLam: return Stat::neg_inf();
            case Kind::B: return Stat::of(eps(i, b_, ctx_));
            case Kind::Tensor: {
                // eps_i(b1 (x) b2) = max(eps_i(b1), eps_i(b2) - <h_i, wt b1>)
                Stat a = left_->eps_stat(i);
                Stat b = stat_add(right_->eps_stat(i), -left_->weight().pairing(i));
                return stat_max(a, b);
            }
        }
        throw std::logic_error("unreachable");
    }

    Stat phi_stat(size_t i) const {
        switch (kind_) {
            case Kind::TLam: return Stat::neg_inf();
            case Kind::B: return Stat::of(phi(i, b_, ctx_));
            case Kind::Tensor: {
                // phi_i(b1 (x) b2) = max(phi_i(b2), phi_i(b1) + <h_i, wt b2>)
                Stat a = right_->phi_stat(i);
                Stat b = stat_add(left_->phi_stat(i), right_->weight().pairing(i));
                return stat_max(a, b);
            }
        }
        throw std::logic_error("unreachable");
    }

    std::string key() const {
        switch (kind_) {
            case Kind::TLam: {
                std::string s = "t[";
                for (size_t i = 0; i < lambda_.k.size(); ++i)
                    s += (i ? "," : "") + std::to_string(lambda_.k[i]);
                return s + "]";
            }
            case Kind::B: {
                std::string s = "b[";
                for (size_t i = 0; i < 6; ++i) s += (i ? "," : "") + std::to_string(b_[i]);
                return s + "]";
            }
            case Kind::Tensor: return "(" + left_->key() + ")(x)(" + right_->key() + ")";
        }
        throw std::logic_error("unreachable");
    }

    bool equals(const Crystal& o) const {
        if (kind_ != o.kind_) return false;
        switch (kind_) {
            case Kind::TLam: return lambda_ == o.lambda_;
            case Kind::B: return b_ == o.b_ && ctx_ == o.ctx_;
            case Kind::Tensor: return left_->equals(*o.left_) && right_->equals(*o.right_);
        }
        throw std::logic_error("unreachable");
    }

private:
    Kind kind_ = Kind::TLam;
    ClassicalWeight lambda_ = ClassicalWeight::zero(3);
    Elem b_{};
    Ctx ctx_ = Ctx::infinity();
    CrystalPtr left_, right_;
};

inline std::optional<CrystalPtr> tensor_e(size_t i, const CrystalPtr& t);
inline std::optional<CrystalPtr> tensor_f(size_t i, const CrystalPtr& t);

inline std::optional<CrystalPtr> tensor_e(size_t i, const CrystalPtr& t) {
    switch (t->kind()) {
        case Crystal::Kind::TLam: return std::nullopt;
        case Crystal::Kind::B: {
            auto r = e_tilde(i, t->b(), t->ctx());
            if (!r) return std::nullopt;
            return Crystal::elem(*r, t->ctx());
        }
        case Crystal::Kind::Tensor: {
            // acts right iff phi_i(left) < eps_i(right)
            if (stat_lt(t->left()->phi_stat(i), t->right()->eps_stat(i))) {
                auto r = tensor_e(i, t->right());
                if (!r) return std::nullopt;
                return Crystal::tensor(t->left(), *r);
            }
            auto r = tensor_e(i, t->left());
            if (!r) return std::nullopt;
            return Crystal::tensor(*r, t->right());
        }
    }
    throw std::logic_error("unreachable");
}

inline std::optional<CrystalPtr> tensor_f(size_t i, const CrystalPtr& t) {
    switch (t->kind()) {
        case Crystal::Kind::TLam: return std::nullopt;
        case Crystal::Kind::B: {
            auto r = f_tilde(i, t->b(), t->ctx());
            if (!r) return std::nullopt;
            return Crystal::elem(*r, t->ctx());
        }
        case Crystal::Kind::Tensor: {
            // acts left iff phi_i(left) > eps_i(right)
            if (stat_lt(t->right()->eps_stat(i), t->left()->phi_stat(i))) {
                auto r = tensor_f(i, t->left());
                if (!r) return std::nullopt;
                return Crystal::tensor(*r, t->right());
            }
            auto r = tensor_f(i, t->right());
            if (!r) return std::nullopt;
            return Crystal::tensor(t->left(), *r);
        }
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Crystal graph and perfectness
// ---------------------------------------------------------------------------

struct Graph {
    std::vector<Elem> nodes;
    struct Edge {
        size_t from, to;
        size_t label;
    };
    std::vector<Edge> edges;
};

inline Graph crystal_graph(const std::vector<Elem>& elements, const Ctx& ctx,
                           const std::vector<size_t>& ops = {0, 1, 2}) {
    Graph g;
    g.nodes = elements;
    std::sort(g.nodes.begin(), g.nodes.end());
    std::map<Elem, size_t> index;
    for (size_t k = 0; k < g.nodes.size(); ++k) index[g.nodes[k]] = k;
    for (size_t k = 0; k < g.nodes.size(); ++k)
        for (size_t i : ops) {
            auto r = f_tilde(i, g.nodes[k], ctx);
            if (!r) continue;
            auto it = index.find(*r);
            if (it == index.end()) continue;  // leaves the given node set
            g.edges.push_back({k, it->second, i});
        }
    return g;
}

struct PerfectReport {
    int64_t level = 0;
    size_t tensor_nodes = 0;
    bool connected = false;            // Def (i)
    bool weight_condition = false;     // Def (ii)
    ClassicalWeight lambda0 = ClassicalWeight::zero(3);
    bool minimal_bijections = false;   // Def (iv)
    std::string pseudo_base = "not checked (out of scope)";  // Def (iii)
    std::string failure;
    bool ok() const { return connected && weight_condition && minimal_bijections; }
};

namespace detail {

// Is w a nonpositive integer combination of cl(alpha_i), i != 0?
inline bool below_in_classical_order(const CartanData& cartan, const ClassicalWeight& diff) {
    // diff = n1 * cl(alpha_1) + n2 * cl(alpha_2); solve from the Lambda_0 row.
    ClassicalWeight a1 = simple_root_cl(cartan, 1), a2 = simple_root_cl(cartan, 2);
    // a1.k[0] = -1 and a2.k[0] = 0 for D4^(3).
    int n1 = -diff.k[0];
    if (a2.k[1] == 0) return false;
    int rem = diff.k[1] - n1 * a1.k[1];
    if (rem % a2.k[1] != 0) return false;
    int n2 = rem / a2.k[1];
    if (diff.k[2] != n1 * a1.k[2] + n2 * a2.k[2]) return false;
    return n1 <= 0 && n2 <= 0;
}

}  // namespace detail

inline PerfectReport is_perfect(const CartanData& cartan, int64_t l, int64_t cap = 6) {
    if (l > cap) throw std::invalid_argument("is_perfect: level exceeds enumeration cap");
    PerfectReport rep;
    rep.level = l;
    Ctx ctx = Ctx::at_level(l);
    std::vector<Elem> elems = enumerate_Bl(l);

    // (i) connectedness of B_l (x) B_l under all e_i, f_i, as undirected graph.
    {
        std::vector<CrystalPtr> nodes;
        std::map<std::string, size_t> index;
        for (const Elem& a : elems)
            for (const Elem& b : elems) {
                auto t = Crystal::tensor(Crystal::elem(a, ctx), Crystal::elem(b, ctx));
                index[t->key()] = nodes.size();
                nodes.push_back(t);
            }
        rep.tensor_nodes = nodes.size();
        std::vector<char> seen(nodes.size(), 0);
        std::vector<size_t> queue = {0};
        seen[0] = 1;
        size_t visited = 0;
        while (!queue.empty()) {
            size_t k = queue.back();
            queue.pop_back();
            ++visited;
            for (size_t i = 0; i < 3; ++i) {
                for (auto r : {tensor_e(i, nodes[k]), tensor_f(i, nodes[k])}) {
                    if (!r) continue;
                    auto it = index.find((*r)->key());
                    if (it == index.end())
                        throw std::logic_error("tensor operator left B_l (x) B_l");
                    if (!seen[it->second]) {
                        seen[it->second] = 1;
                        queue.push_back(it->second);
                    }
                }
            }
        }
        rep.connected = visited == nodes.size();
        if (!rep.connected) rep.failure = "tensor graph disconnected";
    }

    // (ii) all weights below a unique lambda_0 of multiplicity one.
    {
        std::map<ClassicalWeight, size_t> mult;
        for (const Elem& b : elems) ++mult[wt(b, ctx)];
        size_t candidates = 0;
        for (const auto& [cand, count] : mult) {
            if (count != 1) continue;
            bool all_below = true;
            for (const auto& [w, c2] : mult)
                if (!detail::below_in_classical_order(cartan, w - cand)) {
                    all_below = false;
                    break;
                }
            if (all_below) {
                ++candidates;
                rep.lambda0 = cand;
            }
        }
        rep.weight_condition = candidates == 1;
        if (!rep.weight_condition && rep.failure.empty())
            rep.failure = "lambda_0 not unique (found " + std::to_string(candidates) + ")";
    }

    // (iv) eps, phi bijections from minimal elements onto level-l dominant weights.
    {
        MinimalReport m = minimal_elements(cartan, l);
        std::set<ClassicalWeight> eps_im, phi_im;
        bool all_dominant = true;
        for (const Elem& b : m.by_definition) {
            ClassicalWeight e = eps_weight(b, ctx), p = phi_weight(b, ctx);
            all_dominant = all_dominant && e.dominant() && p.dominant();
            eps_im.insert(e);
            phi_im.insert(p);
        }
        auto target = dominant_weights_of_level(cartan, static_cast<int>(l));
        std::set<ClassicalWeight> target_set(target.begin(), target.end());
        rep.minimal_bijections = m.match && all_dominant &&
                                 eps_im.size() == m.by_definition.size() &&
                                 phi_im.size() == m.by_definition.size() &&
                                 eps_im == target_set && phi_im == target_set;
        if (!rep.minimal_bijections && rep.failure.empty())
            rep.failure = "minimal elements fail Def (iv)";
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Coherent family embedding into B_infinity
// ---------------------------------------------------------------------------

inline bool is_minimal(const Elem& b0, int64_t l) {
    return b0[0] >= 0 && b0[1] >= 0 && b0[1] == b0[2] && b0[2] == b0[3] && b0[3] == b0[4] &&
           b0[0] == b0[5] && 2 * b0[0] + 3 * b0[1] <= l;
}

// f_{(l,b0)}: subtracts alpha from the 1-entries and beta from the 2,3-entries.
inline Elem coherent_embed(int64_t l, const Elem& b0, const Elem& b) {
    if (!is_minimal(b0, l)) throw std::invalid_argument("coherent_embed: b0 is not minimal");
    if (!in_level_set(b, l)) throw std::invalid_argument("coherent_embed: b is not in B_l");
    int64_t a = b0[0], be = b0[1];
    return {b[0] - a, b[1] - be, b[2] - be, b[3] - be, b[4] - be, b[5] - a};
}

}  // namespace d43
}  // namespace gcrystal
