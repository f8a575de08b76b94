#pragma once

// The 15-dimensional level-0 fundamental representation of affine G2 at q=1:
// basis, classical weights, the tabulated Chevalley actions e_i/f_i, the
// one-parameter operators Y_i(c), and the symbolic expansion of
// v1(x) = Y_0(x0) Y_1(x1) Y_2(x2) Y_1(x3) Y_2(x4) Y_1(x5) |1>.

#include "gcrystal/cartan.hpp"
#include "gcrystal/expr.hpp"
#include "gcrystal/rational.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcrystal {

inline constexpr size_t kRepDim = 15;

// Fixed basis order: 1..6, 0_1, 0_2, empty, 6bar..1bar.
enum RepBasis : size_t {
    B1 = 0, B2, B3, B4, B5, B6, Z1, Z2, EMPTY, B6BAR, B5BAR, B4BAR, B3BAR, B2BAR, B1BAR
};

inline const std::array<std::string, kRepDim>& rep_basis_names() {
    static const std::array<std::string, kRepDim> names = {
        "1", "2", "3", "4", "5", "6", "0_1", "0_2", "empty",
        "6bar", "5bar", "4bar", "3bar", "2bar", "1bar"};
    return names;
}

// Classical weights in the (Lambda_0, Lambda_1, Lambda_2) basis.
inline const std::array<ClassicalWeight, kRepDim>& rep_weights() {
    static const std::array<ClassicalWeight, kRepDim> w = {{
        {{-2, 1, 0}},   // 1
        {{-1, -1, 3}},  // 2
        {{-1, 0, 1}},   // 3
        {{-1, 1, -1}},  // 4
        {{0, -1, 2}},   // 5
        {{-1, 2, -3}},  // 6
        {{0, 0, 0}},    // 0_1
        {{0, 0, 0}},    // 0_2
        {{0, 0, 0}},    // empty
        {{1, -2, 3}},   // 6bar
        {{0, 1, -2}},   // 5bar
        {{1, -1, 1}},   // 4bar
        {{1, 0, -1}},   // 3bar
        {{1, 1, -3}},   // 2bar
        {{2, -1, 0}},   // 1bar
    }};
    return w;
}

struct RepEntry {
    size_t src, dst;
    int coeff;
};

// Non-trivial actions only, exactly as tabulated.
inline const std::vector<RepEntry>& rep_table(bool is_e, size_t i) {
    static const std::vector<RepEntry> f0 = {{Z2, B1, 1},    {B6BAR, B2, 1}, {B4BAR, B3, 1},
                                             {B3BAR, B4, 1}, {B2BAR, B6, 1}, {B1BAR, EMPTY, 1},
                                             {EMPTY, B1, 2}};
    static const std::vector<RepEntry> e0 = {{B1, EMPTY, 1}, {B2, B6BAR, 1}, {B3, B4BAR, 1},
                                             {B4, B3BAR, 1}, {B6, B2BAR, 1}, {Z2, B1BAR, 1},
                                             {EMPTY, B1BAR, 2}};
    static const std::vector<RepEntry> f1 = {{B1, B2, 1},     {B4, B5, 1},     {B6, Z2, 1},
                                             {Z1, B6BAR, 3},  {Z2, B6BAR, 2},  {B5BAR, B4BAR, 1},
                                             {B2BAR, B1BAR, 1}, {EMPTY, B6BAR, 1}};
    static const std::vector<RepEntry> e1 = {{B2, B1, 1},     {B5, B4, 1},     {Z1, B6, 3},
                                             {Z2, B6, 2},     {B6BAR, Z2, 1},  {B4BAR, B5BAR, 1},
                                             {B1BAR, B2BAR, 1}, {EMPTY, B6, 1}};
    static const std::vector<RepEntry> f2 = {{B2, B3, 1},     {B3, B4, 2},    {B4, B6, 3},
                                             {B5, Z1, 1},     {Z1, B5BAR, 2}, {Z2, B5BAR, 1},
                                             {B6BAR, B4BAR, 1}, {B4BAR, B3BAR, 2}, {B3BAR, B2BAR, 3}};
    static const std::vector<RepEntry> e2 = {{B3, B2, 3},     {B4, B3, 2},    {B6, B4, 1},
                                             {Z1, B5, 2},     {Z2, B5, 1},    {B5BAR, Z1, 1},
                                             {B4BAR, B6BAR, 3}, {B3BAR, B4BAR, 2}, {B2BAR, B3BAR, 1}};
    if (i > 2) throw std::invalid_argument("rep_table: index out of range");
    if (is_e) return i == 0 ? e0 : i == 1 ? e1 : e2;
    return i == 0 ? f0 : i == 1 ? f1 : f2;
}

using RepVector = std::array<Rational, kRepDim>;

inline RepVector rep_basis_vector(size_t v) {
    RepVector r{};
    r[v] = Rational(1);
    return r;
}

inline RepVector rep_apply(bool is_e, size_t i, const RepVector& v) {
    RepVector out{};
    for (const auto& ent : rep_table(is_e, i))
        out[ent.dst] += Rational(ent.coeff) * v[ent.src];
    return out;
}

class RepOperator {
public:
    RepOperator() {
        for (auto& row : m_) row.fill(Rational(0));
    }
    static RepOperator identity() {
        RepOperator r;
        for (size_t i = 0; i < kRepDim; ++i) r.m_[i][i] = Rational(1);
        return r;
    }
    static RepOperator chevalley(bool is_e, size_t i) {
        RepOperator r;
        for (const auto& ent : rep_table(is_e, i)) r.m_[ent.dst][ent.src] = Rational(ent.coeff);
        return r;
    }

    const Rational& at(size_t row, size_t col) const { return m_[row][col]; }
    Rational& at(size_t row, size_t col) { return m_[row][col]; }

    RepOperator operator*(const RepOperator& o) const {
        RepOperator r;
        for (size_t i = 0; i < kRepDim; ++i)
            for (size_t k = 0; k < kRepDim; ++k) {
                if (m_[i][k].is_zero()) continue;
                for (size_t j = 0; j < kRepDim; ++j) {
                    if (o.m_[k][j].is_zero()) continue;
                    r.m_[i][j] += m_[i][k] * o.m_[k][j];
                }
            }
        return r;
    }
    RepOperator operator+(const RepOperator& o) const {
        RepOperator r;
        for (size_t i = 0; i < kRepDim; ++i)
            for (size_t j = 0; j < kRepDim; ++j) r.m_[i][j] = m_[i][j] + o.m_[i][j];
        return r;
    }
    RepOperator operator-(const RepOperator& o) const {
        RepOperator r;
        for (size_t i = 0; i < kRepDim; ++i)
            for (size_t j = 0; j < kRepDim; ++j) r.m_[i][j] = m_[i][j] - o.m_[i][j];
        return r;
    }
    RepOperator scaled(const Rational& s) const {
        RepOperator r;
        for (size_t i = 0; i < kRepDim; ++i)
            for (size_t j = 0; j < kRepDim; ++j) r.m_[i][j] = m_[i][j] * s;
        return r;
    }
    RepVector operator*(const RepVector& v) const {
        RepVector out{};
        for (size_t i = 0; i < kRepDim; ++i)
            for (size_t j = 0; j < kRepDim; ++j)
                if (!m_[i][j].is_zero()) out[i] += m_[i][j] * v[j];
        return out;
    }
    bool is_zero() const {
        for (const auto& row : m_)
            for (const auto& x : row)
                if (!x.is_zero()) return false;
        return true;
    }
    bool operator==(const RepOperator& o) const { return m_ == o.m_; }

private:
    std::array<std::array<Rational, kRepDim>, kRepDim> m_;
};

// Y_i(c) = (1 + f_i/c + f_i^2/(2c^2) [+ f_2^3/(6c^3)]) alpha_i^vee(c),
// where alpha_i^vee(c) scales a weight-mu basis vector by c^<alpha_i^vee,mu>.
inline RepOperator rep_Y(size_t i, const Rational& c) {
    if (c.is_zero()) throw std::domain_error("rep_Y: c must be nonzero");
    RepOperator torus;
    for (size_t v = 0; v < kRepDim; ++v) torus.at(v, v) = c.pow(rep_weights()[v].pairing(i));
    RepOperator f = RepOperator::chevalley(false, i);
    RepOperator series = RepOperator::identity() + f.scaled(c.reciprocal());
    RepOperator f2 = f * f;
    series = series + f2.scaled((Rational(2) * c.pow(2)).reciprocal());
    if (i == 2) series = series + (f2 * f).scaled((Rational(6) * c.pow(3)).reciprocal());
    return series * torus;
}

// Numeric v1(x): the matrix product applied to |1>, the independent oracle
// for the symbolic expansion below.
inline RepVector v1_numeric(const std::array<Rational, 6>& x) {
    static const std::array<size_t, 6> word = {0, 1, 2, 1, 2, 1};
    RepVector v = rep_basis_vector(B1);
    for (size_t pos = 6; pos-- > 0;) v = rep_Y(word[pos], x[pos]) * v;
    return v;
}

// ---------------------------------------------------------------------------
// Symbolic expansion
// ---------------------------------------------------------------------------

// 15 components over x0..x5; absent optional = zero coordinate.
using SymbolicRepVector = std::array<std::optional<PosRatExpr>, kRepDim>;

namespace detail {

inline SymbolicRepVector apply_sparse(bool is_e, size_t i, const SymbolicRepVector& v) {
    SymbolicRepVector out;
    for (const auto& ent : rep_table(is_e, i)) {
        if (!v[ent.src]) continue;
        PosRatExpr term = PosRatExpr::constant(Rational(ent.coeff)) * *v[ent.src];
        out[ent.dst] = out[ent.dst] ? *out[ent.dst] + term : term;
    }
    return out;
}

inline SymbolicRepVector apply_Y_symbolic(size_t i, const std::string& var,
                                          const SymbolicRepVector& v) {
    PosRatExpr x = PosRatExpr::variable(var);
    // torus factor
    SymbolicRepVector w;
    for (size_t b = 0; b < kRepDim; ++b)
        if (v[b]) w[b] = *v[b] * x.pow(rep_weights()[b].pairing(i));
    // truncated exponential in f_i / c
    SymbolicRepVector acc = w;
    SymbolicRepVector fk = w;
    int top = i == 2 ? 3 : 2;
    Rational factorial(1);
    for (int k = 1; k <= top; ++k) {
        fk = apply_sparse(false, i, fk);
        factorial *= Rational(k);
        PosRatExpr scale = PosRatExpr::constant(factorial.reciprocal()) * x.pow(-k);
        for (size_t b = 0; b < kRepDim; ++b) {
            if (!fk[b]) continue;
            PosRatExpr term = *fk[b] * scale;
            acc[b] = acc[b] ? *acc[b] + term : term;
        }
    }
    return acc;
}

}  // namespace detail

// All 15 components of v1(x) as subtraction-free expressions in x0..x5.
// Every component must be present (the expansion is strictly positive);
// a missing one indicates an implementation bug and throws.
inline std::array<PosRatExpr, kRepDim> v1_expand() {
    static const std::array<size_t, 6> word = {0, 1, 2, 1, 2, 1};
    SymbolicRepVector v;
    v[B1] = PosRatExpr::constant(Rational(1));
    for (size_t pos = 6; pos-- > 0;)
        v = detail::apply_Y_symbolic(word[pos], "x" + std::to_string(pos), v);
    std::array<PosRatExpr, kRepDim> out;
    for (size_t b = 0; b < kRepDim; ++b) {
        if (!v[b])
            throw std::logic_error("v1_expand: component " + rep_basis_names()[b] +
                                   " vanished; expansion must be positive");
        out[b] = *v[b];
    }
    return out;
}

}  // namespace gcrystal
