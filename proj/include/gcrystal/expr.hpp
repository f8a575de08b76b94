#pragma once

// Subtraction-free multivariate rational expressions over exact rationals.
//
// A PosPoly is a positive linear combination of (Laurent) monomials, stored
// expanded and keyed by exponent vector. A PosRatExpr is a quotient of two
// PosPolys, canonicalized so that
//   * every exponent in numerator and denominator is nonnegative, and
//   * for each variable the minimum exponent across both parts is zero
//     (Laurent powers are shifted into the denominator, shared monomial
//     content is removed).
// No polynomial-content gcd cancellation is performed; equality is decided
// by cross-multiplication.

#include "gcrystal/rational.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace gcrystal {

// Exponent vector; zero exponents are never stored.
using ExpVec = std::map<std::string, int>;

struct Monomial {
    Rational coeff;
    ExpVec exps;
};

class PosPoly {
public:
    using TermMap = std::map<ExpVec, Rational>;

    static PosPoly constant(const Rational& c) {
        PosPoly p;
        p.insert(ExpVec{}, c);
        return p;
    }
    static PosPoly one() { return constant(Rational(1)); }
    static PosPoly variable(const std::string& name, int exp = 1) {
        PosPoly p;
        ExpVec e;
        if (exp != 0) e[name] = exp;
        p.insert(e, Rational(1));
        return p;
    }
    static PosPoly monomial(const Monomial& m) {
        PosPoly p;
        p.insert(m.exps, m.coeff);
        return p;
    }
    static PosPoly from_terms(TermMap terms) {
        PosPoly p;
        for (auto& [e, c] : terms) p.insert(e, c);
        p.check_nonempty();
        return p;
    }

    const TermMap& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }

    PosPoly operator+(const PosPoly& o) const {
        PosPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.insert(e, c);
        return r;
    }

    PosPoly operator*(const PosPoly& o) const {
        PosPoly r;
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) r.insert(mul_exps(ea, eb), ca * cb);
        return r;
    }

    PosPoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("PosPoly::pow: negative exponent");
        PosPoly r = one();
        for (int k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    bool operator==(const PosPoly& o) const { return terms_ == o.terms_; }

    Rational evaluate(const std::map<std::string, Rational>& point) const {
        check_nonempty();
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (const auto& [v, k] : e) {
                auto it = point.find(v);
                if (it == point.end()) throw std::domain_error("unbound variable: " + v);
                if (it->second.is_zero()) throw std::domain_error("variable bound to zero: " + v);
                t *= it->second.pow(k);
            }
            acc += t;
        }
        return acc;
    }

    void collect_variables(std::set<std::string>& out) const {
        for (const auto& [e, c] : terms_)
            for (const auto& [v, k] : e) out.insert(v);
    }

    int min_exponent(const std::string& v) const {
        // Minimum over all terms, counting absent as zero.
        int m = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            auto it = e.find(v);
            int k = it == e.end() ? 0 : it->second;
            m = first ? k : std::min(m, k);
            first = false;
        }
        return m;
    }

    // Multiplies every term by var^shift.
    PosPoly shifted(const std::string& v, int shift) const {
        if (shift == 0) return *this;
        PosPoly r;
        for (const auto& [e, c] : terms_) {
            ExpVec e2 = e;
            int k = (e2.count(v) ? e2[v] : 0) + shift;
            if (k == 0) e2.erase(v);
            else e2[v] = k;
            r.insert(e2, c);
        }
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        bool first_term = true;
        for (const auto& [e, c] : terms_) {
            if (!first_term) os << " + ";
            first_term = false;
            bool printed = false;
            if (c != Rational(1) || e.empty()) {
                os << c.str();
                printed = true;
            }
            for (const auto& [v, k] : e) {
                if (printed) os << "*";
                os << v;
                if (k != 1) os << "^" << k;
                printed = true;
            }
        }
        return os.str();
    }

private:
    void insert(const ExpVec& e, const Rational& c) {
        if (!c.is_positive()) throw std::invalid_argument("PosPoly: coefficient must be positive");
        for (const auto& [v, k] : e)
            if (k == 0) throw std::invalid_argument("PosPoly: zero exponent stored");
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) it->second += c;  // positive + positive stays positive
    }
    void check_nonempty() const {
        if (terms_.empty()) throw std::invalid_argument("PosPoly: empty polynomial");
    }
    static ExpVec mul_exps(const ExpVec& a, const ExpVec& b) {
        ExpVec r = a;
        for (const auto& [v, k] : b) {
            int nk = (r.count(v) ? r[v] : 0) + k;
            if (nk == 0) r.erase(v);
            else r[v] = nk;
        }
        return r;
    }
    TermMap terms_;
};

class PosRatExpr {
public:
    PosRatExpr() : num_(PosPoly::one()), den_(PosPoly::one()) {}

    // Canonicalizes the quotient of two (possibly Laurent) positive polys.
    PosRatExpr(PosPoly num, PosPoly den) : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }

    static PosRatExpr constant(const Rational& c) {
        if (!c.is_positive()) throw std::invalid_argument("PosRatExpr: constant must be positive");
        return PosRatExpr(PosPoly::constant(c), PosPoly::one());
    }
    static PosRatExpr variable(const std::string& name) {
        return PosRatExpr(PosPoly::variable(name), PosPoly::one());
    }
    static PosRatExpr monomial(const Monomial& m) {
        return PosRatExpr(PosPoly::monomial(m), PosPoly::one());
    }

    const PosPoly& num() const { return num_; }
    const PosPoly& den() const { return den_; }

    PosRatExpr operator+(const PosRatExpr& o) const {
        return PosRatExpr(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    PosRatExpr operator*(const PosRatExpr& o) const {
        return PosRatExpr(num_ * o.num_, den_ * o.den_);
    }
    PosRatExpr operator/(const PosRatExpr& o) const {
        return PosRatExpr(num_ * o.den_, den_ * o.num_);
    }
    PosRatExpr pow(int e) const {
        if (e < 0) return reciprocal().pow(-e);
        return PosRatExpr(num_.pow(e), den_.pow(e));
    }
    PosRatExpr reciprocal() const { return PosRatExpr(den_, num_); }

    // Exact equality as rational functions: cross-multiplied polynomials match.
    bool equals(const PosRatExpr& o) const { return num_ * o.den_ == o.num_ * den_; }

    Rational evaluate(const std::map<std::string, Rational>& point) const {
        Rational d = den_.evaluate(point);
        if (d.is_zero()) throw std::domain_error("denominator evaluates to zero");
        return num_.evaluate(point) / d;
    }

    PosRatExpr substitute(const std::map<std::string, PosRatExpr>& bindings) const {
        return substitute_poly(num_, bindings) / substitute_poly(den_, bindings);
    }

    std::set<std::string> variables() const {
        std::set<std::string> v;
        num_.collect_variables(v);
        den_.collect_variables(v);
        return v;
    }

    bool is_one() const {
        return num_ == PosPoly::one() && den_ == PosPoly::one();
    }

    std::string str() const {
        if (den_ == PosPoly::one()) {
            if (num_.size() == 1) return num_.str();
            return "(" + num_.str() + ")";
        }
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    static PosRatExpr substitute_poly(const PosPoly& p,
                                      const std::map<std::string, PosRatExpr>& bindings) {
        bool first = true;
        PosRatExpr acc;
        for (const auto& [e, c] : p.terms()) {
            PosRatExpr t = constant(c);
            for (const auto& [v, k] : e) {
                auto it = bindings.find(v);
                PosRatExpr base = it == bindings.end() ? variable(v) : it->second;
                t = t * base.pow(k);
            }
            acc = first ? t : acc + t;
            first = false;
        }
        return acc;
    }

    // Shift exponents so that, per variable, the minimum over both parts is 0.
    void canonicalize() {
        std::set<std::string> vars;
        num_.collect_variables(vars);
        den_.collect_variables(vars);
        for (const auto& v : vars) {
            int m = std::min(num_.min_exponent(v), den_.min_exponent(v));
            if (m != 0) {
                num_ = num_.shifted(v, -m);
                den_ = den_.shifted(v, -m);
            }
        }
    }

    PosPoly num_;
    PosPoly den_;
};

inline PosRatExpr add(const PosRatExpr& a, const PosRatExpr& b) { return a + b; }
inline PosRatExpr mul(const PosRatExpr& a, const PosRatExpr& b) { return a * b; }
inline PosRatExpr div(const PosRatExpr& a, const PosRatExpr& b) { return a / b; }
inline bool expr_equal(const PosRatExpr& a, const PosRatExpr& b) { return a.equals(b); }

}  // namespace gcrystal
