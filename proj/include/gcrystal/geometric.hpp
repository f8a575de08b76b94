#pragma once

// The affine geometric crystal on V1 = { Y_0(x0) Y_1(x1) Y_2(x2) Y_1(x3)
// Y_2(x4) Y_1(x5) |1> }: one-parameter actions e_i^c, the rational functions
// epsilon_i and gamma_i, both numerically on positive rational points and
// symbolically as subtraction-free expressions in (c, x0..x5).
//
// e_1 and e_2 come from the Schubert-cell formulas; e_0 is the twisted
// action expressed through the five auxiliary polynomials D, E, F, G, H.

#include "gcrystal/expr.hpp"
#include "gcrystal/parse.hpp"
#include "gcrystal/schubert.hpp"

#include <array>
#include <string>

namespace gcrystal {

using GeometricPoint = std::array<Rational, 6>;

inline void check_positive(const GeometricPoint& x) {
    for (const auto& v : x)
        if (!v.is_positive()) throw std::domain_error("geometric point must be positive");
}

inline const std::vector<std::string>& geom_variables() {
    static const std::vector<std::string> v = {"x0", "x1", "x2", "x3", "x4", "x5"};
    return v;
}

// Coordinate multipliers and statistics of one action e_i^c, as expressions
// in c and x0..x5 (multiplier is the constant 1 on unchanged coordinates).
struct GeomSymbolic {
    std::array<PosRatExpr, 6> multiplier;
    PosRatExpr eps;
    PosRatExpr gamma;
};

namespace detail {

inline PosRatExpr gparse(const std::string& s) {
    static const std::vector<std::string> vars = {"c", "x0", "x1", "x2", "x3", "x4", "x5"};
    return parse_expr(s, vars);
}

inline GeomSymbolic build_geom_symbolic(size_t i) {
    const std::string eps1 =
        "x0/x1 + x0*x2^3/(x1^2*x3) + x0*x2^3*x4^3/(x1^2*x3^2*x5)";
    const std::string eps2 = "x1/x2 + x1*x3/(x2^2*x4)";
    const std::string D =
        "c^2*x0^2*x2^3*x3 + x1*x2^3*x3^2*x5 + c*x0*(x1*x3^3 + 3*x1*x2*x3^2*x4 "
        "+ 3*x1*x2^2*x3*x4^2 + x2^3*(x3^2 + x1*x4^3 + x1*x3*x5))";
    const std::string E =
        "x0^2*x2^3*x3 + x1*x2^3*x3^2*x5 + x0*(x1*x3^3 + 3*x1*x2*x3^2*x4 "
        "+ 3*x1*x2^2*x3*x4^2 + x2^3*(x3^2 + x1*x4^3 + x1*x3*x5))";
    const std::string F =
        "c*x0^2*x2^3*x3 + x1*x2^3*x3^2*x5 + x0*(c*x1*x3^3 + 3*c*x1*x2*x3^2*x4 "
        "+ 3*c*x1*x2^2*x3*x4^2 + x2^3*(x3^2 + c*x1*x4^3 + c*x1*x3*x5))";
    const std::string G =
        "c*x0^2*x2^3*x3 + x1*x2^3*x3^2*x5 + x0*(x1*x3^3 + (2 + c)*x1*x2*x3^2*x4 "
        "+ (1 + 2*c)*x1*x2^2*x3*x4^2 + x2^3*(x3^2 + c*x1*x4^3 + c*x1*x3*x5))";
    const std::string H =
        "c*x0^2*x2^3*x3 + x1*x2^3*x3^2*x5 + x0*(x1*x3^3 + 3*x1*x2*x3^2*x4 "
        "+ 3*x1*x2^2*x3*x4^2 + x2^3*(x3^2 + x1*x4^3 + c*x1*x3*x5))";

    GeomSymbolic g;
    PosRatExpr one = PosRatExpr::constant(Rational(1));
    g.multiplier.fill(one);
    switch (i) {
        case 1:
            g.multiplier[1] = gparse(
                "(c*x0/x1 + x0*x2^3/(x1^2*x3) + x0*x2^3*x4^3/(x1^2*x3^2*x5))/(" + eps1 + ")");
            g.multiplier[3] = gparse(
                "(c*x0/x1 + c*x0*x2^3/(x1^2*x3) + x0*x2^3*x4^3/(x1^2*x3^2*x5))"
                "/(c*x0/x1 + x0*x2^3/(x1^2*x3) + x0*x2^3*x4^3/(x1^2*x3^2*x5))");
            g.multiplier[5] = gparse(
                "c*(" + eps1 + ")/(c*x0/x1 + c*x0*x2^3/(x1^2*x3) + x0*x2^3*x4^3/(x1^2*x3^2*x5))");
            g.eps = gparse(eps1);
            g.gamma = gparse("x1^2*x3^2*x5^2/(x0*x2^3*x4^3)");
            break;
        case 2:
            g.multiplier[2] = gparse("(c*x1/x2 + x1*x3/(x2^2*x4))/(" + eps2 + ")");
            g.multiplier[4] = gparse("c*(" + eps2 + ")/(c*x1/x2 + x1*x3/(x2^2*x4))");
            g.eps = gparse(eps2);
            g.gamma = gparse("x2^2*x4^2/(x1*x3*x5)");
            break;
        case 0:
            g.multiplier[0] = gparse("(" + D + ")/(c*(" + E + "))");
            g.multiplier[1] = gparse("(" + F + ")/(c*(" + E + "))");
            g.multiplier[2] = gparse("(" + G + ")/(c*(" + E + "))");
            g.multiplier[3] = gparse("(" + D + ")*(" + H + ")/(c^2*(" + E + ")*(" + F + "))");
            g.multiplier[4] = gparse("(" + D + ")/(c*(" + G + "))");
            g.multiplier[5] = gparse("(" + D + ")/(c*(" + H + "))");
            g.eps = gparse("(" + E + ")/(x0^3*x2^3*x3)");
            g.gamma = gparse("x0^2/(x1*x3*x5)");
            break;
        default:
            throw std::invalid_argument("geom_symbolic: index must be 0, 1 or 2");
    }
    return g;
}

}  // namespace detail

inline const GeomSymbolic& geom_symbolic(size_t i) {
    static const GeomSymbolic g0 = detail::build_geom_symbolic(0);
    static const GeomSymbolic g1 = detail::build_geom_symbolic(1);
    static const GeomSymbolic g2 = detail::build_geom_symbolic(2);
    if (i > 2) throw std::invalid_argument("geom_symbolic: index must be 0, 1 or 2");
    return i == 0 ? g0 : i == 1 ? g1 : g2;
}

inline std::map<std::string, Rational> geom_bindings(const GeometricPoint& x) {
    std::map<std::string, Rational> b;
    for (size_t k = 0; k < 6; ++k) b["x" + std::to_string(k)] = x[k];
    return b;
}

inline GeometricPoint geom_e(size_t i, const Rational& c, const GeometricPoint& x) {
    if (!c.is_positive()) throw std::domain_error("geom_e: parameter must be positive");
    check_positive(x);
    auto bind = geom_bindings(x);
    bind["c"] = c;
    const GeomSymbolic& g = geom_symbolic(i);
    GeometricPoint out;
    for (size_t k = 0; k < 6; ++k) out[k] = g.multiplier[k].evaluate(bind) * x[k];
    return out;
}

inline Rational geom_eps(size_t i, const GeometricPoint& x) {
    check_positive(x);
    return geom_symbolic(i).eps.evaluate(geom_bindings(x));
}

inline Rational geom_gamma(size_t i, const GeometricPoint& x) {
    check_positive(x);
    return geom_symbolic(i).gamma.evaluate(geom_bindings(x));
}

// Verma-checker adapter over the V1 actions.
inline VermaAction make_geometric_action() {
    VermaAction act;
    act.variables = geom_variables();
    act.apply = [](size_t index, const Rational& c, const PointMap& point) -> PointMap {
        GeometricPoint x;
        for (size_t k = 0; k < 6; ++k) x[k] = point.at("x" + std::to_string(k));
        GeometricPoint y = geom_e(index, c, x);
        PointMap out;
        for (size_t k = 0; k < 6; ++k) out["x" + std::to_string(k)] = y[k];
        return out;
    };
    return act;
}

}  // namespace gcrystal
