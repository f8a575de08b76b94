#include "gcrystal/parse.hpp"
#include "gcrystal/tropical.hpp"

#include <doctest.h>

#include <random>

using namespace gcrystal;

namespace {

LinForm lin(std::initializer_list<std::pair<std::string, std::int64_t>> cs, std::int64_t k = 0) {
    LinForm f;
    f.constant = k;
    for (auto& [v, c] : cs)
        if (c != 0) f.coeffs[v] = c;
    return f;
}

std::map<std::string, std::int64_t> ipt(
    std::initializer_list<std::pair<std::string, std::int64_t>> xs) {
    std::map<std::string, std::int64_t> m;
    for (auto& [k, v] : xs) m[k] = v;
    return m;
}

Box cube(const std::vector<std::string>& vars, std::int64_t lo, std::int64_t hi) {
    Box b;
    for (const auto& v : vars) b[v] = {lo, hi};
    return b;
}

}  // namespace

TEST_CASE("ultra discretization of monomials, sums, quotients") {
    PosRatExpr q = parse_expr("x0/x1", {"x0", "x1"});
    PLFunction f = ultra_discretize(q);
    CHECK(f.plus.forms() == std::vector<LinForm>{lin({{"x0", 1}, {"x1", -1}})});
    CHECK(f.minus.forms() == std::vector<LinForm>{LinForm{}});

    // constants vanish under the degree valuation
    PLFunction c = ultra_discretize(parse_expr("7", {}));
    CHECK(c.plus.forms() == std::vector<LinForm>{LinForm{}});
    CHECK(c.minus.forms() == std::vector<LinForm>{LinForm{}});

    std::vector<std::string> vars = {"c", "x0", "x1", "x2", "x3"};
    PLFunction g = ultra_discretize(parse_expr("c*x0/x1 + x0*x2^3/(x1^2*x3)", vars));
    // max(c + x0 + x1 + x3, x0 + 3 x2) - (2 x1 + x3), with the monomial
    // denominator folded in: max(c + x0 - x1, x0 + 3 x2 - 2 x1 - x3)
    PLFunction expected;
    expected.plus = MaxPlusPoly({lin({{"c", 1}, {"x0", 1}, {"x1", -1}}),
                                 lin({{"x0", 1}, {"x1", -2}, {"x2", 3}, {"x3", -1}})});
    expected.minus = MaxPlusPoly::zero_form();
    CHECK(g == expected);

    // ... which is the first branch of the x1-update of e_1 once c = 1
    PLFunction at1 = g.substituted("c", 1);
    PLFunction branch;
    branch.plus = MaxPlusPoly({lin({{"x0", 1}, {"x1", -1}}, 1),
                               lin({{"x0", 1}, {"x1", -2}, {"x2", 3}, {"x3", -1}})});
    auto res = pl_equal_on_box(at1, branch, cube({"x0", "x1", "x2", "x3"}, -4, 4));
    CHECK(res.equal);
}

TEST_CASE("eval_pl") {
    PLFunction f;
    f.plus = MaxPlusPoly({lin({{"x", 1}}, 1), lin({{"y", 2}})});
    f.minus = MaxPlusPoly({lin({{"x", 1}}), lin({{"y", 1}})});
    CHECK(eval_pl(f, ipt({{"x", 0}, {"y", 0}})) == 1);
    CHECK_THROWS_AS(eval_pl(f, ipt({{"x", 0}})), std::domain_error);

    // a single strictly dominating form wins
    PLFunction g;
    g.plus = MaxPlusPoly({lin({{"x", 5}}), lin({{"x", 1}})});
    CHECK(eval_pl(g, ipt({{"x", 3}})) == 15);

    // Xi_2 at the origin
    PLFunction xi2;
    xi2.plus = MaxPlusPoly({lin({{"x1", 1}, {"x2", -1}}, 1),
                            lin({{"x1", 1}, {"x3", 1}, {"x2", -2}, {"x4", -1}})});
    xi2.minus = MaxPlusPoly({lin({{"x1", 1}, {"x2", -1}}),
                             lin({{"x1", 1}, {"x3", 1}, {"x2", -2}, {"x4", -1}})});
    CHECK(eval_pl(xi2, ipt({{"x1", 0}, {"x2", 0}, {"x3", 0}, {"x4", 0}})) == 1);
}

TEST_CASE("box comparison finds the first lexicographic counterexample") {
    PLFunction maxx0;
    maxx0.plus = MaxPlusPoly({lin({{"x", 1}}), LinForm{}});
    PLFunction justx = pl_var("x");

    CHECK(pl_equal_on_box(maxx0, maxx0, cube({"x"}, -5, 5)).equal);
    CHECK(pl_equal_on_box(maxx0, justx, cube({"x"}, 0, 5)).equal);

    auto res = pl_equal_on_box(maxx0, justx, cube({"x"}, -1, 5));
    REQUIRE_FALSE(res.equal);
    CHECK(res.counterexample.at("x") == -1);
    CHECK(res.lhs_value == 0);
    CHECK(res.rhs_value == -1);

    // the cap refuses oversized boxes instead of sampling
    CHECK_THROWS_AS(pl_equal_on_box(maxx0, justx, cube({"x"}, 0, 1000), 100),
                    std::invalid_argument);
}

TEST_CASE("parallel box comparison agrees with serial") {
    PLFunction f;
    f.plus = MaxPlusPoly({lin({{"x", 1}, {"y", 1}}), lin({{"x", 2}}, -3)});
    PLFunction g;
    g.plus = MaxPlusPoly({lin({{"x", 1}, {"y", 1}})});
    Box box = cube({"x", "y"}, -6, 6);
    auto serial = pl_equal_on_box(f, g, box);
    auto parallel = pl_equal_on_box_parallel(f, g, box, 4);
    REQUIRE_FALSE(serial.equal);
    REQUIRE_FALSE(parallel.equal);
    CHECK(serial.counterexample == parallel.counterexample);

    auto ok_serial = pl_equal_on_box(f, f, box);
    auto ok_parallel = pl_equal_on_box_parallel(f, f, box, 4);
    CHECK(ok_serial.equal);
    CHECK(ok_parallel.equal);
    CHECK(ok_serial.points == ok_parallel.points);
}

TEST_CASE("pl_arith semantics") {
    PLFunction x = pl_var("x"), y = pl_var("y");
    PLFunction s = pl_add(x, y);
    CHECK(s.plus.forms() == std::vector<LinForm>{lin({{"x", 1}, {"y", 1}})});
    CHECK(s.minus.forms() == std::vector<LinForm>{LinForm{}});

    CHECK(pl_max(x, y).plus.forms().size() == 2);

    std::mt19937_64 rng(4242);
    auto random_pl = [&]() {
        std::vector<LinForm> plus, minus;
        for (int k = 0; k < 2 + static_cast<int>(rng() % 3); ++k)
            plus.push_back(lin({{"x", static_cast<std::int64_t>(rng() % 5) - 2},
                                {"y", static_cast<std::int64_t>(rng() % 5) - 2}},
                               static_cast<std::int64_t>(rng() % 7) - 3));
        for (int k = 0; k < 1 + static_cast<int>(rng() % 2); ++k)
            minus.push_back(lin({{"x", static_cast<std::int64_t>(rng() % 5) - 2},
                                 {"y", static_cast<std::int64_t>(rng() % 5) - 2}},
                                static_cast<std::int64_t>(rng() % 7) - 3));
        return PLFunction{MaxPlusPoly(plus), MaxPlusPoly(minus)};
    };
    for (int trial = 0; trial < 25; ++trial) {
        PLFunction f = random_pl(), g = random_pl();
        for (std::int64_t px = -3; px <= 3; ++px)
            for (std::int64_t py = -3; py <= 3; ++py) {
                auto p = ipt({{"x", px}, {"y", py}});
                CHECK(eval_pl(pl_add(f, g), p) == eval_pl(f, p) + eval_pl(g, p));
                CHECK(eval_pl(pl_sub(f, g), p) == eval_pl(f, p) - eval_pl(g, p));
                CHECK(eval_pl(pl_max(f, g), p) == std::max(eval_pl(f, p), eval_pl(g, p)));
            }
        CHECK(pl_equal_on_box(pl_sub(f, f), pl_const(0), cube({"x", "y"}, -3, 3)).equal);
    }
}

TEST_CASE("duplicate forms are removed and removal is sound") {
    MaxPlusPoly p({lin({{"x", 1}}, 2), lin({{"x", 1}}, 2), lin({{"y", 1}})});
    CHECK(p.forms().size() == 2);
    MaxPlusPoly q({lin({{"x", 1}}, 2), lin({{"y", 1}})});
    for (std::int64_t px = -3; px <= 3; ++px)
        for (std::int64_t py = -3; py <= 3; ++py)
            CHECK(p.eval(ipt({{"x", px}, {"y", py}})) == q.eval(ipt({{"x", px}, {"y", py}})));
}

namespace {

// top t-degree of a positive Laurent quotient: positive coefficients never
// cancel, so the degree at infinity is just the maximal exponent spread
std::int64_t top_degree(const PosRatExpr& e, const std::string& t) {
    auto top = [&](const PosPoly& p) {
        std::int64_t best = INT64_MIN;
        for (const auto& [exps, c] : p.terms()) {
            auto it = exps.find(t);
            best = std::max<std::int64_t>(best, it == exps.end() ? 0 : it->second);
        }
        return best;
    };
    return top(e.num()) - top(e.den());
}

}  // namespace

TEST_CASE("valuation homomorphism and degree compatibility") {
    std::vector<std::string> vars = {"x", "y"};
    PosRatExpr a = parse_expr("x^2*y + 3*x", vars);
    PosRatExpr b = parse_expr("(y + 2)/(x*y)", vars);
    Box box = cube(vars, -4, 4);

    auto prod = pl_add(ultra_discretize(a), ultra_discretize(b));
    CHECK(pl_equal_on_box(ultra_discretize(a * b), prod, box).equal);
    auto quot = pl_sub(ultra_discretize(a), ultra_discretize(b));
    CHECK(pl_equal_on_box(ultra_discretize(a / b), quot, box).equal);

    // v(f) = deg_t f(t^k): substituting powers of t realizes the valuation
    PosRatExpr tvar = PosRatExpr::variable("t");
    for (const PosRatExpr& f : {a, b, a * b, a / b}) {
        for (std::int64_t kx = -3; kx <= 3; ++kx)
            for (std::int64_t ky = -3; ky <= 3; ++ky) {
                PosRatExpr ft = f.substitute(
                    {{"x", tvar.pow(static_cast<int>(kx))}, {"y", tvar.pow(static_cast<int>(ky))}});
                CHECK(top_degree(ft, "t") ==
                      eval_pl(ultra_discretize(f), ipt({{"x", kx}, {"y", ky}})));
            }
    }
}
