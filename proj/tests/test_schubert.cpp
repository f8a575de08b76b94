#include "gcrystal/parse.hpp"
#include "gcrystal/schubert.hpp"

#include <doctest.h>

#include <random>

using namespace gcrystal;

namespace {

const std::vector<std::string> kXNames = {"x0", "x1", "x2", "x3", "x4", "x5"};
const std::vector<std::string> kXC = {"c", "x0", "x1", "x2", "x3", "x4", "x5"};
const Word kWord{0, 1, 2, 1, 2, 1};

PosRatExpr px(const std::string& s) { return parse_expr(s, kXC); }

PointMap random_point(std::mt19937_64& rng, const std::vector<std::string>& vars) {
    PointMap p;
    for (const auto& v : vars)
        p[v] = Rational(static_cast<long>(1 + rng() % 97), static_cast<long>(1 + rng() % 97));
    return p;
}

}  // namespace

TEST_CASE("single-letter word") {
    CartanData g2 = cartan_g2_affine();
    Word w{1};
    auto action = schubert_action(g2, w, 1, {"c1"});
    CHECK(expr_equal(action[0], parse_expr("c*c1", {"c", "c1"})));
    CHECK(expr_equal(schubert_epsilon(g2, w, 1, {"c1"}), parse_expr("1/c1", {"c1"})));
    CHECK(expr_equal(schubert_gamma(g2, w, 1, {"c1"}), parse_expr("c1^2", {"c1"})));
    CHECK_THROWS_AS(schubert_epsilon(g2, w, 0, {"c1"}), std::domain_error);
    CHECK_THROWS_AS(schubert_action(g2, w, 7, {"c1"}), std::invalid_argument);
}

TEST_CASE("epsilon and gamma on the G2 word match the theorem displays") {
    CartanData g2 = cartan_g2_affine();
    CHECK(expr_equal(schubert_epsilon(g2, kWord, 1, kXNames),
                     px("x0/x1 + x0*x2^3/(x1^2*x3) + x0*x2^3*x4^3/(x1^2*x3^2*x5)")));
    CHECK(expr_equal(schubert_epsilon(g2, kWord, 2, kXNames),
                     px("x1/x2 + x1*x3/(x2^2*x4)")));
    CHECK(expr_equal(schubert_gamma(g2, kWord, 1, kXNames),
                     px("x1^2*x3^2*x5^2/(x0*x2^3*x4^3)")));
    CHECK(expr_equal(schubert_gamma(g2, kWord, 0, kXNames), px("x0^2/(x1*x3*x5)")));
    CHECK(expr_equal(schubert_gamma(g2, kWord, 2, kXNames), px("x2^2*x4^2/(x1*x3*x5)")));
}

TEST_CASE("action on the G2 word matches the theorem displays") {
    CartanData g2 = cartan_g2_affine();
    auto a1 = schubert_action(g2, kWord, 1, kXNames);
    auto a2 = schubert_action(g2, kWord, 2, kXNames);

    const std::string eps1 = "x0/x1 + x0*x2^3/(x1^2*x3) + x0*x2^3*x4^3/(x1^2*x3^2*x5)";
    // the C at word position m multiplies coordinate x_{m-1}, so the display
    // C_1, C_3, C_5 sit at positions 1, 3, 5 of the action tuple
    CHECK(expr_equal(a1[1] / px("x1"),
                     px("(c*x0/x1 + x0*x2^3/(x1^2*x3) + x0*x2^3*x4^3/(x1^2*x3^2*x5))/(" + eps1 +
                        ")")));
    CHECK(expr_equal(a1[3] / px("x3"),
                     px("(c*x0/x1 + c*x0*x2^3/(x1^2*x3) + x0*x2^3*x4^3/(x1^2*x3^2*x5))"
                        "/(c*x0/x1 + x0*x2^3/(x1^2*x3) + x0*x2^3*x4^3/(x1^2*x3^2*x5))")));
    CHECK(expr_equal(a1[5] / px("x5"),
                     px("c*(" + eps1 +
                        ")/(c*x0/x1 + c*x0*x2^3/(x1^2*x3) + x0*x2^3*x4^3/(x1^2*x3^2*x5))")));
    CHECK(expr_equal(a2[2] / px("x2"),
                     px("(c*x1/x2 + x1*x3/(x2^2*x4))/(x1/x2 + x1*x3/(x2^2*x4))")));
    CHECK(expr_equal(a2[4] / px("x4"),
                     px("c*(x1/x2 + x1*x3/(x2^2*x4))/(c*x1/x2 + x1*x3/(x2^2*x4))")));

    // untouched positions are the identity binding
    for (size_t j : {0, 2, 4}) CHECK(expr_equal(a1[j], PosRatExpr::variable(kXNames[j])));
    for (size_t j : {0, 1, 3, 5}) CHECK(expr_equal(a2[j], PosRatExpr::variable(kXNames[j])));
}

TEST_CASE("c = 1 gives the identity for every index") {
    CartanData g2 = cartan_g2_affine();
    std::map<std::string, PosRatExpr> at1{{"c", PosRatExpr::constant(Rational(1))}};
    for (size_t i = 0; i < 3; ++i) {
        auto a = schubert_action(g2, kWord, i, kXNames);
        for (size_t j = 0; j < 6; ++j)
            CHECK(expr_equal(a[j].substitute(at1), PosRatExpr::variable(kXNames[j])));
    }
}

TEST_CASE("epsilon, gamma and cocycle compatibilities at random points") {
    CartanData g2 = cartan_g2_affine();
    VermaAction act = make_schubert_action(g2, kWord, kXNames);
    std::mt19937_64 rng(20260810);

    std::map<size_t, PosRatExpr> eps, gamma;
    for (size_t i = 0; i < 3; ++i) {
        eps.emplace(i, schubert_epsilon(g2, kWord, i, kXNames));
        gamma.emplace(i, schubert_gamma(g2, kWord, i, kXNames));
    }

    for (int trial = 0; trial < 8; ++trial) {
        PointMap x = random_point(rng, kXNames);
        Rational c(static_cast<long>(1 + rng() % 23), static_cast<long>(1 + rng() % 23));
        Rational c2(static_cast<long>(1 + rng() % 23), static_cast<long>(1 + rng() % 23));
        for (size_t i = 0; i < 3; ++i) {
            PointMap y = act.apply(i, c, x);
            CHECK(eps.at(i).evaluate(y) == c.reciprocal() * eps.at(i).evaluate(x));
            for (size_t j = 0; j < 3; ++j)
                CHECK(gamma.at(j).evaluate(y) == c.pow(g2.a(i, j)) * gamma.at(j).evaluate(x));
            CHECK(act.apply(i, c2, y) == act.apply(i, c * c2, x));
        }
    }
}

TEST_CASE("verma relations on the schubert action") {
    CartanData g2 = cartan_g2_affine();
    VermaAction act = make_schubert_action(g2, kWord, kXNames);

    SUBCASE("commuting pair (0,2)") {
        VermaReport r = verma_check(g2, 0, 2, act, 12, 11);
        CHECK(r.aij == 0);
        CHECK(r.holds);
        CHECK(r.variant_used == "commuting");
    }
    SUBCASE("length-3 pair (0,1)") {
        VermaReport r = verma_check(g2, 0, 1, act, 12, 12);
        CHECK(r.aij == -1);
        CHECK(r.holds);
        CHECK(r.variant_used == "length-3");
    }
    SUBCASE("length-6 pair (2,1): exactly one variant survives") {
        VermaReport r = verma_check(g2, 2, 1, act, 12, 13);
        CHECK(r.aij == -3);
        CHECK(r.aji == -1);
        REQUIRE(r.variants.size() == 2);
        CHECK(r.holds);
        CHECK(r.variant_used == "paper");
        for (const auto& v : r.variants)
            if (v.name == "legacy") CHECK_FALSE(v.holds);
    }
    SUBCASE("mirrored pair (1,2)") {
        VermaReport r = verma_check(g2, 1, 2, act, 12, 14);
        CHECK(r.aij == -1);
        CHECK(r.aji == -3);
        CHECK(r.holds);
        CHECK(r.variant_used == "paper");
    }
}

TEST_CASE("length-4 verma case on a synthetic C2 cell") {
    // a_01 = -2, a_10 = -1; exercised on the word (0,1,0,1)
    CartanData c2;
    c2.labels = {"0", "1"};
    c2.matrix = {{2, -2}, {-1, 2}};
    c2.marks = {1, 1};
    c2.comarks = {1, 1};
    c2.validate();
    Word w{0, 1, 0, 1};
    std::vector<std::string> names = {"y1", "y2", "y3", "y4"};
    VermaAction act = make_schubert_action(c2, w, names);
    VermaReport r = verma_check(c2, 0, 1, act, 10, 15);
    CHECK(r.aij == -2);
    CHECK(r.holds);
    CHECK(r.variant_used == "length-4");

    VermaReport rm = verma_check(c2, 1, 0, act, 10, 16);
    CHECK(rm.aij == -1);
    CHECK(rm.aji == -2);
    CHECK(rm.holds);
}

TEST_CASE("unsupported cartan pairs are rejected") {
    CartanData bad;
    bad.labels = {"0", "1"};
    bad.matrix = {{2, -4}, {-1, 2}};
    bad.marks = {1, 1};
    bad.comarks = {1, 1};
    bad.validate();
    Word w{0, 1};
    VermaAction act = make_schubert_action(bad, w, {"y1", "y2"});
    CHECK_THROWS_AS(verma_check(bad, 0, 1, act, 4, 1), std::invalid_argument);
}
