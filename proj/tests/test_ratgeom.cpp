#include "doctest.h"
#include "helpers.hpp"

#include "stein/error.hpp"
#include "stein/ratgeom.hpp"

using namespace stein;
using namespace testing_util;

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("-1/2") == q(-1, 2));
    CHECK(parse_rational("4/6") == q(2, 3));
    CHECK(parse_rational("7") == 7);
    CHECK(to_string(q(-3, 6)) == "-1/2");
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("x"), DomainError);
    CHECK_THROWS_AS(parse_rational("1/-2"), DomainError);
}

TEST_CASE("pairing of coweights and weights")
{
    Mask g = set("123");
    Point h = coroot_point(g, 0, 1);
    CHECK(pair(h, weight_point(g, set("13"))) == 1);
    Point lam{g, {q(5), q(2), q(9)}};
    CHECK(pair(h, lam) == 3);
    CHECK(pair(h, weight_point(g, g)) == 0);
    Point bad{g, {q(1), q(0), q(0)}};
    CHECK_THROWS_AS(pair(bad, lam), DomainError);
    CHECK_THROWS_AS(pair(h, weight_point(set("12"), set("1"))), DomainError);
}

TEST_CASE("feasibility")
{
    LinearConstraintSystem a{1, {}};
    a.add({q(1)}, Relation::Greater);
    a.add({q(-1)}, Relation::Greater);
    CHECK_FALSE(feasible(a).has_value());

    LinearConstraintSystem b{2, {}};
    b.add({q(1), q(1)}, Relation::Equal);
    b.add({q(1), q(0)}, Relation::Greater);
    auto x = feasible(b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] > 0);
    CHECK((*x)[0] + (*x)[1] == 0);

    LinearConstraintSystem c{2, {}};
    c.add({q(1), q(0)}, Relation::GreaterEqual, q(-3)); // x >= 3
    c.add({q(-1), q(-1)}, Relation::GreaterEqual, q(10)); // x + y <= 10
    c.add({q(0), q(1)}, Relation::Greater, q(-5)); // y > 5
    auto y = feasible(c);
    REQUIRE(y.has_value());
    CHECK(c.satisfied_by(*y));

    LinearConstraintSystem d{2, {}};
    d.add({q(1), q(0)}, Relation::GreaterEqual, q(-3));
    d.add({q(-1), q(-1)}, Relation::GreaterEqual, q(10));
    d.add({q(0), q(1)}, Relation::Greater, q(-7));
    CHECK_FALSE(feasible(d).has_value());
}

TEST_CASE("cone membership")
{
    Mask g = set("123");
    auto w = [&](const char* s) { return weight_point(g, set(s)).coords; };
    auto c = cone_member(recentre(w("12")), {recentre(w("1")), recentre(w("2"))}, false);
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 1);
    CHECK((*c)[1] == 1);

    auto h = [&](int a, int b) { return coroot_point(g, a, b).coords; };
    auto d = cone_member(h(0, 2), {h(0, 1), h(1, 2)}, true);
    REQUIRE(d.has_value());
    CHECK((*d)[0] == 1);
    CHECK((*d)[1] == 1);
    CHECK_FALSE(cone_member(h(2, 0), {h(0, 1), h(1, 2)}, false).has_value());

    Vector zero{q(0), q(0), q(0)};
    auto z = cone_member(zero, {h(0, 1), h(1, 2)}, false);
    REQUIRE(z.has_value());
    CHECK((*z)[0] == 0);
    CHECK(cone_member(zero, {}, false).has_value());
    CHECK_FALSE(cone_member(zero, {}, true).has_value());
    CHECK_FALSE(cone_member(h(0, 1), {}, false).has_value());
}

TEST_CASE("linear algebra")
{
    Matrix weights;
    for (Mask s : {set("1"), set("12"), set("13")})
        weights.push_back(recentre(weight_point(set("123"), s).coords));
    CHECK(rank(weights) == 2);

    auto k = kernel_basis({}, 3);
    CHECK(k.size() == 3);

    Matrix a{{q(1), q(2)}, {q(2), q(4)}};
    CHECK_FALSE(solve(a, {q(1), q(3)}, 2).has_value());
    auto s = solve(a, {q(1), q(2)}, 2);
    REQUIRE(s.has_value());
    CHECK((*s)[0] + 2 * (*s)[1] == 1);
    auto kb = kernel_basis(a, 2);
    REQUIRE(kb.size() == 1);
    CHECK(kb[0][0] + 2 * kb[0][1] == 0);

    Matrix m{{q(2), q(1)}, {q(1), q(1)}};
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK((*inv)[0][0] == 1);
    CHECK((*inv)[0][1] == -1);
    CHECK((*inv)[1][1] == 2);
    CHECK_FALSE(inverse(a).has_value());
}

TEST_CASE("sparse echelon agrees with dense rank")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> val(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
        SparseEchelon e;
        Matrix dense;
        for (int r = 0; r < 7; ++r) {
            SparseEchelon::Row row;
            Vector d(6);
            for (int c = 0; c < 6; ++c) {
                int v = val(rng) * (val(rng) == 0 ? 0 : 1);
                d[c] = v;
                if (v)
                    row[c] = v;
            }
            dense.push_back(d);
            e.insert(row);
            CHECK(e.rank() == rank(dense));
            CHECK(e.reduce(row).empty());
        }
    }
}
