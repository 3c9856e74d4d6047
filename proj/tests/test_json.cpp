#include "helpers.hpp"

#include "stein/error.hpp"
#include "stein/json_io.hpp"

#include <doctest.h>

using namespace stein;
using namespace testing_util;

TEST_CASE("rationals as strings")
{
    CHECK(encode(q(-3, 6)) == Json("-1/2"));
    CHECK(encode(q(4)) == Json("4"));
    CHECK(decode_rational(Json("6/4")) == q(3, 2));
    CHECK(decode_rational(Json(7)) == q(7));
    CHECK_THROWS_AS(decode_rational(Json(0.5)), FormatError);
    CHECK_THROWS_AS(decode_rational(Json("1/0")), FormatError);
    CHECK_THROWS_AS(parse_json("{\"a\":"), FormatError);
}

TEST_CASE("combinatorial objects round trip")
{
    JsonCodec codec(GroundSet::range(4));
    for (const auto& f : enumerate_compositions(range_mask(4))) {
        auto j = codec.encode(f);
        CHECK(codec.decode_composition(j) == f);
        CHECK(codec.decode_composition(parse_json(j.dump())) == f);
    }
    CHECK(codec.encode(comp("12,3")).dump() == R"([["1","2"],["3"]])");
    CHECK(codec.decode_composition(parse_json("[[1,2],[3]]")) == comp("12,3"));
    CHECK_THROWS_AS(codec.decode_composition(parse_json("[[1,2],[2]]")), DomainError);
    CHECK_THROWS_AS(codec.decode_composition(parse_json("[[9]]")), DomainError);
    CHECK_THROWS_AS(codec.decode_composition(parse_json("{\"a\":1}")), FormatError);

    for (const auto& p : all_preposets(range_mask(3)))
        CHECK(codec.decode_preposet(codec.encode(p)) == p);
    TwoBlock b{set("1"), set("23")};
    CHECK(codec.decode_two_block(codec.encode(b)) == b);

    auto t = Tree::node(Tree::leaf(set("2")), Tree::node(Tree::leaf(set("13")), Tree::leaf(set("4"))));
    CHECK(codec.encode(t).dump() == R"([["2"],[["1","3"],["4"]]])");
    CHECK(codec.decode_tree(codec.encode(t)) == t);
}

TEST_CASE("labels other than 1..n")
{
    JsonCodec codec(GroundSet({"a", "b", "c"}));
    auto f = codec.decode_composition(parse_json(R"([["b"],["a","c"]])"));
    CHECK(f == comp("2,13"));
    CHECK(codec.encode(f).dump() == R"([["b"],["a","c"]])");
}

TEST_CASE("algebra elements round trip")
{
    JsonCodec codec(GroundSet::range(3));
    std::mt19937 rng(9);
    for (Basis b : {Basis::M, Basis::P, Basis::C, Basis::H, Basis::Q}) {
        BasisElement x(range_mask(3), b);
        for (const auto& f : enumerate_compositions(range_mask(3)))
            if (rng() % 2)
                x.add(f, random_coeff(rng));
        CHECK(codec.decode_element(parse_json(codec.encode(x).dump())) == x);
        auto d = comultiply(x, set("1"), set("23"));
        CHECK(codec.decode_tensor(codec.encode(d)) == d);
    }
    auto cone_x = cone_element(transitive_closure(range_mask(3), std::vector<std::pair<int, int>>{{0, 1}}));
    CHECK(codec.decode_element(codec.encode(cone_x)) == cone_x);
    CHECK_THROWS_AS(codec.decode_element(parse_json(R"({"ground":["1"],"basis":"X","terms":[]})")), FormatError);
    CHECK_THROWS_AS(codec.decode_element(parse_json(R"({"ground":["1","2"],"basis":"M","terms":[{"key":[["1"]],"coeff":"1"}]})")),
                    DomainError);

    ZieElement z = comb_element(comp("1,2,3")) + comb_element(comp("13,2"), q(-2));
    CHECK(codec.decode_zie(codec.encode(z)) == z);
    // any tree is accepted and reduced
    auto zj = parse_json(R"({"ground":["1","2"],"terms":[{"tree":[["2"],["1"]],"coeff":"1"}]})");
    CHECK(codec.decode_zie(zj) == comb_element(comp("1,2"), q(-1)));

    ZieDualElement d{range_mask(3), DualBasis::m, {}};
    d.add(comp("1,23"), q(1, 3));
    CHECK(codec.decode_zie_dual(codec.encode(d)) == d);
    CHECK_THROWS_AS(codec.decode_zie_dual(parse_json(R"({"ground":["1","2"],"basis":"p","terms":[{"key":[["2"],["1"]],"coeff":"1"}]})")),
                    DomainError);

    auto fn = stein::cone(preposet_of(comp("1,23")));
    CHECK(codec.decode_pwc(codec.encode(fn)) == fn);
}

TEST_CASE("chamber data round trip")
{
    JsonCodec codec(GroundSet::range(3));
    auto f = m_functional(comp("1,23"));
    CHECK(codec.decode_functional(parse_json(codec.encode(f).dump())) == f);
    CHECK_THROWS_AS(codec.decode_functional(parse_json(R"({"ground":["1","2"],"values":{"0":"1"}})")), DomainError);
    auto e = eulerian_element(set("12"));
    CHECK(codec.encode(e).dump() == R"({"coeffs":{"+":"1/2","-":"1/2"},"ground":["1","2"]})");
}
