#include "doctest.h"
#include "helpers.hpp"

#include "stein/error.hpp"
#include "stein/zie.hpp"

using namespace stein;
using namespace testing_util;

namespace {

Tree L(const char* s) { return Tree::leaf(set(s)); }
Tree N(Tree a, Tree b) { return Tree::node(std::move(a), std::move(b)); }

ZieElement z_of(std::initializer_list<std::pair<const char*, Rational>> terms)
{
    ZieElement z;
    for (const auto& [k, c] : terms)
        z += comb_element(comp(k), c);
    return z;
}

ZieElement random_zie(Mask g, std::mt19937& rng)
{
    auto keys = based_compositions(g);
    std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
    ZieElement z{g, {}};
    for (int i = 0; i < 3; ++i)
        z.add(keys[pick(rng)], random_coeff(rng));
    return z;
}

ZieDualElement random_dual(Mask g, DualBasis b, std::mt19937& rng)
{
    auto keys = based_compositions(g);
    std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
    ZieDualElement d{g, b, {}};
    for (int i = 0; i < 3; ++i)
        d.add(keys[pick(rng)], random_coeff(rng));
    return d;
}

// <d, [z1, z2]> through the cobracket
Rational pair_tensor(const ZieDualTensor& t, const ZieElement& a, const ZieElement& b)
{
    Rational total = 0;
    for (const auto& [k, c] : t.terms) {
        auto ia = a.terms.find(k.first);
        auto ib = b.terms.find(k.second);
        if (ia != a.terms.end() && ib != b.terms.end())
            total += c * ia->second * ib->second;
    }
    return total;
}

} // namespace

TEST_CASE("debracket and antisym")
{
    Tree t = N(N(L("24"), N(L("1"), L("9"))), L("678"));
    CHECK(debracket(t) == comp("24,1,9,678"));
    CHECK(antisym(N(N(L("1"), L("2")), L("3"))).size() == 4);
    auto a = antisym(L("12"));
    REQUIRE(a.size() == 1);
    CHECK(a[0].second == 1);
    CHECK(debug_string(t) == "[[24,[1,9]],678]");
}

TEST_CASE("reduce to comb coordinates")
{
    CHECK(reduce(N(L("1"), L("2"))) == z_of({{"1,2", 1}}));
    CHECK(reduce(N(L("2"), L("1"))) == z_of({{"1,2", -1}}));
    CHECK(reduce(N(L("1"), N(L("2"), L("3")))) == z_of({{"1,2,3", 1}, {"1,3,2", -1}}));
    // reduction agrees with the embedding into Sigma
    std::vector<Tree> trees{N(L("3"), N(L("2"), L("1"))), N(N(L("2"), L("4")), N(L("13"), L("5"))),
                            N(L("4"), N(N(L("3"), L("1")), L("25")))};
    for (const auto& t : trees) {
        BasisElement direct(t.ground(), Basis::Q);
        for (const auto& [tt, s] : antisym(t))
            direct.add(debracket(tt), s);
        CHECK(embed_u(reduce(t)) == direct);
    }
}

TEST_CASE("embedding into Sigma is primitive")
{
    CHECK(embed_u(z_of({{"1,2", 1}})) == [] {
        BasisElement x(set("12"), Basis::Q);
        x.add(comp("1,2"), 1);
        x.add(comp("2,1"), -1);
        return x;
    }());
    CHECK(embed_u(z_of({{"123", 1}})) == BasisElement::vector(Basis::Q, comp("123")));
    for (int n = 1; n <= 4; ++n) {
        Mask g = range_mask(n);
        for (const auto& f : based_compositions(g)) {
            auto u = embed_u(comb_element(f));
            for_each_subset(g, [&](Mask s) {
                if (s != 0 && s != g)
                    CHECK(comultiply(u, s, g & ~s).is_zero());
            });
        }
    }
}

TEST_CASE("comb keys count the dimension")
{
    for (int n = 1; n <= 5; ++n)
        CHECK(static_cast<std::int64_t>(based_compositions(range_mask(n)).size()) == zie_dimension(n));
}

TEST_CASE("p evaluation")
{
    CHECK(p_eval(comp("1,2"), N(L("2"), L("1"))) == -1);
    for (int n = 1; n <= 4; ++n) {
        auto keys = based_compositions(range_mask(n));
        for (const auto& f : keys)
            for (const auto& g : keys)
                CHECK(p_eval(f, Tree::comb(g)) == (f == g ? 1 : 0));
    }
}

TEST_CASE("projection to Zie*")
{
    CHECK(project_ustar(BasisElement::vector(Basis::P, comp("1,2"))).terms
          == std::map<SetComposition, Rational>{{comp("1,2"), 1}});
    CHECK(project_ustar(BasisElement::vector(Basis::P, comp("2,1"))).terms
          == std::map<SetComposition, Rational>{{comp("1,2"), -1}});
    // m_F := U*(M_F) and c_F := U*(C_F) for based F
    for (const auto& f : based_compositions(set("1234"))) {
        CHECK(project_ustar(BasisElement::vector(Basis::M, f), DualBasis::m).terms
              == std::map<SetComposition, Rational>{{f, 1}});
        CHECK(project_ustar(BasisElement::vector(Basis::C, f), DualBasis::c).terms
              == std::map<SetComposition, Rational>{{f, 1}});
    }
}

TEST_CASE("U* kills products in all three relation families")
{
    for (int n = 2; n <= 4; ++n) {
        Mask g = range_mask(n);
        for_each_subset(g, [&](Mask s) {
            if (s == 0 || s == g)
                return;
            Mask t = g & ~s;
            for (Basis b : {Basis::M, Basis::P, Basis::C})
                for (const auto& f : enumerate_compositions(s))
                    for (const auto& h : enumerate_compositions(t))
                        CHECK(project_ustar(multiply(BasisElement::vector(b, f),
                                                     BasisElement::vector(b, h)))
                                  .is_zero());
        });
    }
}

TEST_CASE("U and U* are dual")
{
    for (int n = 1; n <= 3; ++n) {
        Mask g = range_mask(n);
        for (Basis b : {Basis::M, Basis::P, Basis::C})
            for (const auto& x : enumerate_compositions(g))
                for (const auto& k : based_compositions(g)) {
                    auto xe = BasisElement::vector(b, x);
                    auto z = comb_element(k);
                    for (DualBasis db : {DualBasis::p, DualBasis::m, DualBasis::c})
                        CHECK(pairing(project_ustar(xe, db), z) == pairing(xe, embed_u(z)));
                }
    }
}

TEST_CASE("dual basis round trips")
{
    std::mt19937 rng(5);
    for (DualBasis a : {DualBasis::p, DualBasis::m, DualBasis::c})
        for (DualBasis b : {DualBasis::p, DualBasis::m, DualBasis::c}) {
            auto d = random_dual(set("1234"), a, rng);
            CHECK(change_basis(change_basis(d, b), a) == d);
        }
}

TEST_CASE("bracket")
{
    CHECK(bracket(z_of({{"1", 1}}), z_of({{"2", 1}})) == z_of({{"1,2", 1}}));
    CHECK_THROWS_AS(bracket(z_of({{"1", 1}}), z_of({{"12", 1}})), DomainError);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_zie(set("13"), rng);
        auto b = random_zie(set("24"), rng);
        auto c = random_zie(set("5"), rng);
        CHECK(bracket(a, b) == Rational(-1) * bracket(b, a));
        // Jacobi
        auto j = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
        CHECK(j.is_zero());
        // commutator in Sigma
        auto ua = embed_u(a), ub = embed_u(b);
        CHECK(embed_u(bracket(a, b)) == multiply(ua, ub) - multiply(ub, ua));
    }
}

TEST_CASE("cobracket")
{
    ZieDualElement p12{set("12"), DualBasis::p, {}};
    p12.add(comp("1,2"), 1);
    auto t = cobracket(p12, set("1"), set("2"));
    CHECK(t.terms == std::map<std::pair<SetComposition, SetComposition>, Rational>{
                         {{comp("1"), comp("2")}, 1}});
    ZieDualElement one{set("123"), DualBasis::p, {}};
    one.add(comp("123"), 1);
    CHECK(cobracket(one, set("1"), set("23")).is_zero());
    CHECK_THROWS_AS(cobracket(one, set("12"), 0), DomainError);

    std::mt19937 rng(9);
    Mask g = set("1234");
    for (int trial = 0; trial < 10; ++trial) {
        for (DualBasis db : {DualBasis::p, DualBasis::m, DualBasis::c}) {
            auto d = random_dual(g, db, rng);
            for_each_subset(g, [&](Mask s) {
                if (s == 0 || s == g)
                    return;
                Mask r = g & ~s;
                auto st = cobracket(d, s, r);
                auto ts = cobracket(d, r, s);
                // co-antisymmetry
                ZieDualTensor swapped{s, r, {}};
                for (const auto& [k, c] : ts.terms)
                    swapped.add(k.second, k.first, -c);
                CHECK(st == swapped);
                // dual to the bracket
                auto z1 = random_zie(s, rng);
                auto z2 = random_zie(r, rng);
                CHECK(pair_tensor(st, z1, z2) == pairing(d, bracket(z1, z2)));
            });
        }
    }
}

TEST_CASE("co-Jacobi")
{
    std::mt19937 rng(13);
    Mask g = set("1234");
    using Key = std::tuple<SetComposition, SetComposition, SetComposition>;
    for (int trial = 0; trial < 5; ++trial) {
        auto d = random_dual(g, DualBasis::p, rng);
        Mask parts[3] = {set("13"), set("2"), set("4")};
        std::map<Key, Rational> total;
        // sum over cyclic rotations of (A,B,C) of (cobracket_{A,B} (x) id) cobracket_{AB,C}
        for (int rot = 0; rot < 3; ++rot) {
            Mask a = parts[rot], b = parts[(rot + 1) % 3], c = parts[(rot + 2) % 3];
            for (const auto& [k, v] : cobracket(d, a | b, c).terms) {
                ZieDualElement left{a | b, DualBasis::p, {}};
                left.add(k.first, 1);
                for (const auto& [k2, v2] : cobracket(left, a, b).terms) {
                    SetComposition xs[3];
                    xs[rot] = k2.first;
                    xs[(rot + 1) % 3] = k2.second;
                    xs[(rot + 2) % 3] = k.second;
                    auto& slot = total[{xs[0], xs[1], xs[2]}];
                    slot += v * v2;
                }
            }
        }
        bool zero = true;
        for (const auto& [k, v] : total)
            if (v != 0)
                zero = false;
        CHECK(zero);
    }
}

TEST_CASE("relabel commutes with bracket and U")
{
    std::mt19937 rng(21);
    std::pair<int, int> pairs[] = {{0, 3}, {1, 1}, {2, 0}, {3, 2}};
    auto r = Relabeling::from_pairs(pairs);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_zie(set("14"), rng);
        auto b = random_zie(set("23"), rng);
        auto ab = bracket(a, b);
        CHECK(relabel(ab, r) == bracket(relabel(a, r.restrict_to(set("14"))), relabel(b, r.restrict_to(set("23")))));
        CHECK(embed_u(relabel(ab, r)) == relabel(embed_u(ab), r));
    }
}
